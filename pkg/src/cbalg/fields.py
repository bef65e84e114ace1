"""Exact scalar arithmetic over the rationals and prime fields F_p.

Scalars are plain Python values: `fractions.Fraction` over Q, least
non-negative residues (`int`) over F_p.  The Field object that owns a
value performs all arithmetic, which keeps vectors and structure
tensors as cheap hashable tuples.  No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterator

from .errors import BadScalar, CapExceeded, InfiniteField, NotPrime

__all__ = ["Field", "Rationals", "PrimeField", "enumerate_vectors", "field_from_spec"]

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _is_prime(n: int) -> bool:
    # deterministic trial division; moduli here are tiny
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Interface shared by the two supported ground fields."""

    def characteristic(self) -> int:
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def canon(self, a):
        """Canonical form of a scalar-like value; idempotent."""
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def render(self, a) -> str:
        raise NotImplementedError


class Rationals(Field):
    """The field Q with arbitrary-precision Fraction scalars."""

    def characteristic(self) -> int:
        return 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def canon(self, a):
        return Fraction(a)

    def from_int(self, k: int):
        return Fraction(k)

    def parse(self, text: str):
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise BadScalar(f"{text!r} is not a rational scalar (expected 'a' or 'a/b')")
        f = Fraction(text)
        return f

    def render(self, a) -> str:
        return str(Fraction(a))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """The prime field F_p with residues stored as ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p

    def characteristic(self) -> int:
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def canon(self, a):
        return int(a) % self.p

    def from_int(self, k: int):
        return k % self.p

    def parse(self, text: str):
        # any integer, or a/b with b invertible, reduces to a residue;
        # this lets rational tables be reinterpreted under --field overrides
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise BadScalar(f"{text!r} is not a scalar over F_{self.p}")
        if "/" in text:
            num, den = text.split("/")
            d = int(den) % self.p
            if d == 0:
                raise BadScalar(f"{text!r} has a denominator divisible by {self.p}")
            return (int(num) * pow(d, -1, self.p)) % self.p
        return int(text) % self.p

    def render(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


def field_from_spec(text: str) -> Field:
    """Parse a field name such as 'Q', 'F5' or 'Fp:5'."""
    t = text.strip()
    if t in ("Q", "q"):
        return Rationals()
    m = re.match(r"^[Ff]p?:?(\d+)$", t) or re.match(r"^[Ff]p:(\d+)$", t)
    if m:
        return PrimeField(int(m.group(1)))
    raise BadScalar(f"unknown field {text!r} (expected Q, F<p> or Fp:<p>)")


def enumerate_vectors(field: Field, n: int, cap: int) -> Iterator[tuple]:
    """All p^n coordinate vectors of F_p^n in lexicographic residue order.

    Raises InfiniteField over Q and CapExceeded when p^n > cap.
    """
    if not isinstance(field, PrimeField):
        raise InfiniteField("cannot enumerate vectors over an infinite field")
    total = field.p ** n
    if total > cap:
        raise CapExceeded(f"{field.p}^{n} = {total} exceeds cap {cap}")
    return (tuple(v) for v in itertools.product(range(field.p), repeat=n))
