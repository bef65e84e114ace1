"""Built-in presentations of the nilpotent Lie algebras of dimension at
most six, with the expected bonding verdicts.

Names follow the standard classification labels L_{d,k} (valid away
from characteristic two); the four parametric dimension-6 families
L6,19 / L6,21 / L6,22 / L6,24 take a field element epsilon.  Entries
are embedded data so all checks are hermetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Algebra
from .errors import CharTwo, MissingEpsilon, UnexpectedEpsilon, UnknownName
from .fields import Field
from .structure import decide_cb_cl

__all__ = ["CatalogEntry", "CatalogRow", "entries", "names", "get_entry", "check_catalog",
           "default_epsilon_samples"]

_EPS = "eps"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    parametric: bool
    products: tuple  # ((i, j, ((k, coeff-or-"eps"), ...)), ...)
    expected_cb: bool
    expected_reason: str  # "cube_zero" | "witness_triple"
    witness_kind: Optional[str]  # "left": e1(e1 e2) != 0, "right": (e1 e2)e2 != 0


def _prods(d: dict) -> tuple:
    return tuple(
        (i, j, tuple(sorted(res.items())))
        for (i, j), res in sorted(d.items())
    )


def _entry(name, dim, products, cb, witness_kind=None, parametric=False):
    return CatalogEntry(
        name=name,
        dim=dim,
        parametric=parametric,
        products=_prods(products),
        expected_cb=cb,
        expected_reason="cube_zero" if cb else "witness_triple",
        witness_kind=witness_kind,
    )


_L32 = {(1, 2): {3: 1}}
_L43 = {(1, 2): {3: 1}, (1, 3): {4: 1}}
_L54 = {(1, 2): {5: 1}, (3, 4): {5: 1}}
_L55 = {(1, 2): {3: 1}, (1, 3): {5: 1}, (2, 4): {5: 1}}
_L56 = {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1}}
_L57 = {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}}
_L58 = {(1, 2): {4: 1}, (1, 3): {5: 1}}
_L59 = {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {5: 1}}

CATALOG = (
    _entry("L1,1", 1, {}, True),
    _entry("L2,1", 2, {}, True),
    _entry("L3,1", 3, {}, True),
    _entry("L3,2", 3, _L32, True),
    # dimension 4: the first two extend dimension-3 entries by a central line
    _entry("L4,1", 4, {}, True),
    _entry("L4,2", 4, _L32, True),
    _entry("L4,3", 4, _L43, False, "left"),
    # dimension 5
    _entry("L5,1", 5, {}, True),
    _entry("L5,2", 5, _L32, True),
    _entry("L5,3", 5, _L43, False, "left"),
    _entry("L5,4", 5, _L54, True),
    _entry("L5,5", 5, _L55, False, "left"),
    _entry("L5,6", 5, _L56, False, "left"),
    _entry("L5,7", 5, _L57, False, "left"),
    _entry("L5,8", 5, _L58, True),
    _entry("L5,9", 5, _L59, False, "left"),
    # dimension 6
    _entry("L6,1", 6, {}, True),
    _entry("L6,2", 6, _L32, True),
    _entry("L6,3", 6, _L43, False, "left"),
    _entry("L6,4", 6, _L54, True),
    _entry("L6,5", 6, _L55, False, "left"),
    _entry("L6,6", 6, _L56, False, "left"),
    _entry("L6,7", 6, _L57, False, "left"),
    _entry("L6,8", 6, _L58, True),
    _entry("L6,9", 6, _L59, False, "left"),
    _entry("L6,10", 6, {(1, 2): {3: 1}, (1, 3): {6: 1}, (4, 5): {6: 1}}, False, "left"),
    _entry("L6,11", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {6: 1}, (2, 3): {6: 1},
                        (2, 5): {6: 1}}, False, "left"),
    _entry("L6,12", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {6: 1}, (2, 5): {6: 1}},
           False, "left"),
    _entry("L6,13", 6, {(1, 2): {3: 1}, (1, 3): {5: 1}, (2, 4): {5: 1}, (1, 5): {6: 1},
                        (3, 4): {6: 1}}, False, "left"),
    _entry("L6,14", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1},
                        (2, 5): {6: 1}, (3, 4): {6: -1}}, False, "left"),
    _entry("L6,15", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1},
                        (1, 5): {6: 1}, (2, 4): {6: 1}}, False, "left"),
    _entry("L6,16", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 5): {6: 1},
                        (3, 4): {6: -1}}, False, "left"),
    _entry("L6,17", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (1, 5): {6: 1},
                        (2, 3): {6: 1}}, False, "left"),
    _entry("L6,18", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (1, 5): {6: 1}},
           False, "left"),
    _entry("L6,19", 6, {(1, 2): {4: 1}, (1, 3): {5: 1}, (2, 4): {6: 1}, (3, 5): {6: _EPS}},
           False, "right", parametric=True),
    _entry("L6,20", 6, {(1, 2): {4: 1}, (1, 3): {5: 1}, (1, 5): {6: 1}, (2, 4): {6: 1}},
           False, "right"),
    _entry("L6,21", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {5: 1}, (1, 4): {6: 1},
                        (2, 5): {6: _EPS}}, False, "left", parametric=True),
    _entry("L6,22", 6, {(1, 2): {5: 1}, (1, 3): {6: 1}, (2, 4): {6: _EPS}, (3, 4): {5: 1}},
           True, parametric=True),
    _entry("L6,23", 6, {(1, 2): {3: 1}, (1, 3): {5: 1}, (1, 4): {6: 1}, (2, 4): {5: 1}},
           False, "left"),
    _entry("L6,24", 6, {(1, 2): {3: 1}, (1, 3): {5: 1}, (1, 4): {6: _EPS}, (2, 3): {6: 1},
                        (2, 4): {5: 1}}, False, "left", parametric=True),
    _entry("L6,25", 6, {(1, 2): {3: 1}, (1, 3): {5: 1}, (1, 4): {6: 1}}, False, "left"),
    _entry("L6,26", 6, {(1, 2): {4: 1}, (1, 3): {5: 1}, (2, 3): {6: 1}}, True),
)

_BY_NAME = {e.name.upper(): e for e in CATALOG}


def entries() -> tuple:
    return CATALOG


def names() -> tuple:
    return tuple(e.name for e in CATALOG)


def _normalize(name: str) -> str:
    return name.strip().upper().replace("_", ",").replace(" ", "")


def get_entry(name: str, field: Field, epsilon=None) -> Algebra:
    """Instantiate a catalog presentation over the given field."""
    if field.characteristic() == 2:
        raise CharTwo("the catalog is classified away from characteristic two")
    entry = _BY_NAME.get(_normalize(name))
    if entry is None:
        raise UnknownName(f"no catalog entry named {name!r}")
    if entry.parametric and epsilon is None:
        raise MissingEpsilon(f"{entry.name} takes a parameter epsilon")
    if not entry.parametric and epsilon is not None:
        raise UnexpectedEpsilon(f"{entry.name} does not take a parameter")
    products = {}
    for (i, j, res) in entry.products:
        row = {}
        for k, coeff in res:
            value = field.canon(epsilon) if coeff == _EPS else field.canon(coeff)
            if not field.is_zero(value):
                row[k] = value
        if row:
            products[(i, j)] = row
    return Algebra.from_products(field, entry.dim, products, anticommutative=True)


def default_epsilon_samples(field: Field) -> tuple:
    """All residues over F_p; {0, 1, -1, 2} over Q."""
    p = field.characteristic()
    if p:
        return tuple(field.canon(v) for v in range(p))
    return tuple(field.canon(v) for v in (0, 1, -1, 2))


@dataclass(frozen=True)
class CatalogRow:
    name: str
    dim: int
    parametric: bool
    expected_cb: bool
    samples: tuple  # ((epsilon-or-None, computed_cb, l3_zero), ...)
    match: bool

    @property
    def computed_cb(self):
        verdicts = {s[1] for s in self.samples}
        return verdicts.pop() if len(verdicts) == 1 else None

    @property
    def l3_zero(self):
        flags = {s[2] for s in self.samples}
        return flags.pop() if len(flags) == 1 else None


def _cube_is_zero(A: Algebra) -> bool:
    full = A.full_space()
    sq = A.subspace_product(full, full)
    return A.subspace_product(sq, full).is_zero()


def check_catalog(field: Field, epsilon_samples: Optional[Sequence] = None) -> list:
    """Structural bonding verdict for every entry against the expected one.

    Parametric entries are instantiated at every sample; a row matches
    only if all samples do.  The l3_zero flag records L^3 = 0, which
    coincides with the verdict away from characteristics two and three.
    """
    if field.characteristic() == 2:
        raise CharTwo("the catalog is classified away from characteristic two")
    if epsilon_samples is None:
        epsilon_samples = default_epsilon_samples(field)
    rows = []
    for entry in CATALOG:
        eps_values = tuple(epsilon_samples) if entry.parametric else (None,)
        samples = []
        for eps in eps_values:
            A = get_entry(entry.name, field, eps)
            verdict = decide_cb_cl(A, "theorem").is_cb
            samples.append((eps, verdict, _cube_is_zero(A)))
        match = all(s[1] == entry.expected_cb for s in samples)
        rows.append(
            CatalogRow(
                name=entry.name,
                dim=entry.dim,
                parametric=entry.parametric,
                expected_cb=entry.expected_cb,
                samples=tuple(samples),
                match=match,
            )
        )
    return rows
