"""The .alg file format: JSON text describing one algebra plus optional
decomposition and generator blocks.

    {
      "field": {"type": "Q"}            or {"type": "Fp", "p": 5},
      "dim": 3,
      "labels": ["e1", "e2", "e3"],     optional, defaults to e1..en
      "anticommutative": true,
      "products": [
        {"left": 1, "right": 2, "result": [{"k": 3, "c": "1"}]}
      ],
      "decomposition": { ... },         optional
      "generators": [ [["0","1","0"], ...], ... ]   optional
    }

Indices are 1-based; unlisted products are zero.  Anticommutative
files may only list left < right pairs.  Scalar strings parse in the
owning field's canonical form; rendering always emits it, so
render(parse(t)) parses back to an identical algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra
from .construct import DecompositionData
from .errors import (
    BadIndex,
    CbalgError,
    DiagonalInAnticommutative,
    ParseError,
)
from .fields import Field, PrimeField, Rationals
from .linalg import Matrix

__all__ = ["ParsedFile", "parse_algebra_text", "parse_algebra_file", "render_algebra"]


@dataclass(frozen=True)
class ParsedFile:
    algebra: Algebra
    decomposition: Optional[DecompositionData]
    generators: Optional[tuple]


_TOP_KEYS = {"field", "dim", "labels", "anticommutative", "products", "decomposition", "generators"}


def _field_from_block(block) -> Field:
    if not isinstance(block, dict) or "type" not in block:
        raise ParseError('field block must be {"type": "Q"} or {"type": "Fp", "p": <prime>}')
    if block["type"] == "Q":
        if set(block) != {"type"}:
            raise ParseError("field block for Q takes no other keys")
        return Rationals()
    if block["type"] == "Fp":
        if set(block) != {"type", "p"} or not isinstance(block.get("p"), int):
            raise ParseError('prime field block must be {"type": "Fp", "p": <prime>}')
        try:
            return PrimeField(block["p"])
        except CbalgError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field type {block['type']!r}")


def _scalar(field: Field, value, where: str):
    if isinstance(value, bool):
        raise ParseError(f"{where}: scalar must be a string or integer")
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, str):
        return field.parse(value)
    raise ParseError(f"{where}: scalar must be a string or integer, got {type(value).__name__}")


def parse_algebra_text(text: str, field_override: Optional[Field] = None) -> ParsedFile:
    """Parse one .alg document; scalars reparse under field_override if given."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("field", "dim"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    field = field_override if field_override is not None else _field_from_block(doc["field"])
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("dim must be a non-negative integer")
    labels = doc.get("labels")
    if labels is not None:
        if (
            not isinstance(labels, list)
            or len(labels) != dim
            or not all(isinstance(s, str) for s in labels)
        ):
            raise ParseError(f"labels must be {dim} strings")
    anticomm = doc.get("anticommutative", False)
    if not isinstance(anticomm, bool):
        raise ParseError("anticommutative must be a boolean")

    products = {}
    for entry in doc.get("products", []):
        if not isinstance(entry, dict) or set(entry) != {"left", "right", "result"}:
            raise ParseError("each product needs exactly left, right and result")
        i, j = entry["left"], entry["right"]
        if not (isinstance(i, int) and isinstance(j, int)):
            raise ParseError("product indices must be integers")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise BadIndex(f"product index ({i},{j}) out of range 1..{dim}")
        if anticomm:
            if i == j:
                raise DiagonalInAnticommutative(
                    f"anticommutative file lists the diagonal product ({i},{i})"
                )
            if i > j:
                raise ParseError(f"anticommutative files list only left < right pairs, got ({i},{j})")
        if (i, j) in products:
            raise ParseError(f"duplicate product entry for ({i},{j})")
        row = {}
        for item in entry["result"]:
            if not isinstance(item, dict) or set(item) != {"k", "c"}:
                raise ParseError("each result term needs exactly k and c")
            k = item["k"]
            if not isinstance(k, int) or not 1 <= k <= dim:
                raise BadIndex(f"result index {k} out of range 1..{dim}")
            if k in row:
                raise ParseError(f"duplicate result index {k} in product ({i},{j})")
            row[k] = _scalar(field, item["c"], f"product ({i},{j})")
        products[(i, j)] = row

    algebra = Algebra.from_products(field, dim, products, anticommutative=anticomm, labels=labels)

    decomposition = None
    if "decomposition" in doc:
        decomposition = _parse_decomposition(field, doc["decomposition"])

    generators = None
    if "generators" in doc:
        gens = doc["generators"]
        if not isinstance(gens, list):
            raise ParseError("generators must be a list of matrices")
        parsed = []
        for gi, rows in enumerate(gens):
            if not isinstance(rows, list) or len(rows) != dim:
                raise ParseError(f"generator {gi + 1} must have {dim} rows")
            entries = []
            for row in rows:
                if not isinstance(row, list) or len(row) != dim:
                    raise ParseError(f"generator {gi + 1} must be {dim}x{dim}")
                entries.append(tuple(_scalar(field, v, f"generator {gi + 1}") for v in row))
            parsed.append(Matrix(field, tuple(entries), dim))
        generators = tuple(parsed)

    return ParsedFile(algebra, decomposition, generators)


def _parse_decomposition(field: Field, block) -> DecompositionData:
    keys = {"r", "dimB", "dimZ", "e", "zij", "zijk"}
    if not isinstance(block, dict) or not keys.issuperset(block) or not {"r", "dimB", "dimZ"} <= set(block):
        raise ParseError("decomposition block needs r, dimB, dimZ and optional e, zij, zijk")
    r, dim_b, dim_z = block["r"], block["dimB"], block["dimZ"]
    if not all(isinstance(v, int) and v >= 0 for v in (r, dim_b, dim_z)):
        raise ParseError("decomposition dimensions must be non-negative integers")

    def coords(item, width, where):
        c = item.get("coords")
        if not isinstance(c, list) or len(c) != width:
            raise ParseError(f"{where}: coords must be a list of {width} scalars")
        return tuple(_scalar(field, v, where) for v in c)

    e = {}
    for item in block.get("e", []):
        if not isinstance(item, dict) or set(item) != {"i", "j", "coords"}:
            raise ParseError("each e entry needs i, j, coords")
        e[(item["i"], item["j"])] = coords(item, dim_b, "decomposition e")
    zij = {}
    for item in block.get("zij", []):
        if not isinstance(item, dict) or set(item) != {"i", "j", "coords"}:
            raise ParseError("each zij entry needs i, j, coords")
        zij[(item["i"], item["j"])] = coords(item, dim_z, "decomposition zij")
    zijk = {}
    for item in block.get("zijk", []):
        if not isinstance(item, dict) or set(item) != {"i", "j", "k", "coords"}:
            raise ParseError("each zijk entry needs i, j, k, coords")
        zijk[(item["i"], item["j"], item["k"])] = coords(item, dim_z, "decomposition zijk")
    try:
        return DecompositionData(field, r, dim_b, dim_z, e, zij, zijk)
    except CbalgError as exc:
        raise ParseError(str(exc)) from exc


def parse_algebra_file(path, field_override: Optional[Field] = None) -> ParsedFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read(), field_override)


def _field_block(field: Field):
    if isinstance(field, PrimeField):
        return {"type": "Fp", "p": field.p}
    return {"type": "Q"}


def render_algebra(
    A: Algebra,
    decomposition: Optional[DecompositionData] = None,
    generators: Optional[tuple] = None,
) -> str:
    """Canonical .alg text; nonzero products only, sorted indices."""
    F = A.field
    doc = {
        "field": _field_block(F),
        "dim": A.dim,
        "labels": list(A.labels),
        "anticommutative": A.anticommutative,
    }
    products = []
    for i in range(1, A.dim + 1):
        j_start = i + 1 if A.anticommutative else 1
        for j in range(j_start, A.dim + 1):
            vec = A.table[i - 1][j - 1]
            result = [
                {"k": k + 1, "c": F.render(vec[k])}
                for k in range(A.dim)
                if not F.is_zero(vec[k])
            ]
            if result:
                products.append({"left": i, "right": j, "result": result})
    doc["products"] = products
    if decomposition is not None:
        doc["decomposition"] = {
            "r": decomposition.r,
            "dimB": decomposition.dim_b,
            "dimZ": decomposition.dim_z,
            "e": [
                {"i": i, "j": j, "coords": [F.render(x) for x in vec]}
                for (i, j), vec in sorted(decomposition.e.items())
            ],
            "zij": [
                {"i": i, "j": j, "coords": [F.render(x) for x in vec]}
                for (i, j), vec in sorted(decomposition.zij.items())
            ],
            "zijk": [
                {"i": i, "j": j, "k": k, "coords": [F.render(x) for x in vec]}
                for (i, j, k), vec in sorted(decomposition.zijk.items())
            ],
        }
    if generators is not None:
        doc["generators"] = [
            [[F.render(x) for x in row] for row in g.entries] for g in generators
        ]
    return json.dumps(doc, indent=2) + "\n"
