#!/usr/bin/env python3
"""Regenerate the bundled .alg corpus under src/cbalg/data/corpus.

Run from the repository root after changing the catalog or the file
format; the output is committed so users and tests get real files.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from cbalg.algebra import Algebra
from cbalg.catalog import entries, get_entry
from cbalg.construct import DecompositionData, example_seven
from cbalg.fields import Rationals
from cbalg.fileformat import render_algebra
from cbalg.linalg import Matrix

OUT = Path(__file__).resolve().parents[1] / "src" / "cbalg" / "data" / "corpus"

Q = Rationals()
one, zero = Q.one(), Q.zero()


def write(name: str, text: str):
    (OUT / name).write_text(text, encoding="utf-8")
    print(f"wrote {name}")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    # every catalog entry over Q; parametric families at eps = 1
    for entry in entries():
        eps = Q.one() if entry.parametric else None
        A = get_entry(entry.name, Q, eps)
        fname = entry.name.lower().replace(",", "") + ".alg"
        write(fname, render_algebra(A))

    # the Heisenberg algebra with its order-two swap-and-negate action
    heis = get_entry("L3,2", Q)
    swap = Matrix.from_rows(Q, [[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    write("heisenberg.alg", render_algebra(heis, generators=(swap,)))

    # the smallest algebra without commutative bonding: [e1,e2] = e2
    two = Algebra.from_products(Q, 2, {(1, 2): {2: 1}}, anticommutative=True)
    write("solvable2d.alg", render_algebra(two))

    # the symmetric Leibniz algebra [e1,e1] = e2
    leib = Algebra.from_products(Q, 2, {(1, 1): {2: 1}}, anticommutative=False)
    write("symleibniz.alg", render_algebra(leib))

    # the seven dimensional algebra, plus its decomposition data
    a7 = example_seven(Q)
    decomp = DecompositionData(
        Q,
        r=3,
        dim_b=3,
        dim_z=1,
        e={(1, 2): (one, zero, zero), (1, 3): (zero, one, zero), (2, 3): (zero, zero, one)},
        zij={},
        zijk={(1, 2, 3): (one,)},
    )
    write("example47.alg", render_algebra(a7, decomposition=decomp))

    # short alias used in the docs
    l43 = get_entry("L4,3", Q)
    write("l43.alg", render_algebra(l43))


if __name__ == "__main__":
    main()
