"""Exact analysis of finite-dimensional nonassociative algebras.

Algebras are given by structure constants over Q or a prime field.
The package decides the commutative-bonding property (CB: x*y = 0
forces (x*z)*y = 0) and the centralizer-ideal property (CL) by two
independent routes, computes centers, centralizers and series, builds
algebras from three-subspace decompositions, ships the nilpotent Lie
catalog through dimension six with expected verdicts, analyzes
Leibniz algebras, and verifies finite group actions by automorphisms.
"""

from pathlib import Path

from .actions import (
    GroupAction,
    generate_group,
    is_automorphism,
    orbit,
    orbit_union,
    verify_cb_preservation,
)
from .algebra import Algebra, direct_sum
from .catalog import check_catalog, entries as catalog_entries, get_entry
from .construct import (
    DecompositionData,
    build_from_decomposition,
    example_seven,
    liesation,
    random_anticommutative,
    random_cb_algebra,
    random_general,
    random_graded,
    verify_decomposition,
)
from .errors import CbalgError
from .fields import PrimeField, Rationals, enumerate_vectors, field_from_spec
from .fileformat import parse_algebra_file, parse_algebra_text, render_algebra
from .identities import (
    all_absolute_zero_divisors,
    identity_report,
    is_anti_associative,
    is_anti_commutative,
    is_associative,
    is_leibniz,
    is_lie,
    is_symmetric_leibniz,
)
from .linalg import Matrix, Subspace, kernel, lattice, rref
from .structure import (
    DEFAULT_CAP,
    cb_element_subalgebra,
    cb_element_test,
    center,
    centralizer,
    decide_cb_cl,
    is_filiform,
    series,
)

__version__ = "0.1.0"


def corpus_dir() -> Path:
    """Directory with the bundled .alg example files."""
    return Path(__file__).parent / "data" / "corpus"
