"""Shared fixtures and the acceptance-summary hook."""

import pytest

from cbalg import kernels
from cbalg.algebra import Algebra
from cbalg.fields import PrimeField, Rationals

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for num, desc, status in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(f"criterion {num:>2}  {status:<4}  {desc}")


@pytest.fixture
def criterion():
    def run(num, desc, fn):
        try:
            fn()
        except BaseException:
            ACCEPTANCE_RESULTS.append((num, desc, "FAIL"))
            print(f"criterion {num} ({desc}): FAIL")
            raise
        ACCEPTANCE_RESULTS.append((num, desc, "PASS"))
        print(f"criterion {num} ({desc}): PASS")

    return run


@pytest.fixture(scope="session")
def Q():
    return Rationals()


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # jit compilation happens once here, not inside timed acceptance runs
    kernels.warmup()


def heisenberg(field) -> Algebra:
    return Algebra.from_products(field, 3, {(1, 2): {3: 1}}, anticommutative=True)


def l43(field) -> Algebra:
    return Algebra.from_products(
        field, 4, {(1, 2): {3: 1}, (1, 3): {4: 1}}, anticommutative=True
    )


def two_dim_solvable(field) -> Algebra:
    return Algebra.from_products(field, 2, {(1, 2): {2: 1}}, anticommutative=True)


def square_leibniz(field) -> Algebra:
    # [e1, e1] = e2, the minimal non-Lie symmetric Leibniz algebra
    return Algebra.from_products(field, 2, {(1, 1): {2: 1}}, anticommutative=False)
