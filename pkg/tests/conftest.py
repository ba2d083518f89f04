"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own algorithms:
char_poly_laplace expands the characteristic determinant by cofactors over
polynomial entries, and min_poly_scan finds the minimal polynomial by
enumerating monic candidates in encoding order.
"""

import random

import pytest

from weakper.gf import build_field
from weakper.mat import Mat
from weakper.poly import Poly

SEED = 1729


@pytest.fixture(scope="session")
def gf2():
    return build_field(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return build_field(5, 1)


@pytest.fixture(scope="session")
def gf7():
    return build_field(7, 1)


@pytest.fixture(scope="session")
def gf8():
    return build_field(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


def poly_at_matrix(f, M):
    """Evaluate a polynomial at a matrix by Horner's rule."""
    spec, n = M.spec, M.n
    acc = Mat.zeros(spec, n)
    for c in reversed(f.coeffs):
        acc = acc * M + Mat.identity(spec, n).scale(c)
    return acc


def _poly_det(entries, size):
    if size == 1:
        return entries[0][0]
    total = None
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * _poly_det(minor, size - 1)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def char_poly_laplace(M):
    """det(X*I - M) by cofactor expansion over polynomial entries."""
    spec, n = M.spec, M.n
    x = Poly.x(spec)
    entries = [
        [
            (x - Poly.constant(spec, M.entry(i, j))) if i == j
            else -Poly.constant(spec, M.entry(i, j))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries, n)


def min_poly_scan(M):
    """Smallest-degree monic annihilator, found by scanning candidates in
    encoding order; unique at the minimal degree."""
    import itertools
    spec, n = M.spec, M.n
    zero = Mat.zeros(spec, n)
    for d in range(1, n + 1):
        for low in itertools.product(range(spec.order), repeat=d):
            f = Poly(spec, low + (1,))
            if poly_at_matrix(f, M) == zero:
                return f
    raise AssertionError("Cayley-Hamilton guarantees an annihilator")


def random_matrix(rng, spec, n):
    return Mat.from_rows(
        spec,
        [tuple(rng.randrange(spec.order) for _ in range(n)) for _ in range(n)],
    )


@pytest.fixture
def seeded_rng():
    return random.Random(SEED)
