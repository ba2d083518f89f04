"""Companion matrices and the trace-matched weakly-periodic decomposition.

The companion matrix of a monic g = a_0 + a_1 X + ... + X^n is taken in
last-column convention: subdiagonal ones, last column (-a_0, ..., -a_{n-1}).
Two same-size companions then differ only in the last column, and they have
equal trace exactly when that difference squares to zero; building a potent
companion with the prescribed trace therefore decomposes any companion into
potent + square-zero parts.
"""

import dataclasses
import itertools

from .errors import (
    BadDimension,
    EnumerationTooLarge,
    FieldTooSmall,
    NotMonic,
    TraceNotRealizable,
    ZeroDegree,
)
from .mat import (
    Mat,
    is_potent,
    is_potent_iterative,
    is_square_zero,
    potency_exponent,
)
from .poly import Poly, is_squarefree

DEFAULT_ENUM_BOUND = 1 << 20


@dataclasses.dataclass(frozen=True)
class CompanionForm:
    """A monic polynomial together with its companion matrix."""
    poly: Poly
    matrix: Mat

    @property
    def n(self):
        return self.matrix.n

    @property
    def spec(self):
        return self.matrix.spec

    @property
    def low_coeffs(self):
        """(a_0, ..., a_{n-1}): the non-leading coefficients."""
        return self.poly.coeffs[:-1]

    def trace(self):
        return self.matrix.trace()


def companion_of(g):
    """Companion matrix of a monic polynomial of degree >= 1."""
    if g.is_zero() or not g.is_monic():
        raise NotMonic(f"companion form needs a monic polynomial, got {g!r}")
    n = g.degree
    if n < 1:
        raise ZeroDegree("companion form needs degree >= 1")
    spec = g.spec
    neg = spec._neg
    entries = [0] * (n * n)
    for i in range(1, n):
        entries[i * n + (i - 1)] = 1
    for i in range(n):
        entries[i * n + (n - 1)] = neg(g.coeffs[i])
    return CompanionForm(poly=g, matrix=Mat._raw(spec, n, tuple(entries)))


def enumerate_companions(n, spec, bound=DEFAULT_ENUM_BOUND):
    """All q^n companion matrices, ordered by the tuple (a_0, ..., a_{n-1})."""
    if not isinstance(n, int) or n < 1:
        raise BadDimension(f"dimension must be >= 1, got {n!r}")
    q = spec.order
    if q ** n > bound:
        raise EnumerationTooLarge(
            f"{q}^{n} companion matrices exceed the bound {bound}")
    for low in itertools.product(range(q), repeat=n):
        yield companion_of(Poly._raw(spec, low + (1,)))


def potent_companion_with_trace(t, n, spec):
    """A potent companion matrix with trace t, via n distinct base-field
    roots.

    Root choice is deterministic: the lexicographically first size-n subset
    of the field (in encoding order) whose sum is t.  Requires q >= n + 1;
    when no subset hits the trace (possible in characteristic 2 for n = 2,
    t = 0) TraceNotRealizable is raised.
    """
    spec.check(t)
    if not isinstance(n, int) or n < 1:
        raise BadDimension(f"dimension must be >= 1, got {n!r}")
    q = spec.order
    if q < n + 1:
        raise FieldTooSmall(
            f"need q >= n + 1 distinct elements, got q={q}, n={n}")
    add = spec._add
    for roots in itertools.combinations(range(q), n):
        acc = 0
        for r in roots:
            acc = add(acc, r)
        if acc == t:
            g = Poly.one(spec)
            for r in roots:
                g = g * Poly(spec, (spec._neg(r), 1))
            return companion_of(g)
    raise TraceNotRealizable(
        f"no {n} distinct elements of GF({q}) sum to {t}")


@dataclasses.dataclass(frozen=True)
class Witness:
    """A decomposition C = potent + nilpotent with supporting data.

    exponent is the least t > 1 with potent^t = potent; commuting records
    whether the two parts commute; source is "constructive", "brute" or
    "brute_commuting".
    """
    potent: Mat
    nilpotent: Mat
    exponent: int
    commuting: bool
    source: str

    def verify(self, companion_matrix, require_commuting=False,
               check_iterative=False):
        """Re-check every claim this witness makes, from scratch."""
        P, N = self.potent, self.nilpotent
        if P + N != companion_matrix:
            return False
        if not is_square_zero(N):
            return False
        if not is_potent(P):
            return False
        if check_iterative and not is_potent_iterative(P):
            return False
        if potency_exponent(P) != self.exponent:
            return False
        if P ** self.exponent != P:
            return False
        if (P * N == N * P) != self.commuting:
            return False
        if require_commuting and not self.commuting:
            return False
        return True

    def serialize(self, form):
        return {
            "field": form.spec.descriptor(),
            "n": form.n,
            "companion_coeffs": list(form.low_coeffs),
            "P": self.potent.serialize(),
            "N": self.nilpotent.serialize(),
            "potency_exponent": self.exponent,
            "commuting": self.commuting,
            "source": self.source,
        }


def trace_matched_decomposition(form):
    """Decompose a companion matrix as potent + square-zero by matching
    the trace with a potent companion; the difference of two same-trace
    companions always squares to zero."""
    C = form.matrix
    P = potent_companion_with_trace(C.trace(), form.n, form.spec).matrix
    N = C - P
    return Witness(
        potent=P,
        nilpotent=N,
        exponent=potency_exponent(P),
        commuting=(P * N == N * P),
        source="constructive",
    )


def potent_trace_set(n, spec, bound=DEFAULT_ENUM_BOUND):
    """Traces of all potent companion matrices: { -a_{n-1} : g squarefree }.

    A companion matrix is non-derogatory, so it is potent exactly when its
    defining polynomial is squarefree.
    """
    if not isinstance(n, int) or n < 1:
        raise BadDimension(f"dimension must be >= 1, got {n!r}")
    q = spec.order
    if q ** n > bound:
        raise EnumerationTooLarge(
            f"{q}^{n} companion polynomials exceed the bound {bound}")
    out = set()
    neg = spec._neg
    for low in itertools.product(range(q), repeat=n):
        t = neg(low[-1])
        if t in out:
            continue
        if is_squarefree(Poly._raw(spec, low + (1,))):
            out.add(t)
            if len(out) == q:
                break
    return frozenset(out)
