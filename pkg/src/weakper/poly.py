"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored ascending (index = degree) in a canonical tuple with
no trailing zeros; the zero polynomial has an empty tuple and degree -1.
"""

import dataclasses
import itertools

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    InputError,
    ZeroPolynomial,
)
from .gf import DEFAULT_FIELD_BOUND, build_field, embed

FACTOR_DEGREE_CAP = 12


class Poly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        cs = [spec.check(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @staticmethod
    def _raw(spec, coeffs):
        # trusted: coeffs already canonical and validated
        p = object.__new__(Poly)
        p.spec = spec
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls, spec):
        return cls._raw(spec, ())

    @classmethod
    def one(cls, spec):
        return cls._raw(spec, (1,))

    @classmethod
    def x(cls, spec):
        return cls._raw(spec, (0, 1))

    @classmethod
    def constant(cls, spec, c):
        spec.check(c)
        return cls._raw(spec, (c,) if c else ())

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        return f"Poly({self.spec.descriptor()}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("X" if c == 1 else f"{c}*X")
            else:
                parts.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
        return " + ".join(parts)

    def _same_field(self, other):
        if self.spec != other.spec:
            raise FieldMismatch("polynomials live over different fields")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._same_field(other)
        spec = self.spec
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = spec._add(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return Poly._raw(spec, tuple(out))

    def __neg__(self):
        spec = self.spec
        return Poly._raw(spec, tuple(spec._neg(c) for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._same_field(other)
        spec = self.spec
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(spec)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = spec._add(out[i + j], spec._mul(ai, bj))
        while out and out[-1] == 0:
            out.pop()
        return Poly._raw(spec, tuple(out))

    def scale(self, c):
        spec = self.spec
        spec.check(c)
        if c == 0:
            return Poly.zero(spec)
        return Poly._raw(spec, tuple(spec._mul(a, c) for a in self.coeffs))

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._same_field(other)
        spec = self.spec
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(spec), self
        inv_lead = spec._inv(other.lead)
        rem = list(self.coeffs)
        dd = other.degree
        den = other.coeffs
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                c = spec._mul(c, inv_lead)
                quot[k - dd] = c
                off = k - dd
                for j in range(dd):
                    if den[j]:
                        rem[off + j] = spec._sub(rem[off + j],
                                                 spec._mul(c, den[j]))
            rem[k] = 0
        while rem and rem[-1] == 0:
            rem.pop()
        while quot and quot[-1] == 0:
            quot.pop()
        return Poly._raw(spec, tuple(quot)), Poly._raw(spec, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.spec._inv(self.coeffs[-1]))

    def derivative(self):
        spec = self.spec
        p = spec.p
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(spec._mul(self.coeffs[i], i % p))
        while out and out[-1] == 0:
            out.pop()
        return Poly._raw(spec, tuple(out))

    def evaluate(self, x):
        spec = self.spec
        spec.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = spec._add(spec._mul(acc, x), c)
        return acc

    def serialize(self):
        return list(self.coeffs)


def parse_poly(spec, text):
    """Parse "a0,a1,...,ak" into a Poly over spec."""
    if not isinstance(text, str) or not text.strip():
        raise InputError(f"cannot parse polynomial {text!r}")
    try:
        coeffs = [int(c) for c in text.strip().split(",")]
    except ValueError:
        raise InputError(f"cannot parse polynomial {text!r}") from None
    for c in coeffs:
        spec.check(c)
    return Poly(spec, coeffs)


def gcd(f, g):
    """Monic greatest common divisor."""
    f._same_field(g)
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base, e, mod):
    """base**e reduced modulo mod, without forming the full power."""
    base._same_field(mod)
    if not isinstance(e, int) or e < 0:
        raise InputError(f"exponent must be a non-negative integer, got {e!r}")
    if mod.degree < 1:
        raise ZeroPolynomial("modulus must have degree >= 1")
    result = Poly.one(base.spec) % mod
    b = base % mod
    while e:
        if e & 1:
            result = (result * b) % mod
        b = (b * b) % mod
        e >>= 1
    return result


def is_squarefree(f):
    """True when no irreducible factor of f repeats.

    Constants are squarefree by convention.  A nonconstant polynomial with
    zero derivative is a p-th power, hence never squarefree.
    """
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of 0 is undefined")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return gcd(f, d).degree == 0


def _monic_candidates(spec, d):
    for low in itertools.product(range(spec.order), repeat=d):
        yield Poly._raw(spec, low + (1,))


def factor(f):
    """Irreducible factorization of a nonzero polynomial.

    Returns ((factor, multiplicity), ...) with monic factors sorted by
    (degree, coefficient tuple); f equals lead * product.  Degrees above
    FACTOR_DEGREE_CAP are rejected to keep trial division bounded.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_CAP:
        raise DegreeOutOfRange(
            f"degree {f.degree} exceeds the factoring cap {FACTOR_DEGREE_CAP}")
    spec = f.spec
    work = f.monic()
    out = []
    d = 1
    while 2 * d <= work.degree:
        for cand in _monic_candidates(spec, d):
            if work.degree < 2 * d:
                break
            q, r = divmod(work, cand)
            if not r.is_zero():
                continue
            mult = 1
            work = q
            while True:
                q, r = divmod(work, cand)
                if not r.is_zero():
                    break
                mult += 1
                work = q
            out.append((cand, mult))
        d += 1
    if work.degree >= 1:
        # anything left has no factor of degree <= half its own, so it
        # is irreducible
        out.append((work, 1))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class ExtensionRoots:
    """Roots of a polynomial gathered across bounded extension fields.

    roots: ((encoding, FieldSpec), ...) sorted by (extension degree,
    encoding); each root is reported once in the canonical field where its
    minimal polynomial splits first.  unresolved: factors whose roots were
    not chased, either because their degree exceeds the requested maximum
    or because the residual could not be factored under the degree cap.
    """
    roots: tuple
    unresolved: tuple


def _roots_of_irreducible(g, field_bound):
    """All deg(g) roots of an irreducible g, in canonical GF(q^deg)."""
    spec = g.spec
    d = g.degree
    if d == 1:
        return [(spec._neg(spec._mul(g.coeffs[0], spec._inv(g.coeffs[1])))
                 if g.coeffs[1] != 1 else spec._neg(g.coeffs[0]), spec)]
    try:
        ext = build_field(spec.p, spec.l * d, field_bound)
    except DegreeOutOfRange:
        raise FieldTooLarge(
            f"roots of a degree-{d} factor need GF({spec.p}^{spec.l * d}), "
            f"beyond the bound {field_bound}") from None
    lifted = [embed(c, spec, ext) for c in g.coeffs]
    found = []
    for y in ext.elements():
        acc = 0
        for c in reversed(lifted):
            acc = ext._add(ext._mul(acc, y), c)
        if acc == 0:
            found.append((y, ext))
            if len(found) == d:
                break
    return found


def roots_in_extensions(f, max_degree, field_bound=DEFAULT_FIELD_BOUND):
    """Chase the roots of f through extensions GF(q^d) for d <= max_degree.

    Trial division strips irreducible factors of degree <= max_degree in
    ascending (degree, coefficients) order and collects their roots in the
    canonical extension; whatever remains is reported unresolved.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has every root")
    if not isinstance(max_degree, int) or max_degree < 1:
        raise InputError(
            f"max_degree must be a positive integer, got {max_degree!r}")
    spec = f.spec
    work = f.monic()
    roots = set()
    d = 1
    while d <= max_degree and work.degree >= 2 * d:
        for cand in _monic_candidates(spec, d):
            if work.degree < 2 * d:
                break
            q, r = divmod(work, cand)
            if not r.is_zero():
                continue
            work = q
            while True:
                q, r = divmod(work, cand)
                if r.is_zero():
                    work = q
                else:
                    break
            roots.update(_roots_of_irreducible(cand, field_bound))
        d += 1
    unresolved = []
    if work.degree >= 1:
        if work.degree < 2 * d:
            # small-degree factors are stripped, so any two remaining
            # factors would together exceed deg(work): work is irreducible
            if work.degree <= max_degree:
                roots.update(_roots_of_irreducible(work, field_bound))
            else:
                unresolved = [work]
        elif work.degree <= FACTOR_DEGREE_CAP:
            unresolved = [g for g, _ in factor(work)]
        else:
            unresolved = [work]
    return ExtensionRoots(
        roots=tuple(sorted(roots, key=lambda rf: (rf[1].l, rf[0]))),
        unresolved=tuple(unresolved),
    )
