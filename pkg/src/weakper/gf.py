"""Finite fields GF(p^l) with integer-encoded elements.

A field is realized as GF(p)[X] modulo the lexicographically smallest monic
irreducible of degree l (coefficient tuples compared in ascending order, low
degree first).  An element is the integer sum(digit[i] * p**i), so encodings
run from 0 to p^l - 1 and the encoding order is total and deterministic.

Prime fields use the sentinel modulus X, stored as (0, 1).
"""

import functools
import itertools
import math

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    InputError,
    NoRootFound,
    NotASubfield,
    NotPrime,
)

DEFAULT_FIELD_BOUND = 1 << 20

# exp/log multiplication tables are built lazily for extension fields up to
# this order; dense addition tables for odd characteristic up to the smaller
# bound.  Larger fields fall back to digit arithmetic.
_MUL_TABLE_BOUND = 1 << 16
_ADD_TABLE_BOUND = 1 << 10


def is_prime(n):
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def _tup_remainder(num, den, p):
    """Remainder of num modulo monic den, both ascending coefficient tuples."""
    work = [c % p for c in num]
    dd = len(den) - 1
    for k in range(len(work) - 1, dd - 1, -1):
        c = work[k]
        if c:
            off = k - dd
            for j in range(dd):
                work[off + j] = (work[off + j] - c * den[j]) % p
            work[k] = 0
    while work and work[-1] == 0:
        work.pop()
    return tuple(work)


def _tup_eval(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _tup_is_irreducible(f, p):
    l = len(f) - 1
    if l == 1:
        return True
    if f[0] == 0:
        return False
    if any(_tup_eval(f, x, p) == 0 for x in range(p)):
        return False
    for d in range(2, l // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _tup_remainder(f, low + (1,), p):
                return False
    return True


def _smallest_irreducible(p, l):
    if l == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=l):
        if low[0] == 0:
            continue
        cand = low + (1,)
        if _tup_is_irreducible(cand, p):
            return cand
    raise NoRootFound(f"no irreducible of degree {l} over GF({p})")


class FieldSpec:
    """A concrete finite field: prime, extension degree, and modulus.

    Public arithmetic (add, mul, ...) validates operands; the underscore
    variants assume valid encodings and are the hot path for the rest of
    the package.
    """

    __slots__ = ("p", "l", "order", "modulus", "_hash", "_exp", "_log",
                 "_add_table", "_gen")

    def __init__(self, p, l, modulus):
        self.p = p
        self.l = l
        self.order = p ** l
        self.modulus = tuple(modulus)
        self._hash = hash((p, l, self.modulus))
        self._exp = None
        self._log = None
        self._add_table = None
        self._gen = None

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.l, self.modulus) == (other.p, other.l,
                                                  other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldSpec({self.descriptor()})"

    def descriptor(self):
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"{self.p}^{self.l}/{coeffs}"

    def check(self, x):
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise FieldMismatch(
                f"{x!r} is not an element encoding of GF({self.p}^{self.l})")
        return x

    def elements(self):
        """All elements in ascending encoding order."""
        return range(self.order)

    def digits(self, x):
        """Base-p digits of x, ascending, always length l."""
        self.check(x)
        p = self.p
        out = []
        for _ in range(self.l):
            out.append(x % p)
            x //= p
        return tuple(out)

    def from_digits(self, digs):
        if len(digs) > self.l:
            raise FieldMismatch(
                f"expected at most {self.l} digits, got {len(digs)}")
        out = 0
        for d in reversed(digs):
            if not isinstance(d, int) or not 0 <= d < self.p:
                raise FieldMismatch(f"{d!r} is not a base-{self.p} digit")
            out = out * self.p + d
        return out

    # unchecked arithmetic

    def _add(self, x, y):
        if self.p == 2:
            return x ^ y
        if self.l == 1:
            return (x + y) % self.p
        table = self._add_table
        if table is None and self.order <= _ADD_TABLE_BOUND:
            table = self._build_add_table()
        if table is not None:
            return table[x * self.order + y]
        p = self.p
        out = 0
        shift = 1
        while x or y:
            out += ((x + y) % p) * shift
            x //= p
            y //= p
            shift *= p
        return out

    def _neg(self, x):
        if self.p == 2:
            return x
        if self.l == 1:
            return -x % self.p
        p = self.p
        out = 0
        shift = 1
        while x:
            out += (-x % p) * shift
            x //= p
            shift *= p
        return out

    def _sub(self, x, y):
        if self.p == 2:
            return x ^ y
        return self._add(x, self._neg(y))

    def _mul(self, x, y):
        if self.l == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        exp = self._exp
        if exp is None and self.order <= _MUL_TABLE_BOUND:
            self._build_mul_tables()
            exp = self._exp
        if exp is not None:
            return exp[self._log[x] + self._log[y]]
        return self._raw_mul(x, y)

    def _raw_mul(self, x, y):
        p, l = self.p, self.l
        xd = []
        while x:
            xd.append(x % p)
            x //= p
        yd = []
        while y:
            yd.append(y % p)
            y //= p
        prod = [0] * (len(xd) + len(yd) - 1)
        for i, xi in enumerate(xd):
            if xi:
                for j, yj in enumerate(yd):
                    prod[i + j] += xi * yj
        mod = self.modulus
        for k in range(len(prod) - 1, l - 1, -1):
            c = prod[k] % p
            if c:
                off = k - l
                for j in range(l):
                    prod[off + j] -= c * mod[j]
            prod[k] = 0
        out = 0
        for d in reversed(prod[:l]):
            out = out * p + d % p
        return out

    def _raw_pow(self, x, k):
        # table-free, safe during table construction
        r = 1
        b = x
        while k:
            if k & 1:
                r = self._raw_mul(r, b) if self.l > 1 else r * b % self.p
            b = self._raw_mul(b, b) if self.l > 1 else b * b % self.p
            k >>= 1
        return r

    def _pow(self, x, k):
        if k < 0:
            x = self._inv(x)
            k = -k
        r = 1
        b = x
        while k:
            if k & 1:
                r = self._mul(r, b)
            b = self._mul(b, b)
            k >>= 1
        return r

    def _inv(self, x):
        if x == 0:
            raise DivisionByZero(
                f"cannot invert 0 in GF({self.p}^{self.l})")
        if self.order == 2:
            return 1
        exp = self._exp
        if exp is not None:
            n = self.order - 1
            return exp[(n - self._log[x]) % n]
        return self._raw_pow(x, self.order - 2)

    def _build_add_table(self):
        q, p, l = self.order, self.p, self.l
        digs = []
        for x in range(q):
            v = x
            d = []
            for _ in range(l):
                d.append(v % p)
                v //= p
            digs.append(d)
        table = [0] * (q * q)
        for x in range(q):
            dx = digs[x]
            row = x * q
            for y in range(x, q):
                dy = digs[y]
                s = 0
                for i in range(l - 1, -1, -1):
                    s = s * p + (dx[i] + dy[i]) % p
                table[row + y] = s
                table[y * q + x] = s
        self._add_table = table
        return table

    def _build_mul_tables(self):
        q = self.order
        g = self._find_generator()
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + q - 1] = acc
            log[acc] = i
            acc = self._raw_mul(acc, g)
        if acc != 1:
            raise NoRootFound("generator order check failed")
        self._exp = exp
        self._log = log

    def _find_generator(self):
        q = self.order
        if q == 2:
            return 1
        n = q - 1
        targets = [n // r for r in prime_factors(n)]
        for g in range(2, q):
            if all(self._raw_pow(g, t) != 1 for t in targets):
                return g
        raise NoRootFound(f"no generator found in GF({self.p}^{self.l})")

    # validating public arithmetic

    def add(self, x, y):
        return self._add(self.check(x), self.check(y))

    def sub(self, x, y):
        return self._sub(self.check(x), self.check(y))

    def neg(self, x):
        return self._neg(self.check(x))

    def mul(self, x, y):
        return self._mul(self.check(x), self.check(y))

    def inv(self, x):
        return self._inv(self.check(x))

    def div(self, x, y):
        return self._mul(self.check(x), self._inv(self.check(y)))

    def pow(self, x, k):
        self.check(x)
        if not isinstance(k, int):
            raise InputError(f"exponent must be an integer, got {k!r}")
        return self._pow(x, k)

    def generator(self):
        """Element of smallest encoding with multiplicative order p^l - 1."""
        if self._gen is None:
            self._gen = 1 if self.order == 2 else self._find_generator()
        return self._gen

    def element_order(self, x):
        self.check(x)
        if x == 0:
            raise DivisionByZero("the zero element has no multiplicative order")
        t = self.order - 1
        for r in prime_factors(t):
            while t % r == 0 and self._pow(x, t // r) == 1:
                t //= r
        return t


@functools.lru_cache(maxsize=None)
def _canonical_field(p, l):
    return FieldSpec(p, l, _smallest_irreducible(p, l))


def build_field(p, l, bound=DEFAULT_FIELD_BOUND):
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime")
    if not isinstance(l, int) or l < 1:
        raise DegreeOutOfRange(f"extension degree must be >= 1, got {l!r}")
    if p ** l > bound:
        raise DegreeOutOfRange(
            f"field order {p}^{l} exceeds the bound {bound}")
    return _canonical_field(p, l)


def parse_field(text, bound=DEFAULT_FIELD_BOUND):
    """Parse a descriptor: "p", "p^l", or "p^l/c0,c1,...,cl".

    An explicit modulus must match the canonical one; only canonical fields
    are constructed.
    """
    if not isinstance(text, str) or not text.strip():
        raise InputError(f"cannot parse field descriptor {text!r}")
    body, _, mod_text = text.strip().partition("/")
    base, caret, deg = body.partition("^")
    if caret and not deg:
        raise InputError(f"cannot parse field descriptor {text!r}")
    try:
        p = int(base)
        l = int(deg) if deg else 1
    except ValueError:
        raise InputError(f"cannot parse field descriptor {text!r}") from None
    spec = build_field(p, l, bound)
    if mod_text:
        try:
            coeffs = tuple(int(c) for c in mod_text.split(","))
        except ValueError:
            raise InputError(
                f"cannot parse modulus coefficients {mod_text!r}") from None
        if coeffs != spec.modulus:
            raise FieldMismatch(
                f"modulus {mod_text} is not the canonical modulus "
                f"{','.join(map(str, spec.modulus))} of GF({p}^{l})")
    return spec


def roots_of_unity(spec, i):
    """All x in spec with x^i = 1; its size is gcd(i, p^l - 1)."""
    if not isinstance(i, int) or i < 1:
        raise InputError(f"unity order must be a positive integer, got {i!r}")
    d = math.gcd(i, spec.order - 1)
    if d == 1:
        return frozenset((1,))
    gamma = spec._pow(spec.generator(), (spec.order - 1) // d)
    out = set()
    acc = 1
    for _ in range(d):
        out.add(acc)
        acc = spec._mul(acc, gamma)
    return frozenset(out)


def subfield_lattice(spec):
    """Canonical GF(p^d) for every divisor d of l, ascending by degree."""
    return tuple(_canonical_field(spec.p, d)
                 for d in range(1, spec.l + 1) if spec.l % d == 0)


@functools.lru_cache(maxsize=None)
def _embedding_powers(sub, sup):
    """Powers 1, b, ..., b^(sub.l - 1) of the smallest root b of sub's
    modulus inside sup."""
    # roots of an irreducible of degree d live in sup's unique subfield of
    # order p^d, so only those elements need scanning
    candidates = [0]
    if sub.order > 2:
        gamma = sup._pow(sup.generator(), (sup.order - 1) // (sub.order - 1))
        acc = 1
        seen = set()
        while acc not in seen:
            seen.add(acc)
            acc = sup._mul(acc, gamma)
        candidates.extend(sorted(seen))
    else:
        candidates.append(1)
    mod = sub.modulus
    root = None
    for y in candidates:
        acc = 0
        for c in reversed(mod):
            acc = sup._add(sup._mul(acc, y), c)
        if acc == 0:
            root = y
            break
    if root is None:
        raise NoRootFound(
            f"modulus of GF({sub.p}^{sub.l}) has no root in "
            f"GF({sup.p}^{sup.l})")
    powers = [1]
    for _ in range(sub.l - 1):
        powers.append(sup._mul(powers[-1], root))
    return tuple(powers)


def embed(x, sub, sup):
    """Image of x under the canonical embedding of sub into sup.

    The embedding sends the class of X in sub to the smallest-encoding root
    of sub's modulus in sup, so it is deterministic and preserves + and *.
    """
    sub.check(x)
    if sub.p != sup.p or sup.l % sub.l != 0:
        raise NotASubfield(
            f"GF({sub.p}^{sub.l}) does not embed into GF({sup.p}^{sup.l})")
    if sub == sup:
        return x
    if sub.l == 1:
        return x
    powers = _embedding_powers(sub, sup)
    out = 0
    val = x
    p = sub.p
    for b in powers:
        d = val % p
        if d:
            out = sup._add(out, sup._mul(b, d))
        val //= p
    return out
