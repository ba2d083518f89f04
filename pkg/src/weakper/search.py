"""Exhaustive decomposition search and whole-field verification.

brute_decompose and brute_commuting_decompose are exact decision procedures
at desk scale: they enumerate every square-zero candidate N in encoding
order and accept the first one making C - N potent (and commuting with it,
in the commuting variant).  verify_field runs one of the decomposition
routes over all q^n companion matrices and emits a deterministic report
whose witnesses have all been re-verified.
"""

import dataclasses
import functools
import itertools
import json

from .companion import (
    DEFAULT_ENUM_BOUND,
    CompanionForm,
    Witness,
    companion_of,
    enumerate_companions,
    trace_matched_decomposition,
)
from .errors import (
    FieldTooSmall,
    InputError,
    NoPolynomialRepresentation,
    NotCommuting,
    NotInvertible,
    SearchSpaceTooLarge,
    TraceNotRealizable,
    WeakperError,
)
from .gf import parse_field
from .mat import Mat, char_poly, is_potent, linear_combination, potency_exponent
from .poly import Poly, pow_mod

TOOL_VERSION = "0.1.0"
DEFAULT_BRUTE_CAP = 1 << 24
MODES = ("constructive", "brute", "commuting")


@functools.lru_cache(maxsize=None)
def _square_zero_entries(spec, n, cap):
    """Entry tuples of every n x n matrix N with N^2 = 0, in encoding
    order.  The full q^(n^2) candidate space is filtered once and cached."""
    q = spec.order
    if q ** (n * n) > cap:
        raise SearchSpaceTooLarge(
            f"{q}^{n * n} candidate matrices exceed the bound {cap}")
    mul, add = spec._mul, spec._add
    out = []
    for ent in itertools.product(range(q), repeat=n * n):
        ok = True
        for i in range(n):
            if not ok:
                break
            for j in range(n):
                acc = 0
                for k in range(n):
                    a = ent[i * n + k]
                    if a:
                        b = ent[k * n + j]
                        if b:
                            acc = add(acc, mul(a, b))
                if acc:
                    ok = False
                    break
        if ok:
            out.append(ent)
    return tuple(out)


def brute_decompose(C, brute_cap=DEFAULT_BRUTE_CAP):
    """First witness C = P + N with N^2 = 0 and P potent, scanning N over
    all square-zero matrices in encoding order; None when no N works."""
    spec, n = C.spec, C.n
    for ent in _square_zero_entries(spec, n, brute_cap):
        N = Mat._raw(spec, n, ent)
        P = C - N
        if is_potent(P):
            return Witness(
                potent=P,
                nilpotent=N,
                exponent=potency_exponent(P),
                commuting=(P * N == N * P),
                source="brute",
            )
    return None


def count_decompositions(C, brute_cap=DEFAULT_BRUTE_CAP):
    """Exhaustive witness counts for one matrix: how many square-zero N
    give a potent C - N, and how many of those pairs commute."""
    spec, n = C.spec, C.n
    total = 0
    commuting = 0
    for ent in _square_zero_entries(spec, n, brute_cap):
        N = Mat._raw(spec, n, ent)
        P = C - N
        if is_potent(P):
            total += 1
            if P * N == N * P:
                commuting += 1
    return {"total": total, "commuting": commuting}


def brute_commuting_decompose(C, brute_cap=DEFAULT_BRUTE_CAP):
    """Like brute_decompose with the extra requirement P·N = N·P."""
    spec, n = C.spec, C.n
    for ent in _square_zero_entries(spec, n, brute_cap):
        N = Mat._raw(spec, n, ent)
        P = C - N
        if is_potent(P) and P * N == N * P:
            return Witness(
                potent=P,
                nilpotent=N,
                exponent=potency_exponent(P),
                commuting=True,
                source="brute_commuting",
            )
    return None


def root_of_unity_certificate(C, t):
    """True iff char_poly(C) divides (X^(t-1) - 1)^2; C must be invertible
    and t the potency exponent of a commuting decomposition, t > 1."""
    if not isinstance(t, int) or t < 2:
        raise InputError(f"certificate exponent must be > 1, got {t!r}")
    chi = char_poly(C)
    if chi.coeffs[0] == 0:
        raise NotInvertible(
            "certificate requires an invertible matrix "
            "(nonzero constant term)")
    spec = C.spec
    s = pow_mod(Poly.x(spec), t - 1, chi) - Poly.one(spec)
    return ((s * s) % chi).is_zero()


def fixed_point_certificate(C, P):
    """Express P as a polynomial q in C and test char_poly(C) | (q(X)-X)^2.

    P must commute with C; for a companion C the commutant is exactly the
    polynomials in C, so the Krylov system is solvable and a failure to
    solve signals a broken invariant.  Returns (q, bool).
    """
    if C * P != P * C:
        raise NotCommuting("P does not commute with C")
    spec, n = C.spec, C.n
    powers = []
    acc = Mat.identity(spec, n)
    for _ in range(n):
        powers.append(acc.entries)
        acc = acc * C
    coeffs = linear_combination(powers, P.entries, spec)
    if coeffs is None:
        raise NoPolynomialRepresentation(
            "P is not a polynomial in C although they commute")
    q_poly = Poly(spec, coeffs)
    chi = char_poly(C)
    s = (q_poly - Poly.x(spec)) % chi
    return q_poly, ((s * s) % chi).is_zero()


@dataclasses.dataclass(frozen=True)
class CompanionRecord:
    form: CompanionForm
    status: str  # "decomposable" | "not_decomposable"
    witness: object  # Witness | None

    def serialize(self):
        out = {"g": list(self.form.low_coeffs), "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.serialize(self.form)
        return out


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    field: str
    n: int
    mode: str
    records: tuple
    version: str = TOOL_VERSION

    @property
    def total(self):
        return len(self.records)

    @property
    def decomposable(self):
        return sum(1 for r in self.records if r.status == "decomposable")

    @property
    def failed(self):
        return self.total - self.decomposable

    def to_dict(self):
        return {
            "field": self.field,
            "n": self.n,
            "mode": self.mode,
            "records": [r.serialize() for r in self.records],
            "summary": {
                "total": self.total,
                "decomposable": self.decomposable,
                "failed": self.failed,
            },
            "version": self.version,
        }

    def to_json_bytes(self):
        return json.dumps(self.to_dict(), sort_keys=True,
                          separators=(",", ":")).encode("utf-8")


def verify_field(n, spec, mode, enum_bound=DEFAULT_ENUM_BOUND,
                 brute_cap=DEFAULT_BRUTE_CAP):
    """Run one decomposition route over every companion matrix.

    Every witness is re-verified (both potency routes, square-zero, sum,
    exponent, and commutation when the mode demands it) before being
    recorded; a re-verification failure raises instead of mis-reporting.
    """
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "constructive" and spec.order < n + 1:
        raise FieldTooSmall(
            f"constructive mode needs q >= n + 1, got q={spec.order}, n={n}")
    records = []
    for form in enumerate_companions(n, spec, enum_bound):
        if mode == "constructive":
            try:
                witness = trace_matched_decomposition(form)
            except TraceNotRealizable:
                witness = None
        elif mode == "brute":
            witness = brute_decompose(form.matrix, brute_cap)
        else:
            witness = brute_commuting_decompose(form.matrix, brute_cap)
        if witness is not None:
            ok = witness.verify(form.matrix,
                                require_commuting=(mode == "commuting"),
                                check_iterative=True)
            if not ok:
                raise WeakperError(
                    f"witness for {list(form.low_coeffs)} failed "
                    f"re-verification in mode {mode}")
            records.append(CompanionRecord(form, "decomposable", witness))
        else:
            records.append(CompanionRecord(form, "not_decomposable", None))
    return VerifyReport(
        field=spec.descriptor(),
        n=n,
        mode=mode,
        records=tuple(records),
    )


@dataclasses.dataclass(frozen=True)
class ConjectureScan:
    """Ground truth for the commuting-decomposition question over one
    field: the full commuting-mode report plus the companions for which
    no commuting decomposition exists."""
    report: VerifyReport
    non_decomposable: tuple

    def serialize(self):
        return {
            "report": self.report.to_dict(),
            "non_decomposable": [list(g) for g in self.non_decomposable],
        }


def conjecture_scan(n, spec, enum_bound=DEFAULT_ENUM_BOUND,
                    brute_cap=DEFAULT_BRUTE_CAP):
    report = verify_field(n, spec, "commuting", enum_bound, brute_cap)
    missing = tuple(r.form.low_coeffs for r in report.records
                    if r.status == "not_decomposable")
    return ConjectureScan(report=report, non_decomposable=missing)


def load_report(data):
    """Rebuild a VerifyReport from its JSON serialization."""
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"report is not valid JSON: {exc}") from None
    try:
        spec = parse_field(raw["field"])
        n = raw["n"]
        records = []
        for rec in raw["records"]:
            low = tuple(int(c) for c in rec["g"])
            form = companion_of(Poly(spec, low + (1,)))
            witness = None
            if "witness" in rec:
                w = rec["witness"]
                witness = Witness(
                    potent=Mat.from_rows(spec, w["P"]),
                    nilpotent=Mat.from_rows(spec, w["N"]),
                    exponent=int(w["potency_exponent"]),
                    commuting=bool(w["commuting"]),
                    source=str(w["source"]),
                )
            records.append(
                CompanionRecord(form, str(rec["status"]), witness))
        report = VerifyReport(
            field=raw["field"],
            n=n,
            mode=str(raw["mode"]),
            records=tuple(records),
            version=str(raw["version"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"report JSON is malformed: {exc}") from None
    return report


def reverify_report(report):
    """Re-check every witness in a (possibly reloaded) report; True when
    every decomposable record's witness still verifies and the record
    count matches the field size."""
    spec = parse_field(report.field)
    if report.total != spec.order ** report.n:
        return False
    for rec in report.records:
        if rec.status == "decomposable":
            if rec.witness is None:
                return False
            if not rec.witness.verify(
                    rec.form.matrix,
                    require_commuting=(report.mode == "commuting")):
                return False
        elif rec.witness is not None:
            return False
    return True
