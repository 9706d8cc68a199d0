"""Obstructions to cosmetic crossings on genus one knots.

Each test returns a :class:`TestOutcome`. The tests are one-directional: an
``OBSTRUCTED`` outcome proves the knot has no cosmetic crossing, while
``INCONCLUSIVE`` proves nothing. No code path ever claims a cosmetic crossing
exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any

from .intlinalg import AbelianGroup
from .laurent import LaurentPoly, conj, dot_equal, eval_at_sign, normalize
from .seifert import (
    PretzelParams,
    SeifertMatrix,
    WhiteheadParams,
    alexander,
    double_cover_homology,
    knot_det,
    knot_signature,
    pretzel_seifert,
    whitehead_seifert,
)

if TYPE_CHECKING:
    from .catalog import KnotRecord

__all__ = [
    "Status",
    "Verdict",
    "TestOutcome",
    "SliceWitness",
    "ObstructionReport",
    "is_square",
    "det_square_test",
    "alg_slice_test",
    "homology_cyclic_test",
    "metabolizer_gcd_test",
    "pretzel_test",
    "whitehead_test",
    "external_flag_test",
    "combined_verdict",
]


class Status(str, Enum):
    OBSTRUCTED = "OBSTRUCTED"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class Verdict(str, Enum):
    NO_COSMETIC_CROSSINGS = "NO_COSMETIC_CROSSINGS"
    UNRESOLVED = "UNRESOLVED"


# test ids, also used as the "test" key in JSON output
DET_SQUARE = "determinant"
ALG_SLICE = "algebraic_slice"
HOMOLOGY = "homology"
GCD = "metabolizer_gcd"
PRETZEL = "pretzel"
WHITEHEAD = "whitehead"
EXTERNAL = "external"

EXTERNAL_THEOREMS = {
    "two_bridge": "2-bridge knots admit no cosmetic crossings (Torisu)",
    "fibered": "fibered knots admit no cosmetic crossings (Kalfagianni)",
}


@dataclass(frozen=True)
class SliceWitness:
    """Factorization ``Delta = f(t) f(t^-1)`` up to units, ``f = b - (b+1)t``.

    ``m`` is the ``t^2`` coefficient of ``Delta`` once it is scaled so that
    ``Delta(1) = 1``; then ``m = -b(b+1)``.
    """

    b: int
    m: int

    @property
    def f(self) -> LaurentPoly:
        return LaurentPoly(0, (self.b, -(self.b + 1)))

    def verifies(self, delta: LaurentPoly) -> bool:
        return dot_equal(self.f * conj(self.f), delta)


@dataclass(frozen=True)
class TestOutcome:
    test: str
    status: Status
    reason: str
    witness: Any = None

    @property
    def obstructed(self) -> bool:
        return self.status is Status.OBSTRUCTED


@dataclass
class ObstructionReport:
    knot: str
    outcomes: list[TestOutcome] = field(default_factory=list)
    determinant: int | None = None
    alexander: LaurentPoly | None = None
    homology: AbelianGroup | None = None
    signature: int | None = None
    source: str = ""
    warnings: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        if any(o.obstructed for o in self.outcomes):
            return Verdict.NO_COSMETIC_CROSSINGS
        return Verdict.UNRESOLVED

    def outcome(self, test: str) -> TestOutcome | None:
        return next((o for o in self.outcomes if o.test == test), None)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def det_square_test(d: int) -> TestOutcome:
    if d <= 0:
        raise ValueError(f"a knot determinant is a positive odd integer, got {d}")
    if is_square(d):
        return TestOutcome(DET_SQUARE, Status.INCONCLUSIVE,
                           f"det = {d} = {math.isqrt(d)}^2 is a perfect square",
                           {"determinant": d})
    return TestOutcome(DET_SQUARE, Status.OBSTRUCTED,
                       f"det = {d} is not a perfect square (determinant test)",
                       {"determinant": d})


def _genus_one_form(delta: LaurentPoly) -> int:
    """Return ``m`` with ``Delta ≐ m(t^2 + 1) + (1 - 2m)t``; validate shape."""
    if delta.is_zero():
        raise ValueError("Alexander polynomial of a knot is never zero")
    d = normalize(delta)
    if d.span > 2 or not d.is_palindromic() or abs(eval_at_sign(d, 1)) != 1:
        raise ValueError(f"{d} is not the Alexander polynomial of a genus one knot")
    if eval_at_sign(d, 1) == -1:
        d = -d
    if d.span == 0:
        return 0
    if d.span == 1:
        # palindromic with span 1 would give Delta(1) even
        raise ValueError(f"{d} is not the Alexander polynomial of a genus one knot")
    return d.coefficient(2)


def alg_slice_test(delta: LaurentPoly) -> TestOutcome:
    """Is a genus one Alexander polynomial of the form ``f(t) f(t^-1)``?

    With ``Delta(1) = 1`` write ``Delta = m(t^2+1) + (1-2m)t``. It factors
    with ``f = b - (b+1)t`` exactly when ``m = -b(b+1)``, i.e. when ``1 - 4m``
    is the odd square ``(2b+1)^2``.
    """
    m = _genus_one_form(delta)
    disc = 1 - 4 * m
    if is_square(disc):
        b = (math.isqrt(disc) - 1) // 2
        w = SliceWitness(b=b, m=m)
        return TestOutcome(ALG_SLICE, Status.INCONCLUSIVE,
                           f"Alexander polynomial factors as f(t)f(t^-1) with f = {w.f}", w)
    return TestOutcome(ALG_SLICE, Status.OBSTRUCTED,
                       f"Alexander polynomial is not of the form f(t)f(t^-1) "
                       f"(1 - 4m = {disc} is not a square; algebraic-slice test)")


def homology_cyclic_test(H: AbelianGroup) -> TestOutcome:
    if H.free_rank:
        raise ValueError(f"double cover of a knot has finite homology, got {H}")
    if len(H.invariant_factors) >= 2:
        return TestOutcome(HOMOLOGY, Status.OBSTRUCTED,
                           f"H1(Y_K) = {H} is not cyclic (homology test)", H)
    return TestOutcome(HOMOLOGY, Status.INCONCLUSIVE, f"H1(Y_K) = {H} is cyclic", H)


def _metabolizer_form(V: SeifertMatrix) -> tuple[int, int] | None:
    """``(a, b)`` when ``V`` or ``V^T`` is ``[[a, b], [b+1, 0]]``."""
    if V.size != 2 or V.d != 0:
        return None
    if abs(V.b - V.c) != 1:
        return None
    return V.a, min(V.b, V.c)


def metabolizer_gcd_test(V: SeifertMatrix) -> TestOutcome:
    form = _metabolizer_form(V)
    if form is None:
        return TestOutcome(GCD, Status.NOT_APPLICABLE,
                           "Seifert matrix is not in metabolizer form [[a, b], [b+1, 0]]")
    a, b = form
    d = math.gcd(2 * a, 2 * b + 1)
    witness = {"a": a, "b": b, "d": d}
    if b in (0, -1):
        return TestOutcome(GCD, Status.INCONCLUSIVE,
                           f"metabolizer form with b = {b}: double cover homology is trivial", witness)
    if d != 1:
        return TestOutcome(GCD, Status.OBSTRUCTED,
                           f"gcd(2a, 2b+1) = gcd({2 * a}, {2 * b + 1}) = {d} != 1 (gcd test)", witness)
    return TestOutcome(GCD, Status.INCONCLUSIVE,
                       f"gcd(2a, 2b+1) = gcd({2 * a}, {2 * b + 1}) = 1", witness)


def pretzel_test(params: PretzelParams) -> TestOutcome:
    p, q, r = params.p, params.q, params.r
    s = p * q + q * r + p * r
    # s is odd, so s = -m^2 with m odd iff -s is a perfect square
    if s > 0 or not is_square(-s):
        return TestOutcome(PRETZEL, Status.OBSTRUCTED,
                           f"pq+qr+pr = {s} is not minus an odd square (pretzel corollary, case 1)",
                           {"case": 1, "s": s})
    if q + r == 0 and math.gcd(p, q) != 1:
        return TestOutcome(PRETZEL, Status.OBSTRUCTED,
                           f"q+r = 0 and gcd(p, q) = {math.gcd(p, q)} != 1 (pretzel corollary, case 2)",
                           {"case": 2, "s": s, "gcd": math.gcd(p, q)})
    if p + q == 0 and math.gcd(p, r) != 1:
        return TestOutcome(PRETZEL, Status.OBSTRUCTED,
                           f"p+q = 0 and gcd(p, r) = {math.gcd(p, r)} != 1 (pretzel corollary, case 3)",
                           {"case": 3, "s": s, "gcd": math.gcd(p, r)})
    return TestOutcome(PRETZEL, Status.INCONCLUSIVE,
                       f"pq+qr+pr = {s} = -{math.isqrt(-s)}^2 and neither gcd case applies",
                       {"case": 0, "s": s})


def whitehead_test(params: WhiteheadParams) -> TestOutcome:
    n = params.n
    wrong_sign = n < 0 if params.clasp == "+" else n > 0
    witness = {"clasp": params.clasp, "n": n}
    if wrong_sign:
        side = "n < 0" if params.clasp == "+" else "n > 0"
        return TestOutcome(WHITEHEAD, Status.OBSTRUCTED,
                           f"{side} for a {params.clasp} clasp (Whitehead corollary)", witness)
    if n % 2:
        return TestOutcome(WHITEHEAD, Status.OBSTRUCTED,
                           f"|n| = {abs(n)} is odd (Whitehead corollary)", witness)
    return TestOutcome(WHITEHEAD, Status.INCONCLUSIVE,
                       f"n = {n} is even and of the clasp's sign", witness)


def external_flag_test(flag: str) -> TestOutcome:
    try:
        theorem = EXTERNAL_THEOREMS[flag]
    except KeyError:
        raise ValueError(f"unknown flag {flag!r}") from None
    return TestOutcome(EXTERNAL, Status.OBSTRUCTED,
                       f"external flag {flag}: {theorem}", {"flag": flag})


def _matrix_tests(report: ObstructionReport, V: SeifertMatrix) -> None:
    if V.size != 2:
        raise ValueError("the obstructions apply to genus one (2x2) Seifert matrices only")
    report.determinant = knot_det(V)
    report.alexander = alexander(V)
    report.homology = double_cover_homology(V)
    report.signature = knot_signature(V)
    report.outcomes += [
        det_square_test(report.determinant),
        alg_slice_test(report.alexander),
        homology_cyclic_test(report.homology),
        metabolizer_gcd_test(V),
    ]


def combined_verdict(record: KnotRecord) -> ObstructionReport:
    """Run every test the record's data supports and collect the outcomes."""
    report = ObstructionReport(knot=record.name, source=record.describe_source())
    src = record.source
    if isinstance(src, SeifertMatrix):
        _matrix_tests(report, src)
    elif isinstance(src, PretzelParams):
        _matrix_tests(report, pretzel_seifert(src))
        report.outcomes.append(pretzel_test(src))
    elif isinstance(src, WhiteheadParams):
        _matrix_tests(report, whitehead_seifert(src))
        report.outcomes.append(whitehead_test(src))
    elif isinstance(src, int):
        report.determinant = src
        report.outcomes.append(det_square_test(src))
    else:
        raise ValueError(f"record {record.name!r} has no usable data source")

    declared = record.declared_det
    if declared is not None and declared != report.determinant:
        raise ValueError(
            f"record {record.name!r} is inconsistent: declared det {declared}, "
            f"computed {report.determinant}")
    for flag in sorted(record.flags):
        report.outcomes.append(external_flag_test(flag))
    if report.determinant == 1:
        report.warnings.append("possibly trivial knot (det = 1)")
    return report
