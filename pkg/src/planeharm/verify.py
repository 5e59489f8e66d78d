"""Executable verification of every identity the package implements.

Each check measures a worst-case residual over a pinned grid and compares
it against the centralized tolerance table below.  Erratum checks invert
the usual sense: they pass when the documented discrepancy reproduces and
the corrected statement verifies, so a silently "fixed" source formula
would fail the suite just as loudly as a broken implementation.

Checks are grouped into suites (laguerre, basis, algebra, quadrature,
transform); reports are sorted by check id and render as text or JSON.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

from . import actions, errata
from .algebra import OperatorExpr, build_operator, normal_form, verify_e_correction
from .basis import SpinIndex, calL, calL_deriv, calZ, ode_residual, sector_labels
from .errors import DomainError
from .exact import ExactPolynomial
from .laguerre import (
    COMPOSED_RELATIONS,
    FIRST_ORDER_RELATIONS,
    laguerre_deriv,
    laguerre_eval,
    laguerre_reflect,
    recurrence_check,
)
from .quadrature import _as_half_integer, gauss_laguerre, halfline_inner, plane_inner
from .rotation import RotationSpec, rotation_matrix
from .transform import analyze, as_function, parseval_gap, random_block, rotate

__all__ = [
    "CheckResult",
    "VerificationReport",
    "DEFAULT_TOLERANCES",
    "SUITES",
    "run_suite",
]

# Laguerre verification grid: every (n, alpha, y) with n <= 12, |alpha| <= 6.
_N_GRID = range(0, 13)
_A_GRID = range(-6, 7)
_Y_GRID = (0.1, 1.0, 5.0, 20.0)

# Central tolerance table; the single source of truth for pass thresholds.
DEFAULT_TOLERANCES: dict[str, float] = {
    "laguerre.oracle": 1e-12,
    "laguerre.reflection": 1e-12,
    "laguerre.first-order-recurrences": 1e-10,
    "laguerre.composed-recurrences": 1e-10,
    "laguerre.derivatives": 1e-6,
    "basis.ode": 1e-9,
    "basis.radial-orthonormality": 1e-10,
    "basis.symmetry-sign": 1e-12,
    "basis.plane-gram": 1e-10,
    "algebra.ladder": 1e-9,
    "algebra.annihilation": 1e-9,
    "algebra.su2-on-basis": 1e-8,
    "algebra.casimir": 1e-8,
    "algebra.hermiticity": 1e-8,
    "algebra.closure-residuals": 1e-8,
    "algebra.engine-determinism": 0.0,
    "quadrature.moments": 1e-12,
    "quadrature.weight-sum": 1e-12,
    "quadrature.interlacing": 0.0,
    "quadrature.plane-vs-halfline": 1e-13,
    "transform.roundtrip": 1e-8,
    "transform.parseval": 1e-10,
    "transform.rotation-unitarity": 1e-8,
    "transform.rotation-group-law": 1e-8,
    "transform.double-cover": 1e-12,
    "transform.per-j-norms": 1e-10,
    "transform.equivariance": 1e-7,
    "transform.dmatrix-values": 1e-12,
}

_ERRATUM_CHECKS = frozenset(
    {
        "laguerre.composed-recurrences",
        "basis.symmetry-sign",
        "algebra.closure-residuals",
    }
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check."""

    id: str
    identity: str
    residual: float
    threshold: float
    passed: bool
    erratum: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "identity": self.identity,
            "max_residual": self.residual,
            "threshold": self.threshold,
            "passed": self.passed,
            "erratum": self.erratum,
            "note": self.note,
        }


@dataclass(frozen=True)
class VerificationReport:
    """All check outcomes of one suite run, sorted by check id."""

    suite: str
    j_max: Fraction
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "j_max": str(self.j_max),
            "seed": self.seed,
            "overall": "pass" if self.overall_pass else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render_text(self) -> str:
        lines = [f"suite: {self.suite}  j_max: {self.j_max}  seed: {self.seed}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            tag = " [erratum]" if c.erratum else ""
            lines.append(
                f"{status}  {c.id:<34} max {c.residual:9.3e}  tol {c.threshold:.1e}{tag}"
            )
            if c.note:
                for note_line in c.note.splitlines():
                    lines.append(f"      {note_line}")
        lines.append(f"overall: {'pass' if self.overall_pass else 'fail'}")
        return "\n".join(lines)


def _guarded(diff: float, ref: float) -> float:
    # Relative where the reference is O(1) or larger, absolute below that;
    # avoids rewarding or punishing catastrophic cancellation near roots.
    return abs(diff) / max(1.0, abs(ref))


def _sector_sweep(j_max: Fraction) -> list[SpinIndex]:
    labels = list(sector_labels("int", j_max))
    if j_max >= Fraction(1, 2):
        labels += sector_labels("half", j_max)
    return labels


# ---------------------------------------------------------------------------
# laguerre suite


def _check_oracle(j_max, seed, tol):
    worst = 0.0
    for n in _N_GRID:
        for a in _A_GRID:
            exact = ExactPolynomial.laguerre(n, a)
            for y in _Y_GRID:
                ref = float(exact(Fraction(y).limit_denominator(10**6)))
                got = laguerre_eval(n, a, y)
                worst = max(worst, _guarded(got - ref, ref))
                if a >= 0 and ref != 0.0:
                    worst = max(worst, abs(got - ref) / abs(ref))
    return worst, ""


def _check_reflection(j_max, seed, tol):
    worst = 0.0
    for n in _N_GRID:
        for a in range(-min(6, n), 1):
            for y in _Y_GRID:
                direct = laguerre_eval(n, a, y)
                reflected = laguerre_reflect(n, a, y)
                worst = max(worst, _guarded(direct - reflected, direct))
    return worst, ""


def _check_first_order(j_max, seed, tol):
    worst = 0.0
    for name in FIRST_ORDER_RELATIONS:
        for n in _N_GRID:
            for a in _A_GRID:
                for y in _Y_GRID:
                    c = recurrence_check(name, n, a, y)
                    worst = max(worst, c.relative_residual)
    return worst, ""


def _check_derivatives(j_max, seed, tol):
    # Richardson-extrapolated central differences; tolerance is absolute
    # where |L| is O(1) and scales with the function where it is huge.
    h = 1e-6
    worst = 0.0
    for n in _N_GRID:
        for a in _A_GRID:
            for y in _Y_GRID:
                d_h = (laguerre_eval(n, a, y + h) - laguerre_eval(n, a, y - h)) / (2 * h)
                d_h2 = (
                    laguerre_eval(n, a, y + h / 2) - laguerre_eval(n, a, y - h / 2)
                ) / h
                fd = (4.0 * d_h2 - d_h) / 3.0
                scale = max(
                    1.0,
                    abs(laguerre_eval(n, a, y + h)),
                    abs(laguerre_eval(n, a, y - h)),
                )
                worst = max(worst, abs(laguerre_deriv(n, a, y) - fd) / scale)
    return worst, ""


def _check_composed(j_max, seed, tol):
    # Erratum check: both printed forms must fail at their pinned points and
    # broadly on the grid, while the corrected forms pass everywhere.
    pin_lower = recurrence_check("lower-n-raise-alpha2", 1, 0, 1.0, form="printed")
    pin_raise = recurrence_check("raise-n-lower-alpha2", 1, 2, 1.0, form="printed")
    reproduced = (
        pin_lower.residual == 1.0
        and pin_lower.lhs == -1.0
        and pin_lower.rhs == 0.0
        and pin_raise.residual == 1.0
    )
    fail_count = 0
    total = 0
    corrected_worst = 0.0
    for name in COMPOSED_RELATIONS:
        for n in _N_GRID:
            for a in _A_GRID:
                bad = False
                for y in _Y_GRID:
                    try:
                        printed = recurrence_check(name, n, a, y, form="printed")
                        if printed.relative_residual > 1e-6:
                            bad = True
                    except DomainError:
                        bad = True
                    c = recurrence_check(name, n, a, y)
                    corrected_worst = max(corrected_worst, c.relative_residual)
                total += 1
                fail_count += bad
    reproduced = reproduced and fail_count > total // 2
    rhs_pin = pin_lower.rhs if pin_lower.rhs != 0 else 0.0
    note = (
        f"printed forms fail on {fail_count}/{total} (n, alpha) pairs; "
        f"pinned point (n=1, alpha=0, y=1) gives lhs {pin_lower.lhs}, rhs {rhs_pin}; "
        f"corrected forms pass at {corrected_worst:.3e}"
    )
    return corrected_worst, note, reproduced


# ---------------------------------------------------------------------------
# basis suite


def _check_ode(j_max, seed, tol):
    worst = 0.0
    for s in _sector_sweep(j_max):
        order = (s.two_j - abs(s.two_m)) // 2 + 2
        rule = gauss_laguerre(order, abs(s.two_m))
        y = rule.nodes
        f = calL(s, y)
        ddf = calL_deriv(s, y, 2)
        scale = np.maximum(1.0, np.maximum(np.abs(f), np.abs(y * ddf)))
        worst = max(worst, float(np.max(np.abs(ode_residual(s, y)) / scale)))
    return worst, ""


def _check_radial_orthonormality(j_max, seed, tol):
    worst = 0.0
    two_j_cap = int(2 * j_max)
    for two_m in range(-two_j_cap, two_j_cap + 1):
        two_js = [tj for tj in range(abs(two_m), two_j_cap + 1, 2)]
        for i, tja in enumerate(two_js):
            sa = SpinIndex(tja, two_m)
            fa = lambda y, s=sa: calL(s, y)
            for tjb in two_js[i:]:
                sb = SpinIndex(tjb, two_m)
                fb = lambda y, s=sb: calL(s, y)
                gram = halfline_inner(fa, fb, Fraction(two_m, 2), j_max)
                target = 1.0 if tja == tjb else 0.0
                worst = max(worst, abs(gram - target))
    return worst, ""


def _check_symmetry_sign(j_max, seed, tol):
    y = np.array(_Y_GRID)
    signed_worst = 0.0
    unsigned_gap = 0.0
    half_seen = False
    for s in _sector_sweep(j_max):
        if s.two_m < 0:
            continue
        mirror = SpinIndex(s.two_j, -s.two_m)
        sign = -1.0 if s.two_m % 2 else 1.0
        signed_worst = max(
            signed_worst, float(np.max(np.abs(calL(s, y) - sign * calL(mirror, y))))
        )
        if s.two_m % 2:
            half_seen = True
            unsigned_gap = max(
                unsigned_gap, float(np.max(np.abs(calL(s, y) - calL(mirror, y))))
            )
    reproduced = (not half_seen) or unsigned_gap >= 0.5
    if half_seen:
        note = (
            f"signed identity holds at {signed_worst:.3e}; dropping the sign "
            f"leaves a gap of {unsigned_gap:.3e} on half-integer labels"
        )
    else:
        note = "no half-integer labels at this j_max; sign audit is vacuous"
    return signed_worst, note, reproduced


def _check_plane_gram(j_max, seed, tol):
    worst = 0.0
    for sector in ("int", "half"):
        j_eff = min(j_max, Fraction(6))
        labels = sector_labels(sector, j_eff)
        if not labels:
            continue
        for b in labels:
            fb = lambda y, phi, s=b: calZ(s, (y, phi))
            column = analyze(fb, sector, j_eff)
            for a in labels:
                got = column.get(a.two_j, a.two_m)
                target = 1.0 if a == b else 0.0
                worst = max(worst, abs(got - target))
    return worst, ""


# ---------------------------------------------------------------------------
# algebra suite


def _check_ladder(j_max, seed, tol):
    worst = 0.0
    for s in _sector_sweep(j_max):
        for direction in ("+", "-"):
            worst = max(worst, actions.ladder_residual(s, direction))
    return worst, ""


def _check_annihilation(j_max, seed, tol):
    worst = 0.0
    for s in _sector_sweep(j_max):
        if abs(s.two_m) == s.two_j:
            worst = max(worst, actions.annihilation_residual(s))
    return worst, ""


def _check_su2(j_max, seed, tol):
    worst = 0.0
    for s in _sector_sweep(j_max):
        worst = max(worst, actions.su2_commutator_residual(s))
        for direction in ("+", "-"):
            worst = max(worst, actions.k3_ladder_residual(s, direction))
    return worst, ""


def _check_casimir(j_max, seed, tol):
    worst = 0.0
    for s in _sector_sweep(j_max):
        worst = max(worst, actions.casimir_residual(s))
    return worst, ""


def _check_hermiticity(j_max, seed, tol):
    j_cap = min(j_max, Fraction(6))
    two_j_cap = int(2 * j_cap)
    worst = 0.0
    for two_m in range(-two_j_cap, two_j_cap - 1):
        try:
            worst = max(worst, actions.hermiticity_gap(two_m, j_cap, seed=seed))
        except DomainError:
            continue
    return worst, ""


def _check_closure(j_max, seed, tol):
    report = verify_e_correction()
    bracket_pin = errata.get("closure-bracket-residual").frozen[0][1]
    casimir_pin = errata.get("closure-casimir-residual").frozen[0][1]
    reproduced = (
        not report.bracket_confirmed
        and not report.casimir_confirmed
        and report.residual_bracket.serialize() == bracket_pin
        and report.residual_casimir.serialize() == casimir_pin
    )
    shadow = 0.0
    for s in _sector_sweep(min(j_max, Fraction(8))):
        shadow = max(shadow, actions.su2_commutator_residual(s))
        shadow = max(shadow, actions.casimir_residual(s))
    note = (
        "formal residuals reproduce the pinned 12- and 17-term canonical "
        f"forms; label-tracked action satisfies both identities at {shadow:.3e}"
    )
    return shadow, note, reproduced


def _word_expr(word: tuple[str, ...]) -> OperatorExpr:
    expr = OperatorExpr.scalar(1)
    for letter in word:
        expr = expr * OperatorExpr.symbol(letter)
    return expr


def _check_determinism(j_max, seed, tol):
    # Two independent reductions of the same inputs must agree byte for
    # byte, and normal_form must be idempotent on random expressions.
    words = [
        ("D", "Y"),
        ("D", "Y", "Y", "Yi"),
        ("M", "D", "Y"),
        ("M", "D", "Yi"),
        ("J", "M", "D"),
        ("Yi", "Y", "M"),
        ("D", "D", "Y", "Y"),
        ("M", "M", "D", "D"),
    ]
    first = [_word_expr(w).serialize() for w in words]
    second = [_word_expr(w).serialize() for w in words]
    mismatch = sum(1 for a, b in zip(first, second) if a != b)
    rng = np.random.default_rng(seed)
    letters = ("Y", "Yi", "D", "M", "J")
    for _ in range(50):
        length = int(rng.integers(1, 7))
        word = tuple(letters[int(i)] for i in rng.integers(0, 5, size=length))
        once = normal_form(_word_expr(word))
        twice = normal_form(once)
        if once.serialize() != twice.serialize():
            mismatch += 1
    ops = [build_operator(n).serialize() for n in ("E", "K+", "K-", "K3")]
    ops_again = [build_operator(n).serialize() for n in ("E", "K+", "K-", "K3")]
    mismatch += sum(1 for a, b in zip(ops, ops_again) if a != b)
    return float(mismatch), ""


# ---------------------------------------------------------------------------
# quadrature suite


def _check_moments(j_max, seed, tol):
    worst = 0.0
    for alpha in (0, 1, 2, 3, 5):
        for order in range(1, 41):
            rule = gauss_laguerre(order, alpha)
            powers = np.ones_like(rule.nodes)
            for k in range(0, 2 * order):
                target = math.exp(math.lgamma(k + alpha + 1))
                got = float(np.dot(rule.weights, powers))
                worst = max(worst, abs(got - target) / target)
                powers = powers * rule.nodes
    return worst, ""


def _check_weight_sum(j_max, seed, tol):
    worst = 0.0
    for alpha in (0, 1, 2, 3, 5):
        target = math.exp(math.lgamma(alpha + 1))
        for order in range(1, 41):
            rule = gauss_laguerre(order, alpha)
            worst = max(worst, abs(float(np.sum(rule.weights)) - target) / target)
    return worst, ""


def _check_interlacing(j_max, seed, tol):
    violations = 0
    for alpha in (0, 1, 2, 3, 5):
        previous = None
        for order in range(1, 41):
            rule = gauss_laguerre(order, alpha)
            x = rule.nodes
            if np.any(x <= 0) or np.any(np.diff(x) <= 0):
                violations += 1
            if previous is not None:
                # Each node of the coarser rule sits strictly between
                # consecutive nodes of the finer rule.
                for i, xv in enumerate(previous):
                    if not (x[i] < xv < x[i + 1]):
                        violations += 1
            previous = x
    return float(violations), ""


def _check_plane_vs_halfline(j_max, seed, tol):
    worst = 0.0
    j_eff = min(j_max, Fraction(6))
    for sector in ("int", "half"):
        labels = sector_labels(sector, j_eff)
        by_m: dict[int, list[SpinIndex]] = {}
        for s in labels:
            by_m.setdefault(s.two_m, []).append(s)
        for two_m, group in by_m.items():
            for i, sa in enumerate(group):
                for sb in group[i:]:
                    planar = plane_inner(
                        lambda y, phi, s=sa: calZ(s, (y, phi)),
                        lambda y, phi, s=sb: calZ(s, (y, phi)),
                        j_eff,
                    )
                    radial = halfline_inner(
                        lambda y, s=sa: calL(s, y),
                        lambda y, s=sb: calL(s, y),
                        Fraction(two_m, 2),
                        j_eff,
                    )
                    worst = max(worst, abs(planar - radial))
    return worst, ""


# ---------------------------------------------------------------------------
# transform suite


def _transform_cases(j_max, seed):
    cases = []
    j_int = min(j_max, Fraction(6))
    cases.append(("int", j_int, random_block("int", j_int, seed=seed)))
    if j_max >= Fraction(1, 2):
        j_half = min(j_max, Fraction(11, 2))
        if (2 * j_half) % 2 == 0:
            j_half -= Fraction(1, 2)
        cases.append(("half", j_half, random_block("half", j_half, seed=seed + 1)))
    return cases


def _check_roundtrip(j_max, seed, tol):
    worst = 0.0
    for sector, j_eff, block in _transform_cases(j_max, seed):
        back = analyze(as_function(block), sector, j_eff)
        for label in block.labels():
            worst = max(
                worst,
                abs(back.get(label.two_j, label.two_m) - block.get(label.two_j, label.two_m)),
            )
    return worst, ""


def _check_parseval(j_max, seed, tol):
    worst = 0.0
    notes = []
    for sector, j_eff, block in _transform_cases(j_max, seed):
        worst = max(worst, parseval_gap(as_function(block), sector, j_eff))
    if j_max >= 4:
        outside = lambda y, phi: calZ(SpinIndex(8, 4), (y, phi))
        truncation = parseval_gap(outside, "int", 3)
        worst = max(worst, abs(truncation - 1.0))
        notes.append(
            f"band-limited gaps <= {worst:.3e}; truncating a unit-norm "
            f"harmonic below its j reports gap {truncation:.6f}"
        )
    return worst, "\n".join(notes)


def _random_specs(seed, count=4):
    rng = np.random.default_rng(seed)
    return [RotationSpec(*rng.uniform(-2 * math.pi, 2 * math.pi, size=3)) for _ in range(count)]


def _check_rotation_unitarity(j_max, seed, tol):
    worst = 0.0
    for two_j in range(0, int(2 * j_max) + 1):
        for spec in _random_specs(seed + two_j):
            u = rotation_matrix(two_j, spec)
            worst = max(
                worst, float(np.max(np.abs(u.conj().T @ u - np.eye(two_j + 1))))
            )
    return worst, ""


def _check_group_law(j_max, seed, tol):
    worst = 0.0
    specs = _random_specs(seed, count=6)
    for sector, j_eff, block in _transform_cases(j_max, seed):
        for s1, s2 in zip(specs[::2], specs[1::2]):
            twice = rotate(rotate(block, s1), s2)
            start = 0 if sector == "int" else 1
            for two_j in range(start, int(2 * j_eff) + 1, 2):
                u = rotation_matrix(two_j, s2) @ rotation_matrix(two_j, s1)
                vec = np.array(
                    [block.get(two_j, -two_j + 2 * i) for i in range(two_j + 1)]
                )
                out = u @ vec
                for i, c in enumerate(out):
                    worst = max(worst, abs(twice.get(two_j, -two_j + 2 * i) - c))
    return worst, ""


def _check_double_cover(j_max, seed, tol):
    worst = 0.0
    full_turn = RotationSpec(0.0, 2.0 * math.pi, 0.0)
    for two_j in range(0, int(2 * j_max) + 1):
        u = rotation_matrix(two_j, full_turn)
        sign = -1.0 if two_j % 2 else 1.0
        worst = max(worst, float(np.max(np.abs(u - sign * np.eye(two_j + 1)))))
    return worst, ""


def _check_per_j_norms(j_max, seed, tol):
    worst = 0.0
    for sector, j_eff, block in _transform_cases(j_max, seed):
        for spec in _random_specs(seed + 17, count=3):
            rotated = rotate(block, spec)
            before = block.per_j_norm_sq()
            after = rotated.per_j_norm_sq()
            for two_j in before:
                worst = max(worst, abs(before[two_j] - after[two_j]))
    return worst, ""


def _check_equivariance(j_max, seed, tol):
    worst = 0.0
    spec = _random_specs(seed + 5, count=1)[0]
    for sector, j_eff, block in _transform_cases(min(j_max, Fraction(4)), seed):
        rotated_function = as_function(rotate(block, spec))
        lhs = analyze(rotated_function, sector, j_eff)
        rhs = rotate(analyze(as_function(block), sector, j_eff), spec)
        for label in block.labels():
            worst = max(
                worst,
                abs(lhs.get(label.two_j, label.two_m) - rhs.get(label.two_j, label.two_m)),
            )
    return worst, ""


def _check_dmatrix_values(j_max, seed, tol):
    worst = 0.0
    for b in (0.0, 0.3, 1.0, -1.7, 2.9):
        c, s = math.cos(b / 2.0), math.sin(b / 2.0)
        oracle_half = np.array([[c, s], [-s, c]])
        got = rotation_matrix(1, RotationSpec(0.0, b, 0.0))
        worst = max(worst, float(np.max(np.abs(got - oracle_half))))
        cb, sb = math.cos(b), math.sin(b)
        r2 = math.sqrt(2.0)
        oracle_one = np.array(
            [
                [(1 + cb) / 2, sb / r2, (1 - cb) / 2],
                [-sb / r2, cb, sb / r2],
                [(1 - cb) / 2, -sb / r2, (1 + cb) / 2],
            ]
        )
        got = rotation_matrix(2, RotationSpec(0.0, b, 0.0))
        worst = max(worst, float(np.max(np.abs(got - oracle_one))))
    return worst, ""


# ---------------------------------------------------------------------------
# registry and driver

_CHECKS: dict[str, tuple[str, Callable]] = {
    "laguerre.oracle": (
        "recurrence evaluation equals the exact rational series",
        _check_oracle,
    ),
    "laguerre.reflection": (
        "negative-alpha values match the reflection to positive alpha",
        _check_reflection,
    ),
    "laguerre.first-order-recurrences": (
        "all four first-order differential recurrences",
        _check_first_order,
    ),
    "laguerre.composed-recurrences": (
        "composed two-step recurrences, printed vs corrected forms",
        _check_composed,
    ),
    "laguerre.derivatives": (
        "analytic derivatives match extrapolated central differences",
        _check_derivatives,
    ),
    "basis.ode": (
        "radial functions satisfy their second-order differential equation",
        _check_ode,
    ),
    "basis.radial-orthonormality": (
        "fixed-m radial functions are orthonormal on the half-line",
        _check_radial_orthonormality,
    ),
    "basis.symmetry-sign": (
        "m-reflection symmetry carries the sign (-1)^(2m)",
        _check_symmetry_sign,
    ),
    "basis.plane-gram": (
        "plane harmonics have an identity Gram matrix within a sector",
        _check_plane_gram,
    ),
    "algebra.ladder": (
        "ladder actions map basis functions to their neighbors",
        _check_ladder,
    ),
    "algebra.annihilation": (
        "ladders annihilate the edge labels m = +-j",
        _check_annihilation,
    ),
    "algebra.su2-on-basis": (
        "commutators [K+,K-] = 2K3 and [K3,K+-] = +-K+- on the basis",
        _check_su2,
    ),
    "algebra.casimir": (
        "Casimir combination acts as j(j+1)",
        _check_casimir,
    ),
    "algebra.hermiticity": (
        "raising and lowering are mutual adjoints in the radial inner product",
        _check_hermiticity,
    ),
    "algebra.closure-residuals": (
        "formal closure identities leave pinned residuals; actions satisfy them",
        _check_closure,
    ),
    "algebra.engine-determinism": (
        "rewriting is deterministic and idempotent",
        _check_determinism,
    ),
    "quadrature.moments": (
        "rules integrate monomials below degree 2N exactly",
        _check_moments,
    ),
    "quadrature.weight-sum": (
        "weights sum to Gamma(alpha+1)",
        _check_weight_sum,
    ),
    "quadrature.interlacing": (
        "nodes are positive, sorted, and interlace the next order",
        _check_interlacing,
    ),
    "quadrature.plane-vs-halfline": (
        "plane inner products reduce to radial ones at equal m",
        _check_plane_vs_halfline,
    ),
    "transform.roundtrip": (
        "analyze inverts synthesize on band-limited blocks",
        _check_roundtrip,
    ),
    "transform.parseval": (
        "coefficient energy equals the function norm for band-limited input",
        _check_parseval,
    ),
    "transform.rotation-unitarity": (
        "rotation matrices are unitary",
        _check_rotation_unitarity,
    ),
    "transform.rotation-group-law": (
        "sequential rotations equal the composed unitary",
        _check_group_law,
    ),
    "transform.double-cover": (
        "a full turn multiplies each j-block by (-1)^(2j)",
        _check_double_cover,
    ),
    "transform.per-j-norms": (
        "rotations preserve each j-multiplet's energy",
        _check_per_j_norms,
    ),
    "transform.equivariance": (
        "analyzing a rotated function equals rotating its coefficients",
        _check_equivariance,
    ),
    "transform.dmatrix-values": (
        "rotation matrices match closed forms at spins 1/2 and 1",
        _check_dmatrix_values,
    ),
}

SUITES: dict[str, tuple[str, ...]] = {
    "laguerre": tuple(k for k in _CHECKS if k.startswith("laguerre.")),
    "basis": tuple(k for k in _CHECKS if k.startswith("basis.")),
    "algebra": tuple(k for k in _CHECKS if k.startswith("algebra.")),
    "quadrature": tuple(k for k in _CHECKS if k.startswith("quadrature.")),
    "transform": tuple(k for k in _CHECKS if k.startswith("transform.")),
}
SUITES["all"] = tuple(_CHECKS)


def run_suite(
    suite: str = "all",
    j_max=8,
    seed: int = 0,
    tolerances: Mapping[str, float] | None = None,
) -> VerificationReport:
    """Run one suite and return its report.

    ``tolerances`` overrides entries of the default table by check id;
    unknown ids are rejected so typos cannot silently relax anything.
    """
    if suite not in SUITES:
        raise DomainError(
            f"unknown suite {suite!r}; choose from {sorted(SUITES)}"
        )
    j_max = _as_half_integer(j_max)
    if j_max < 0:
        raise DomainError(f"j_max must be nonnegative, got {j_max}")
    tols = dict(DEFAULT_TOLERANCES)
    for key, value in (tolerances or {}).items():
        if key not in tols:
            raise DomainError(f"unknown check id in tolerance override: {key!r}")
        tols[key] = float(value)
    results = []
    for check_id in sorted(SUITES[suite]):
        identity, fn = _CHECKS[check_id]
        tol = tols[check_id]
        outcome = fn(j_max, seed, tol)
        if len(outcome) == 3:
            residual, note, reproduced = outcome
            passed = bool(reproduced) and bool(residual <= tol)
            erratum = True
        else:
            residual, note = outcome
            passed = bool(residual <= tol)
            erratum = check_id in _ERRATUM_CHECKS
        results.append(
            CheckResult(
                id=check_id,
                identity=identity,
                residual=float(residual),
                threshold=tol,
                passed=passed,
                erratum=erratum,
                note=note,
            )
        )
    return VerificationReport(suite=suite, j_max=j_max, seed=seed, checks=tuple(results))
