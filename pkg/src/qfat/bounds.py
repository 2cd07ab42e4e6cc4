"""Closed-form lower bounds on weight distributions, and the lifting scan
that demonstrates why no polynomial stays r-fat with r > 0 over infinitely
many extension fields.

Everything here is exact integer or rational arithmetic.  Square roots of
odd powers are bracketed by integer square roots and always rounded in the
direction that weakens the bound, so a reported bound never overstates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .field import CapExceededError, FieldCtx, ctx_create, subfield_embedding
from .linpoly import LinearizedPoly, kernel_dim, normalize
from .linset import WeightSpectrum, weight_spectrum


def conservative_sqrt(value: int) -> int:
    """Integer upper bound on sqrt(value); exact for perfect squares.

    Using the upper bracket shrinks every bound below, which keeps the
    reported lower bounds sound when the square root is irrational.
    """
    r = math.isqrt(value)
    return r if r * r == value else r + 1


@dataclass(frozen=True)
class BoundParams:
    """Raw inputs of the closed-form bounds.

    k is the q-degree, t the index, v the smallest supported exponent,
    h the kernel dimension, W the maximum weight, r the number of heavy
    points (W and r may be unknown for formula-only evaluation).
    """

    q: int
    n: int
    k: int
    t: int
    v: int = 0
    h: int = 0
    W: Optional[int] = None
    r: Optional[int] = None

    def __post_init__(self):
        if not (0 <= self.k < self.n):
            raise ValueError("need 0 <= k < n")
        if not (0 <= self.t < self.n):
            raise ValueError("need 0 <= t < n")
        if self.v > max(self.k, 0):
            raise ValueError("v cannot exceed k")
        if not (0 <= self.h <= self.n):
            raise ValueError("need 0 <= h <= n")


# ---------------------------------------------------------------------------
# Applicability of the curve-based bound
# ---------------------------------------------------------------------------


def curve_case(support: tuple[int, ...], k: int, t: int) -> Optional[str]:
    """Which case of the curve-based bound a support pattern satisfies.

    "t0":   index zero, constant slot empty, at least two terms.
    "t1":   index one, separable, q-degree at least three, slot one empty.
    "t2plus": index >= 2 with the layered degree and support conditions.
    None when no case applies.
    """
    if len(support) < 2:
        return None
    if t in support:
        return None
    if t == 0:
        return "t0"
    if 0 not in support:
        return None  # separability is required for every positive index
    if t == 1:
        return "t1" if k >= 3 else None
    # t >= 2: degree condition first (stricter when t divides k)
    if k % t == 0:
        if k < 3 * t:
            return None
    elif k < 2 * t - 1:
        return None
    middle = [j for j in support if 2 <= j <= t]
    if middle:
        return None
    if 1 in support:
        return "t2plus" if k >= t + 2 else None
    return "t2plus"


@dataclass(frozen=True)
class CurveBoundResult:
    applicable: bool
    case: Optional[str]
    lower_bound: Optional[int]
    vacuous: Optional[bool]

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "case": self.case,
            "lower_bound": self.lower_bound,
            "vacuous": self.vacuous,
        }


def curve_bound(params: BoundParams, case: Optional[str]) -> CurveBoundResult:
    """Lower bound on sum of N_i (q^i - 1)(q^i - q) from the curve argument.

    The index-zero case subtracts 2 q^(k-v) + q^k - q^(h+1) + q^h - 1 after
    the Hasse-Weil term; positive indices subtract q^k + q^t - q - 1.
    """
    if case is None:
        return CurveBoundResult(False, None, None, None)
    q, n, k, t, v, h = params.q, params.n, params.k, params.t, params.v, params.h
    root = conservative_sqrt(q**n)
    if case == "t0":
        c1 = (q**k - q - 1) * (q**k - q - 2)
        c2 = 2 * q ** (k - v) + q**k - q ** (h + 1) + q**h - 1
    else:
        c1 = (q**k + q**t - q - 2) * (q**k + q**t - q - 3)
        c2 = q**k + q**t - q - 1
    value = q**n - c1 * root - c2
    return CurveBoundResult(True, case, value, value <= 0)


@dataclass(frozen=True)
class RBoundResult:
    applicable: bool
    case: Optional[str]
    value: Optional[Fraction]
    ceil: Optional[int]
    club_excluded: bool

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "case": self.case,
            "value": None if self.value is None else str(self.value),
            "ceil": self.ceil,
            "club_excluded": self.club_excluded,
        }


def club_exclusion_regime(q: int, n: int, k: int, t: int) -> bool:
    """Parameter regimes in which the heavy-point count must exceed one."""
    d = max(k, t)
    if q >= 4:
        return d < Fraction(n, 4)
    if q == 3:
        return d <= Fraction(n - 2, 4)
    return d <= Fraction(n, 4) - 1


def r_lower_bound_curve(params: BoundParams, case: Optional[str]) -> RBoundResult:
    """Lower bound on the number of heavy points from the curve bound.

    Divides the curve bound by (q^W - 1)(q^W - q), the largest possible
    contribution of a single heavy point.  Requires W >= 2.
    """
    if case is None or params.W is None or params.W < 2:
        return RBoundResult(False, case, None, None, False)
    cb = curve_bound(params, case)
    q, W = params.q, params.W
    denom = q ** (2 * W) - q ** (W + 1) - q**W + q
    value = Fraction(cb.lower_bound, denom)
    ceil = max(0, math.ceil(value))
    return RBoundResult(
        True,
        case,
        value,
        ceil,
        club_exclusion_regime(q, params.n, params.k, params.t),
    )


def chebotarev_applicable(support: tuple[int, ...], t: int) -> bool:
    """Index at least one, index slot empty, separable."""
    return t >= 1 and t not in support and 0 in support


def chebotarev_ni_bound(q: int, n: int, d: int) -> Fraction:
    """Galois-theoretic lower bound on every nonzero N_i (and on r when r > 0).

    (q^n + 1)/q^(d^2) - 2 (d-1) q^(d^2) / (q^d - 1) * sqrt(q^n) - 1, with
    d = max(k, t); exact rational, conservative square root.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    root = conservative_sqrt(q**n)
    lead = Fraction(q**n + 1, q ** (d * d))
    middle = Fraction(2 * (d - 1) * q ** (d * d), q**d - 1) * root
    return lead - middle - 1


@dataclass(frozen=True)
class BoundReport:
    """All applicable bound evaluations for one normalized polynomial."""

    params: BoundParams
    support: tuple[int, ...]
    curve: CurveBoundResult
    r_curve: RBoundResult
    chebotarev_applicable: bool
    chebotarev: Optional[Fraction]

    def as_dict(self) -> dict:
        return {
            "params": {
                "q": self.params.q,
                "n": self.params.n,
                "k": self.params.k,
                "t": self.params.t,
                "v": self.params.v,
                "h": self.params.h,
                "W": self.params.W,
                "r": self.params.r,
            },
            "support": list(self.support),
            "curve": self.curve.as_dict(),
            "r_curve": self.r_curve.as_dict(),
            "chebotarev_applicable": self.chebotarev_applicable,
            "chebotarev": None if self.chebotarev is None else str(self.chebotarev),
        }


def evaluate_bounds(
    f: LinearizedPoly, t: int, spectrum: Optional[WeightSpectrum] = None
) -> Optional[BoundReport]:
    """Normalize (f, t) and evaluate every bound whose hypotheses hold.

    Returns None for monomials and the zero polynomial, whose point sets
    obey the constant-weight law instead.  W, r and h come from the actual
    spectrum when one is supplied (or computed on demand).
    """
    if f.is_zero() or f.is_monomial():
        return None
    nres = normalize(f, t)
    g, t2 = nres.poly, nres.index
    if g.is_monomial():
        return None
    if spectrum is None:
        spectrum = weight_spectrum(g, t2)
    support = g.support
    k = g.q_degree
    v = g.min_support
    h = kernel_dim(g)
    params = BoundParams(
        q=f.ctx.q,
        n=f.ctx.n,
        k=k,
        t=t2,
        v=v,
        h=h,
        W=spectrum.max_weight,
        r=spectrum.r,
    )
    case = curve_case(support, k, t2)
    cheb_ok = chebotarev_applicable(support, t2)
    cheb = chebotarev_ni_bound(params.q, params.n, max(k, t2)) if cheb_ok else None
    return BoundReport(
        params=params,
        support=support,
        curve=curve_bound(params, case),
        r_curve=r_lower_bound_curve(params, case),
        chebotarev_applicable=cheb_ok,
        chebotarev=cheb,
    )


# ---------------------------------------------------------------------------
# Lifting scan: the non-existence mechanism for exceptional fat polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LiftRecord:
    m: int
    field_order: int
    exhaustive: bool
    r_actual: Optional[int]
    max_weight: Optional[int]
    r_bound_ceil: Optional[int]
    bound_case: Optional[str]
    consistent: bool


@dataclass(frozen=True)
class ExceptionalScanReport:
    base_r: int
    base_max_weight: int
    records: tuple[LiftRecord, ...]
    first_m_bound_exceeds_base_r: Optional[int]

    @property
    def all_consistent(self) -> bool:
        return all(rec.consistent for rec in self.records)


def exceptional_scan(
    f: LinearizedPoly,
    t: int,
    max_m: int = 6,
    exhaustive_cap: int = 1 << 13,
    field_cap: int = 1 << 26,
) -> ExceptionalScanReport:
    """Lift (f, t) to extension towers and watch the bound outgrow any fixed r.

    For each m, the same coefficients are re-read in F_{q^(n*m)} through the
    canonical subfield embedding.  On fields within the exhaustive cap the
    actual heavy-point count r_m is computed and checked against the bound;
    beyond it only the bound is evaluated (with the kernel dimension of the
    base polynomial and W = max(k, t), both of which weaken the bound, so
    the reported values stay valid).
    """
    ctx = f.ctx
    nres = normalize(f, t)
    g, t2 = nres.poly, nres.index
    base_spec = weight_spectrum(g, t2)
    base_h = kernel_dim(g)
    support = g.support
    k, v = g.q_degree, g.min_support
    w_cap = max(k, t2) if max(k, t2) >= 2 else 2
    case = curve_case(support, k, t2)
    records = []
    first_exceed = None
    for m in range(1, max_m + 1):
        order_m = ctx.order**m
        exhaustive = order_m <= exhaustive_cap
        r_actual = None
        max_w = None
        h_m = base_h
        if exhaustive:
            big = ctx_create(ctx.p, ctx.e, ctx.n * m, max_order=field_cap)
            embed = subfield_embedding(ctx, big)
            lifted = LinearizedPoly.from_codes(
                big, [embed(c) for c in g.codes] + [0] * (big.n - ctx.n)
            )
            spec_m = weight_spectrum(lifted, t2)
            r_actual = spec_m.r
            max_w = spec_m.max_weight
            h_m = kernel_dim(lifted)
        params = BoundParams(
            q=ctx.q,
            n=ctx.n * m,
            k=k,
            t=t2,
            v=v,
            h=h_m,
            W=max_w if max_w is not None and max_w >= 2 else w_cap,
        )
        rb = r_lower_bound_curve(params, case)
        bound_ceil = rb.ceil if rb.applicable else None
        consistent = True
        if r_actual is not None and bound_ceil is not None:
            consistent = r_actual >= bound_ceil
        records.append(
            LiftRecord(
                m=m,
                field_order=order_m,
                exhaustive=exhaustive,
                r_actual=r_actual,
                max_weight=max_w,
                r_bound_ceil=bound_ceil,
                bound_case=case,
                consistent=consistent,
            )
        )
        if (
            first_exceed is None
            and bound_ceil is not None
            and bound_ceil > base_spec.r
        ):
            first_exceed = m
    return ExceptionalScanReport(
        base_r=base_spec.r,
        base_max_weight=base_spec.max_weight,
        records=tuple(records),
        first_m_bound_exceeds_base_r=first_exceed,
    )
