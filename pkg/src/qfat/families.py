"""Constructors for the named polynomial and span families, each bundled
with the classification it is expected to realize.

Expectations are data, not assertions: verify_family computes the actual
spectrum and reports agreement, so a wrong expectation surfaces as a
finding instead of a crash.  Constructors validate their parameter
constraints but never search for parameters silently; deterministic
parameter finders are provided separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional, Union

import numpy as np

from .field import FFElement, FieldCtx
from .linpoly import LinearizedPoly, monomial
from .linset import (
    Classification,
    SpanLinearSet,
    WeightSpectrum,
    classify,
    span_weights,
    weight_spectrum,
)


@dataclass(frozen=True)
class Family:
    """A constructed family member plus its expected classification."""

    name: str
    ctx: FieldCtx
    obj: Union[LinearizedPoly, SpanLinearSet]
    index: Optional[int]  # None for span-defined sets
    params: dict = dc_field(default_factory=dict)
    expected: dict = dc_field(default_factory=dict)

    def spectrum(self) -> WeightSpectrum:
        if isinstance(self.obj, LinearizedPoly):
            return weight_spectrum(self.obj, self.index or 0)
        return span_weights(self.obj)


@dataclass(frozen=True)
class FamilyCheck:
    family: Family
    spectrum: WeightSpectrum
    classification: Classification
    matches: bool
    mismatches: tuple[str, ...]


def verify_family(fam: Family) -> FamilyCheck:
    """Compare the computed spectrum against the family's expectations."""
    spec = fam.spectrum()
    cls = classify(spec)
    bad = []
    exp = fam.expected
    if "r" in exp and cls.r != exp["r"]:
        bad.append(f"r={cls.r} expected {exp['r']}")
    if "max_weight" in exp and cls.max_weight != exp["max_weight"]:
        bad.append(f"max_weight={cls.max_weight} expected {exp['max_weight']}")
    if "club" in exp and cls.club_weight != exp["club"]:
        bad.append(f"club={cls.club_weight} expected {exp['club']}")
    if "scattered" in exp and cls.scattered != exp["scattered"]:
        bad.append(f"scattered={cls.scattered} expected {exp['scattered']}")
    if "counts" in exp and spec.merged_counts() != exp["counts"]:
        bad.append(f"counts={spec.merged_counts()} expected {exp['counts']}")
    return FamilyCheck(fam, spec, cls, not bad, tuple(bad))


# ---------------------------------------------------------------------------
# Trace and twisted trace
# ---------------------------------------------------------------------------


def make_trace(ctx: FieldCtx) -> Family:
    """The full relative trace: all coefficients one.

    Expected: one point of weight n-1, all other points of weight one,
    for every index.
    """
    poly = LinearizedPoly(ctx, [1] * ctx.n)
    n = ctx.n
    expected = {"r": 1, "max_weight": n - 1, "club": n - 1}
    return Family("trace", ctx, poly, 0, {}, expected)


def make_twisted_trace(ctx: FieldCtx, ell: int, m: int, s: int, j: int = 0) -> Family:
    """Relative trace to F_{q^m} composed with x -> x^(q^s), n = ell * m.

    Expected: a club with one point of weight m(ell-1), at index m*j for
    any j below ell.
    """
    n = ctx.n
    if ell * m != n:
        raise ValueError(f"need ell*m == n, got {ell}*{m} != {n}")
    if math.gcd(s, n) != 1:
        raise ValueError(f"gcd(s={s}, n={n}) must be 1")
    if not 0 <= j < ell:
        raise ValueError("j must lie in [0, ell)")
    codes = [0] * n
    for jp in range(ell):
        codes[(jp * m + s) % n] = 1
    poly = LinearizedPoly.from_codes(ctx, codes)
    w = m * (ell - 1)
    expected = {"r": 1, "max_weight": w, "club": w}
    return Family(
        "twisted-trace", ctx, poly, (m * j) % n, {"ell": ell, "m": m, "s": s, "j": j}, expected
    )


# ---------------------------------------------------------------------------
# Lunardon-Polverino binomials
# ---------------------------------------------------------------------------


def make_lp(ctx: FieldCtx, delta: FFElement, s: int = 1, form: str = "f") -> Family:
    """LP binomial in either of its two equivalent shapes.

    form "f": x + delta x^(q^(2s)), index s.
    form "g": x^(q^(s(n-1))) + delta x^(q^s), index 0.
    Expected scattered exactly when the relative norm of delta is not one;
    maximum weight at most two either way.
    """
    n = ctx.n
    if math.gcd(s, n) != 1:
        raise ValueError(f"gcd(s={s}, n={n}) must be 1")
    d = ctx.element(delta)
    if d.code == 0:
        raise ValueError("delta must be nonzero")
    codes = [0] * n
    if form == "f":
        codes[0] = 1
        slot = (2 * s) % n
        codes[slot] = ctx.add(codes[slot], d.code)
        index = s % n
    elif form == "g":
        codes[(s * (n - 1)) % n] = 1
        slot = s % n
        codes[slot] = ctx.add(codes[slot], d.code)
        index = 0
    else:
        raise ValueError("form must be 'f' or 'g'")
    poly = LinearizedPoly.from_codes(ctx, codes)
    norm_one = d.rel_norm() == 1
    expected = {"scattered": not norm_one}
    if not norm_one:
        expected["r"] = 0
    return Family(
        "lp", ctx, poly, index, {"delta": d.code, "s": s, "form": form, "norm_one": norm_one}, expected
    )


# ---------------------------------------------------------------------------
# The degree-five club binomial family (q a power of 4)
# ---------------------------------------------------------------------------


def cube_root_unit(ctx: FieldCtx) -> FFElement:
    """The element w of the F_4 subfield with w^2 = w + 1, smallest code."""
    if ctx.p != 2 or ctx.e % 2:
        raise ValueError("q must be a power of 4")
    cands = [
        c
        for c in ctx.subfield_codes_abs(2)
        if c not in (0, 1)
    ]
    for c in sorted(cands):
        if ctx.mul(c, c) == ctx.add(c, 1):
            return FFElement(ctx, c)
    raise RuntimeError("no cube root of unity found")  # pragma: no cover


def make_q5_club(ctx: FieldCtx) -> Family:
    """x^(q^4) + w x^(q^3) + w x^q + x over F_{q^5}, q a power of 4.

    w is a primitive cube root of unity.  Expected: a 3-club of index 0
    (single point of weight 3, all others weight one), and still 1-fat for
    the indices 1, 3 and 4.
    """
    if ctx.n != 5:
        raise ValueError("this family lives over degree-5 extensions")
    w = cube_root_unit(ctx)
    poly = LinearizedPoly(ctx, [1, w, ctx.zero(), w, 1])
    expected = {"r": 1, "max_weight": 3, "club": 3}
    return Family("q5-club", ctx, poly, 0, {"w": w.code}, expected)


# ---------------------------------------------------------------------------
# Span-defined clubs from a power basis
# ---------------------------------------------------------------------------


def make_basis_club(ctx: FieldCtx, lam: FFElement) -> Family:
    """(n-2)-club spanned by {(lam^i, 0)}, (lam^(n-1), 1) and (0, lam).

    Requires the powers 1, lam, ..., lam^(n-1) to be F_q-independent.
    """
    lam = ctx.element(lam)
    n = ctx.n
    powers = [ctx.pow_int(lam.code, i) for i in range(n)]
    if not ctx.fq_independent([[c] for c in powers]):
        raise ValueError("powers of lambda do not form an F_q-basis")
    gens = [(powers[i], 0) for i in range(1, n - 1)]
    gens.append((powers[n - 1], 1))
    gens.append((0, lam.code))
    span = SpanLinearSet(ctx, tuple(gens))
    expected = {"r": 1, "max_weight": n - 2, "club": n - 2}
    return Family("basis-club", ctx, span, None, {"lambda": lam.code}, expected)


# ---------------------------------------------------------------------------
# Rank-4 representatives on the line over F_{q^4}
# ---------------------------------------------------------------------------

RANK4_CASES = (
    "baer",
    "scattered",
    "club3",
    "qplus1-fat",
    "club2-poly",
    "club2-span",
    "2fat-a",
    "2fat-b",
)


def _require_outside_subfield(ctx: FieldCtx, code: int, m: int, label: str):
    if ctx.in_subfield(code, m):
        raise ValueError(f"{label} must lie outside F_(q^{m})")


def make_rank4_rep(ctx: FieldCtx, case: str, **params) -> Family:
    """Representative of one class of rank-4 linear sets on the line over F_{q^4}.

    Cases and their expected merged weight distributions:
      baer:        x^(q^2);               all q^2+1 points of weight 2
      scattered:   x^q + delta x^(q^3), norm(delta) != 1;  all weight 1
      club3:       trace;                 {3: 1, 1: q^3}
      qplus1-fat:  span with eta;         {2: q+1, 1: q^3-q}
      club2-poly:  x^q - x^(q^3);         {2: 1, 1: q^3+q^2}
      club2-span:  span with eta1, eta2;  {2: 1, 1: q^3+q^2}
      2fat-a:      span with xi, eta;     {2: 2, 1: q^3+q^2-q-1}
      2fat-b:      span with eta1, eta2;  {2: 2, 1: q^3+q^2-q-1}
    """
    if ctx.n != 4:
        raise ValueError("rank-4 representatives live over degree-4 extensions")
    q = ctx.q
    if case == "baer":
        poly = monomial(ctx, 1, 2)
        expected = {"counts": {2: q**2 + 1}, "r": q**2 + 1, "max_weight": 2}
        return Family("rank4:baer", ctx, poly, 0, {}, expected)
    if case == "scattered":
        delta = ctx.element(params["delta"])
        if delta.rel_norm() == 1:
            raise ValueError("scattered case needs norm(delta) != 1")
        codes = [0, 1, 0, delta.code]
        poly = LinearizedPoly.from_codes(ctx, codes)
        expected = {"scattered": True, "counts": {1: q**3 + q**2 + q + 1}}
        return Family("rank4:scattered", ctx, poly, 0, {"delta": delta.code}, expected)
    if case == "club3":
        poly = LinearizedPoly(ctx, [1, 1, 1, 1])
        expected = {"counts": {3: 1, 1: q**3}, "club": 3}
        return Family("rank4:club3", ctx, poly, 0, {}, expected)
    if case == "qplus1-fat":
        eta = ctx.element(params["eta"])
        _require_outside_subfield(ctx, eta.code, 2, "eta")
        e2 = ctx.mul(eta.code, eta.code)
        gens = (
            (eta.code, 0),
            (ctx.neg(e2), ctx.neg(eta.code)),
            (1, 0),
            (0, 1),
        )
        span = SpanLinearSet(ctx, gens)
        expected = {"counts": {2: q + 1, 1: q**3 - q}, "r": q + 1}
        return Family("rank4:qplus1-fat", ctx, span, None, {"eta": eta.code}, expected)
    if case == "club2-poly":
        codes = [0, 1, 0, ctx.neg(1)]
        poly = LinearizedPoly.from_codes(ctx, codes)
        expected = {"counts": {2: 1, 1: q**3 + q**2}, "club": 2}
        return Family("rank4:club2-poly", ctx, poly, 0, {}, expected)
    if case == "club2-span":
        eta1 = ctx.element(params["eta1"])
        eta2 = ctx.element(params["eta2"])
        _require_outside_subfield(ctx, eta1.code, 2, "eta1")
        sq = ctx.mul(eta1.code, eta1.code)
        if not ctx.fq_independent([[1], [eta1.code], [eta2.code], [sq]]):
            raise ValueError("1, eta1, eta2, eta1^2 must be F_q-independent")
        gens = (
            (0, ctx.neg(eta1.code)),
            (1, 0),
            (0, 1),
            (ctx.neg(eta1.code), ctx.neg(eta2.code)),
        )
        span = SpanLinearSet(ctx, gens)
        expected = {"counts": {2: 1, 1: q**3 + q**2}, "club": 2}
        return Family(
            "rank4:club2-span", ctx, span, None, {"eta1": eta1.code, "eta2": eta2.code}, expected
        )
    if case == "2fat-a":
        xi = ctx.element(params["xi"])
        eta = ctx.element(params["eta"])
        if not ctx.in_subfield(xi.code, 2):
            raise ValueError("xi must lie in F_(q^2)")
        if ctx.in_subfield(xi.code, 1):
            raise ValueError("xi must lie outside F_q")
        _require_outside_subfield(ctx, eta.code, 2, "eta")
        gens = (
            (ctx.neg(xi.code), 0),
            (1, 0),
            (0, ctx.neg(eta.code)),
            (0, 1),
        )
        span = SpanLinearSet(ctx, gens)
        expected = {"counts": {2: 2, 1: q**3 + q**2 - q - 1}, "r": 2}
        return Family("rank4:2fat-a", ctx, span, None, {"xi": xi.code, "eta": eta.code}, expected)
    if case == "2fat-b":
        eta1 = ctx.element(params["eta1"])
        eta2 = ctx.element(params["eta2"])
        _require_outside_subfield(ctx, eta1.code, 2, "eta1")
        _require_outside_subfield(ctx, eta2.code, 2, "eta2")
        prod = ctx.mul(eta1.code, eta2.code)
        if not ctx.fq_independent([[1], [eta1.code], [eta2.code], [prod]]):
            raise ValueError("1, eta1, eta2, eta1*eta2 must be F_q-independent")
        gens = (
            (1, 0),
            (0, 1),
            (eta1.code, 0),
            (1, ctx.inv(eta2.code)),
        )
        span = SpanLinearSet(ctx, gens)
        expected = {"counts": {2: 2, 1: q**3 + q**2 - q - 1}, "r": 2}
        return Family(
            "rank4:2fat-b", ctx, span, None, {"eta1": eta1.code, "eta2": eta2.code}, expected
        )
    raise ValueError(f"unknown rank-4 case {case!r}; choose from {RANK4_CASES}")


def default_rank4_params(ctx: FieldCtx, case: str) -> Optional[dict]:
    """Smallest-code parameters satisfying a case's constraints.

    Returns None when the case has no valid parameters over this field
    (for example the scattered binomial over F_{2^4} needs delta = 0,
    which is allowed there since norm(0) = 0 != 1).
    """
    if ctx.n != 4:
        raise ValueError("rank-4 representatives live over degree-4 extensions")
    if case in ("baer", "club3", "club2-poly"):
        return {}
    if case == "scattered":
        for c in range(ctx.order):
            if ctx.rel_norm_code(c) != 1:
                return {"delta": ctx.from_code(c)}
        return None
    if case == "qplus1-fat":
        for c in range(ctx.order):
            if not ctx.in_subfield(c, 2):
                return {"eta": ctx.from_code(c)}
        return None
    if case == "club2-span":
        for c1 in range(ctx.order):
            if ctx.in_subfield(c1, 2):
                continue
            sq = ctx.mul(c1, c1)
            for c2 in range(ctx.order):
                if ctx.fq_independent([[1], [c1], [c2], [sq]]):
                    return {"eta1": ctx.from_code(c1), "eta2": ctx.from_code(c2)}
        return None
    if case == "2fat-a":
        xi = next(
            (c for c in ctx.subfield_codes(2) if not ctx.in_subfield(c, 1)), None
        )
        eta = next((c for c in range(ctx.order) if not ctx.in_subfield(c, 2)), None)
        if xi is None or eta is None:
            return None
        return {"xi": ctx.from_code(xi), "eta": ctx.from_code(eta)}
    if case == "2fat-b":
        for c1 in range(ctx.order):
            if ctx.in_subfield(c1, 2):
                continue
            for c2 in range(ctx.order):
                if ctx.in_subfield(c2, 2):
                    continue
                prod = ctx.mul(c1, c2)
                if ctx.fq_independent([[1], [c1], [c2], [prod]]):
                    return {"eta1": ctx.from_code(c1), "eta2": ctx.from_code(c2)}
        return None
    raise ValueError(f"unknown rank-4 case {case!r}")


# ---------------------------------------------------------------------------
# Stabilizer soundness for the degree-five club family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerReport:
    claimed_count: int
    verified_count: int
    all_stabilize: bool
    b_solutions: tuple[int, ...]
    b_set_additive: bool
    tau_maps_to_adjoint: bool
    distinct: bool

    @property
    def ok(self) -> bool:
        return (
            self.all_stabilize
            and self.b_set_additive
            and self.tau_maps_to_adjoint
            and self.distinct
            and self.verified_count == self.claimed_count
        )


def q5_club_stabilizer_check(ctx: FieldCtx) -> StabilizerReport:
    """Soundness check of the claimed stabilizer of the q5-club subspace.

    The claimed elements are the semilinear maps (x, y) -> (a x + b y, a y)
    composed with even powers of the squaring map, where a ranges over
    F_q* and b over the solutions of b^(q^2) + (w+1) b^q + b = 0.  Each one
    is verified to map the graph subspace {(x, f(x))} into itself by full
    enumeration; the involution (x, y) -> (x + (w+1) y, y) is verified to
    carry the graph onto the graph of the adjoint.
    """
    fam = make_q5_club(ctx)
    f = fam.obj
    w = FFElement(ctx, fam.params["w"])
    fhat = f.adjoint()
    q = ctx.q
    M = ctx.mult_order
    s_exp = ctx.e // 2  # q = 4^s_exp
    # b-solutions: kernel of b^(q^2) + (w+1) b^q + b
    bpoly = LinearizedPoly(ctx, [1, w + 1, 1])
    logs = bpoly.eval_logs()
    bsols = [0] + sorted(int(ctx._exp[i]) for i in range(M) if logs[i] == -1)
    bset = set(bsols)
    additive = all(ctx.add(b1, b2) in bset for b1 in bsols for b2 in bsols)
    fq_star = [c for c in ctx.subfield_codes(1) if c]
    frob_steps = 5 * s_exp
    claimed = q * q * (q - 1) * frob_steps
    # graph of f in log coordinates: lx over all nonzero x, plus x = 0 (fixed
    # by every claimed map, so only the nonzero part needs checking)
    lx = ctx.v_logs_of_nonzero()
    lfx = f.eval_logs()
    verified = 0
    seen = set()
    all_ok = True
    for j in range(frob_steps):
        # automorphism x -> x^(4^j) acts on logs by multiplication
        fr = pow(4, j, M) if M else 0
        lxs = (lx * fr) % M if M else lx
        lfxs = np.where(lfx >= 0, (lfx * fr) % max(M, 1), -1)
        for a in fq_star:
            la = int(ctx._log[a])
            axs = (lxs + la) % M
            afxs = np.where(lfxs >= 0, (lfxs + la) % M, -1)
            for b in bsols:
                seen.add((a, b, j))
                if b:
                    lb = int(ctx._log[b])
                    bfxs = np.where(lfxs >= 0, (lfxs + lb) % M, -1)
                    lu = ctx.v_add_logs(axs, bfxs)
                else:
                    lu = axs
                ok = bool((f.eval_on_logs(lu) == afxs).all())
                if ok:
                    verified += 1
                else:
                    all_ok = False
    # involution tau = (1, w+1; 0, 1) sends the graph of f to the graph of the adjoint
    lwp1 = int(ctx._log[(w + 1).code])
    shifted = ctx.v_add_logs(lx, np.where(lfx >= 0, (lfx + lwp1) % max(M, 1), -1))
    tau_ok = bool((fhat.eval_on_logs(shifted) == lfx).all())
    return StabilizerReport(
        claimed_count=claimed,
        verified_count=verified,
        all_stabilize=all_ok,
        b_solutions=tuple(bsols),
        b_set_additive=additive,
        tau_maps_to_adjoint=tau_ok,
        distinct=len(seen) == claimed,
    )
