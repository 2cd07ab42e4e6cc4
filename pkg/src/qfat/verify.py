"""Verification suites: every desk-scale claim, computed against exhaustive
ground truth and reported claim by claim.

Hard claims fail the run; soft claims only record what the computation
found (these cover the two statements whose displayed closed forms are
known not to match exhaustive truth everywhere, where the finding itself
is the deliverable).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Optional

from .field import FFElement, FieldCtx, ctx_create
from .linpoly import LinearizedPoly, dickson, kernel_dim, normalize, weight_at
from .linset import (
    classify,
    graph_span,
    pair_count_identity,
    point_set,
    span_weights,
    weight_spectrum,
)
from .families import (
    RANK4_CASES,
    cube_root_unit,
    default_rank4_params,
    make_basis_club,
    make_lp,
    make_q5_club,
    make_rank4_rep,
    make_trace,
    make_twisted_trace,
    q5_club_stabilizer_check,
    verify_family,
)
from .quadform import (
    LPQuadForm,
    isotropic_closed_form_match,
    isotropic_count,
    norm_one_deltas,
    omega_pair_count,
    predicted_r_lp,
    predicted_r_lp_n4_dichotomy,
    radical,
    radical_image_set,
    radical_nontrivial_predicted,
    sigma_eval,
)
from .bounds import (
    BoundParams,
    chebotarev_applicable,
    chebotarev_ni_bound,
    curve_bound,
    curve_case,
    exceptional_scan,
)
from .search import enumerate_polys, linearity_degree, search_summary


@dataclass
class ClaimResult:
    claim: str
    description: str
    hard: bool
    passed: bool
    details: dict = dc_field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.hard else "NOTE")
        return f"[{status}] {self.claim}: {self.description}"


def _coprime_indices(n: int) -> list[int]:
    return [s for s in range(1, n) if math.gcd(s, n) == 1]


# ---------------------------------------------------------------------------
# Criterion 1: scattered LP binomials are exactly the non-norm-one ones
# ---------------------------------------------------------------------------

ZANELLA_GRID = (
    (2, 1, 3),
    (2, 1, 4),
    (2, 1, 5),
    (3, 1, 3),
    (3, 1, 4),
    (3, 1, 5),
    (2, 2, 3),
    (2, 2, 4),
    (2, 2, 5),
)


def suite_zanella(grid=ZANELLA_GRID, q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    for (p, e, n) in grid:
        ctx = ctx_create(p, e, n)
        if q_filter and ctx.q != q_filter:
            continue
        if n_filter and n != n_filter:
            continue
        for s in _coprime_indices(n):
            bad = None
            checked = 0
            for dc in range(1, ctx.order):
                delta = FFElement(ctx, dc)
                fam = make_lp(ctx, delta, s, "f")
                spec = weight_spectrum(fam.obj, fam.index)
                scattered = spec.r == 0
                norm_not_one = ctx.rel_norm_code(dc) != 1
                checked += 1
                if scattered != norm_not_one:
                    bad = {"delta": dc, "scattered": scattered, "norm_not_one": norm_not_one}
                    break
            out.append(
                ClaimResult(
                    claim=f"zanella q={ctx.q} n={n} s={s}",
                    description=f"scattered iff norm(delta) != 1 over all {checked} deltas",
                    hard=True,
                    passed=bad is None,
                    details={"counterexample": bad} if bad else {"deltas": checked},
                )
            )
    return out


# ---------------------------------------------------------------------------
# Criterion 2: odd-degree LP fatness, with the direct pair-count oracle
# ---------------------------------------------------------------------------


def suite_lp_odd(q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    for (p, n) in ((2, 3), (3, 3), (2, 5), (3, 5)):
        if q_filter and p != q_filter:
            continue
        if n_filter and n != n_filter:
            continue
        ctx = ctx_create(p, 1, n)
        expected_r = Fraction(p ** (n - 1) - 1, p**2 - 1)
        omega_expected = (p - 1) * (p**n - p)
        bad = None
        deltas = norm_one_deltas(ctx)
        for s in _coprime_indices(n):
            for delta in deltas:
                spec = weight_spectrum(make_lp(ctx, delta, s, "f").obj, s)
                if spec.r != expected_r:
                    bad = {"delta": delta.code, "s": s, "r": spec.r}
                    break
                om = omega_pair_count(ctx, delta, s)
                if om != omega_expected:
                    bad = {"delta": delta.code, "s": s, "omega": om}
                    break
            if bad:
                break
        out.append(
            ClaimResult(
                claim=f"lp-odd q={p} n={n}",
                description=(
                    f"r = {expected_r} and pair set size {omega_expected} "
                    f"for all {len(deltas)} norm-one deltas, every coprime index"
                ),
                hard=True,
                passed=bad is None,
                details={"counterexample": bad} if bad else {"r": str(expected_r)},
            )
        )
    return out


# ---------------------------------------------------------------------------
# Criteria 3-5: even-degree LP fatness, quadratic-form correspondence,
# radical dichotomy
# ---------------------------------------------------------------------------

# Exhaustive ground truth, frozen from the computation itself (the soft
# comparisons against the displayed closed forms are reported alongside).
LP_EVEN_TRUTH = {
    (2, 4): {1: 5, 3: 10},
    (3, 4): {1: 10, 4: 30},
    (2, 6): {9: 42, 13: 21},
    (3, 6): {28: 273, 37: 91},
}


def suite_lp_even(q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    for (p, n) in ((2, 4), (3, 4), (2, 6), (3, 6)):
        if q_filter and p != q_filter:
            continue
        if n_filter and n != n_filter:
            continue
        ctx = ctx_create(p, 1, n)
        deltas = norm_one_deltas(ctx)
        bullet = predicted_r_lp(p, n, True)
        r_hist: dict[int, int] = {}
        bullet_matches = 0
        dichotomy_matches = 0
        corr_bad = None
        radical_bad = None
        image_eq_nontrivial = 0
        image_ne_nontrivial = 0
        for delta in deltas:
            form = LPQuadForm.build(ctx, delta, 1)
            spec = weight_spectrum(make_lp(ctx, delta, 1, "f").obj, 1)
            r = spec.r
            r_hist[r] = r_hist.get(r, 0) + 1
            if r == bullet:
                bullet_matches += 1
            if n == 4 and r == predicted_r_lp_n4_dichotomy(ctx, delta):
                dichotomy_matches += 1
            # criterion 4: the quadratic form counts the heavy points
            iso = isotropic_count(form)
            if iso % (p**2 - 1) or iso // (p**2 - 1) != spec.counts.get(2, 0):
                corr_bad = {"delta": delta.code, "iso": iso, "N2": spec.counts.get(2, 0)}
            # criterion 5: radical size per the solvability condition,
            # cross-checked against the polarization itself (dimension via
            # the Gram rank, membership via explicit orthogonality)
            rad = radical(form)
            predicted = radical_nontrivial_predicted(form)
            if (len(rad) > 1) != predicted or len(rad) not in (1, p**2):
                radical_bad = {"delta": delta.code, "size": len(rad)}
            gram_rank = _gram_rank(form)
            if ctx.n - gram_rank != _dim_from_size(p, len(rad)):
                radical_bad = {"delta": delta.code, "gram_rank": gram_rank, "size": len(rad)}
            basis = ctx.basis_over_q()
            for u in rad:
                if any(sigma_eval(form, u, FFElement(ctx, b)).code for b in basis):
                    radical_bad = {"delta": delta.code, "non_orthogonal": u.code}
                    break
            if len(rad) > 1:
                img = radical_image_set(form)
                if {x.code for x in rad} == img:
                    image_eq_nontrivial += 1
                else:
                    image_ne_nontrivial += 1
        truth = LP_EVEN_TRUTH[(p, n)]
        out.append(
            ClaimResult(
                claim=f"lp-even q={p} n={n} ground truth",
                description=f"exhaustive r histogram over {len(deltas)} norm-one deltas is {truth}",
                hard=True,
                passed=r_hist == truth,
                details={"r_hist": r_hist},
            )
        )
        bullet_ok = bullet_matches == len(deltas)
        desc = (
            f"closed-form r = {bullet} matches {bullet_matches}/{len(deltas)} deltas"
        )
        if n == 4:
            desc += f"; two-case dichotomy matches {dichotomy_matches}/{len(deltas)}"
        out.append(
            ClaimResult(
                claim=f"lp-even q={p} n={n} closed form vs truth",
                description=desc,
                hard=False,
                passed=bullet_ok,
                details={
                    "bullet": str(bullet),
                    "bullet_matches": bullet_matches,
                    "dichotomy_matches": dichotomy_matches if n == 4 else None,
                    "deltas": len(deltas),
                },
            )
        )
        out.append(
            ClaimResult(
                claim=f"lp-even q={p} n={n} weight-two correspondence",
                description="(q^2-1) N_2 equals the nonzero isotropic count for every delta",
                hard=True,
                passed=corr_bad is None,
                details={"counterexample": corr_bad} if corr_bad else {},
            )
        )
        out.append(
            ClaimResult(
                claim=f"lp-even q={p} n={n} radical dichotomy",
                description="radical size in {1, q^2} per the norm-to-F_{q^2} condition, "
                "dimension confirmed by the polarization Gram rank",
                hard=True,
                passed=radical_bad is None,
                details={"counterexample": radical_bad} if radical_bad else {},
            )
        )
        if image_eq_nontrivial + image_ne_nontrivial:
            # The displayed set-builder reads as the image of u -> delta
            # u^(q^2s) + u, but the radical is the root set of that map; the
            # two coincide only in characteristic 2 with n = 4 (the map then
            # squares to zero on a space of matching dimension).  Reported,
            # not asserted.
            out.append(
                ClaimResult(
                    claim=f"lp-even q={p} n={n} radical vs image set",
                    description=(
                        f"nontrivial radical equals the image of delta u^(q^2s)+u for "
                        f"{image_eq_nontrivial}/{image_eq_nontrivial + image_ne_nontrivial} deltas; "
                        "the radical is the root set, which the orthogonality check confirms"
                    ),
                    hard=False,
                    passed=True,
                    details={
                        "equal": image_eq_nontrivial,
                        "not_equal": image_ne_nontrivial,
                    },
                )
            )
    return out


def _dim_from_size(q: int, size: int) -> int:
    d = round(math.log(size, q))
    if q**d != size:
        raise AssertionError(f"radical size {size} is not a power of q")
    return d


def _gram_rank(form: LPQuadForm) -> int:
    """F_q-rank of the polarization's Gram matrix on a fixed basis."""
    ctx = form.ctx
    basis = ctx.basis_over_q()
    rows = []
    for bi in basis:
        rows.append([sigma_eval(form, FFElement(ctx, bi), FFElement(ctx, bj)) for bj in basis])
    # entries lie in F_q; rank over F_q via the subfield expansion
    vectors = [[x.code for x in row] for row in rows]
    rank = 0
    pool = []
    for vec in vectors:
        if ctx.fq_rank(pool + [vec]) == rank + 1:
            pool.append(vec)
            rank += 1
    return rank


# ---------------------------------------------------------------------------
# Criterion 6: the degree-five club binomial
# ---------------------------------------------------------------------------


def suite_fw(q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    if (q_filter and q_filter != 4) or (n_filter and n_filter != 5):
        return out
    ctx = ctx_create(2, 2, 5)
    fam = make_q5_club(ctx)
    f = fam.obj
    w = FFElement(ctx, fam.params["w"])
    spec = weight_spectrum(f, 0)
    expected_counts = {3: 1, 1: ctx.q**3 * (ctx.q + 1)}
    out.append(
        ClaimResult(
            claim="q5-club spectrum",
            description=f"one point of weight 3, {expected_counts[1]} of weight 1, index 0",
            hard=True,
            passed=spec.merged_counts() == expected_counts,
            details={"counts": spec.merged_counts()},
        )
    )
    ok_indices = all(weight_spectrum(f, t).r == 1 for t in (1, 3, 4))
    out.append(
        ClaimResult(
            claim="q5-club other indices",
            description="still one heavy point at indices 1, 3 and 4",
            hard=True,
            passed=ok_indices,
            details={},
        )
    )
    minors = dickson(f, 1).northeast_minors()
    minors_ok = (
        minors[1] == w * w
        and minors[1].code != 0
        and all(minors[j].code == 0 for j in (2, 3, 4))
    )
    out.append(
        ClaimResult(
            claim="q5-club dickson minors",
            description="north-east minors: order 2 equals w^2 != 0, orders 3..5 vanish",
            hard=True,
            passed=minors_ok and kernel_dim(f) == 3,
            details={"minors": [m.code for m in minors], "kernel_dim": kernel_dim(f)},
        )
    )
    return out


def suite_stabilizer(q_filter=None, n_filter=None) -> list[ClaimResult]:
    if (q_filter and q_filter != 4) or (n_filter and n_filter != 5):
        return []
    ctx = ctx_create(2, 2, 5)
    rep = q5_club_stabilizer_check(ctx)
    return [
        ClaimResult(
            claim="q5-club stabilizer soundness",
            description=(
                f"all {rep.claimed_count} claimed maps stabilize the graph subspace; "
                "the shear involution carries it onto the adjoint graph"
            ),
            hard=True,
            passed=rep.ok,
            details={
                "claimed": rep.claimed_count,
                "verified": rep.verified_count,
                "b_solutions": len(rep.b_solutions),
                "b_additive": rep.b_set_additive,
                "tau": rep.tau_maps_to_adjoint,
            },
        )
    ]


# ---------------------------------------------------------------------------
# Criterion 8 + 11: the exhaustive degree-four search and bound consistency
# ---------------------------------------------------------------------------

SEARCH_Q2N4_TRUTH = {0: 480, 1: 19216, 2: 36000, 3: 9600, 5: 240}


def suite_search(q_filter=None, n_filter=None) -> list[ClaimResult]:
    if (q_filter and q_filter != 2) or (n_filter and n_filter != 4):
        return []
    ctx = ctx_create(2, 1, 4)
    summary = search_summary(ctx, support=(0, 1, 2, 3), t=0)
    out = [
        ClaimResult(
            claim="search q=2 n=4 realized r",
            description="realized r over properly F_q-linear polynomials is exactly {0, 1, 2, 3}",
            hard=True,
            passed=summary["realized_r_proper"] == [0, 1, 2, 3],
            details=summary,
        ),
        ClaimResult(
            claim="search q=2 n=4 histogram",
            description=f"full histogram over all 65536 polynomials is {SEARCH_Q2N4_TRUTH} "
            "(r = 5 comes from Baer sublines, which are F_{q^2}-linear)",
            hard=True,
            passed=summary["r_histogram_all"] == SEARCH_Q2N4_TRUTH,
            details={"histogram": summary["r_histogram_all"]},
        ),
    ]
    return out


def suite_bound_consistency(q_filter=None, n_filter=None) -> list[ClaimResult]:
    if (q_filter and q_filter != 2) or (n_filter and n_filter != 4):
        return []
    ctx = ctx_create(2, 1, 4)
    curve_checked = 0
    curve_bad = None
    cheb_checked = 0
    cheb_bad = None
    for t in (0, 1):
        for f in enumerate_polys(ctx, support=(0, 1, 2, 3)):
            k = f.q_degree
            if k is None or f.is_monomial():
                continue
            if f.codes[k] != 1:
                continue  # the curve bound is stated for monic polynomials
            spec = weight_spectrum(f, t)
            case = curve_case(f.support, k, t)
            if case is not None:
                h = kernel_dim(f)
                params = BoundParams(
                    q=ctx.q, n=ctx.n, k=k, t=t, v=f.min_support, h=h,
                    W=spec.max_weight, r=spec.r,
                )
                cb = curve_bound(params, case)
                curve_checked += 1
                if spec.curve_pair_sum() < cb.lower_bound:
                    curve_bad = {"codes": f.codes, "t": t, "lhs": spec.curve_pair_sum(), "rhs": cb.lower_bound}
            if t >= 1 and chebotarev_applicable(f.support, t) and spec.r > 0:
                bound = chebotarev_ni_bound(ctx.q, ctx.n, max(k, t))
                cheb_checked += 1
                if not spec.r > bound:
                    cheb_bad = {"codes": f.codes, "t": t, "r": spec.r, "bound": str(bound)}
    out = [
        ClaimResult(
            claim="bound consistency curve",
            description=f"pair sum >= curve bound for all {curve_checked} eligible (f, t) pairs",
            hard=True,
            passed=curve_bad is None,
            details={"checked": curve_checked, "counterexample": curve_bad},
        ),
        ClaimResult(
            claim="bound consistency chebotarev",
            description=f"r exceeds the Galois-theoretic bound for all {cheb_checked} eligible fat pairs",
            hard=True,
            passed=cheb_bad is None,
            details={"checked": cheb_checked, "counterexample": cheb_bad},
        ),
    ]
    # the lifting scan: the bound eventually exceeds any fixed r
    tr = LinearizedPoly(ctx_create(2, 1, 3), [1, 1, 1])
    scan = exceptional_scan(tr, 0, max_m=8, exhaustive_cap=1 << 13)
    bounds_seq = [rec.r_bound_ceil for rec in scan.records]
    growing = all(b2 > b1 for b1, b2 in zip(bounds_seq, bounds_seq[1:]))
    out.append(
        ClaimResult(
            claim="exceptional scan",
            description="lifted bound grows without limit and actual r stays above it "
            f"(first lift where the bound exceeds the base r: m={scan.first_m_bound_exceeds_base_r})",
            hard=True,
            passed=scan.all_consistent
            and growing
            and scan.first_m_bound_exceeds_base_r is not None,
            details={"bounds": bounds_seq, "base_r": scan.base_r},
        )
    )
    return out


# ---------------------------------------------------------------------------
# Criterion 9: rank-4 representatives
# ---------------------------------------------------------------------------


def suite_q4(q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    if n_filter and n_filter != 4:
        return out
    for p in (2, 3):
        if q_filter and p != q_filter:
            continue
        ctx = ctx_create(p, 1, 4)
        for case in RANK4_CASES:
            params = default_rank4_params(ctx, case)
            if params is None:
                out.append(
                    ClaimResult(
                        claim=f"rank4 {case} q={p}",
                        description="no valid parameters over this field",
                        hard=False,
                        passed=True,
                        details={"constructible": False},
                    )
                )
                continue
            chk = verify_family(make_rank4_rep(ctx, case, **params))
            out.append(
                ClaimResult(
                    claim=f"rank4 {case} q={p}",
                    description=f"computed distribution {chk.spectrum.merged_counts()} matches the stated one",
                    hard=True,
                    passed=chk.matches,
                    details={"mismatches": list(chk.mismatches)},
                )
            )
    return out


# ---------------------------------------------------------------------------
# Criterion 10: trace, twisted trace, basis club
# ---------------------------------------------------------------------------


def suite_families(q_filter=None, n_filter=None) -> list[ClaimResult]:
    out = []
    trace_grid = [
        (p, e, n)
        for (p, e) in ((2, 1), (3, 1), (2, 2))
        for n in (3, 4, 5)
    ]
    for (p, e, n) in trace_grid:
        ctx = ctx_create(p, e, n)
        if q_filter and ctx.q != q_filter:
            continue
        if n_filter and n != n_filter:
            continue
        chk = verify_family(make_trace(ctx))
        out.append(
            ClaimResult(
                claim=f"trace q={ctx.q} n={n}",
                description=f"one point of weight {n - 1}, the rest weight one",
                hard=True,
                passed=chk.matches,
                details={"counts": chk.spectrum.merged_counts()},
            )
        )
    for (ell, m) in ((2, 2), (2, 3)):
        n = ell * m
        if (q_filter and q_filter != 2) or (n_filter and n_filter != n):
            continue
        ctx = ctx_create(2, 1, n)
        ok = True
        details = {}
        for j in range(ell):
            fam = make_twisted_trace(ctx, ell, m, 1, j)
            chk = verify_family(fam)
            details[f"j={j}"] = chk.spectrum.merged_counts()
            ok = ok and chk.matches and fam.index == m * j
        out.append(
            ClaimResult(
                claim=f"twisted-trace ell={ell} m={m} q=2",
                description=f"one point of weight {m * (ell - 1)} at index m*j for every j",
                hard=True,
                passed=ok,
                details=details,
            )
        )
    if (not q_filter or q_filter == 2) and (not n_filter or n_filter == 5):
        ctx = ctx_create(2, 1, 5)
        chk = verify_family(make_basis_club(ctx, ctx.generator()))
        out.append(
            ClaimResult(
                claim="basis-club q=2 n=5",
                description="the power-basis span is a 3-club of rank 5",
                hard=True,
                passed=chk.matches,
                details={"counts": chk.spectrum.merged_counts()},
            )
        )
    return out


# ---------------------------------------------------------------------------
# Criterion 12: property suites
# ---------------------------------------------------------------------------

PAIR_COUNT_FIELDS = (
    (2, 1, 3),
    (2, 1, 4),
    (3, 1, 3),
    (2, 2, 3),
    (2, 1, 6),
    (3, 1, 4),
    (2, 2, 4),
    (3, 1, 5),
    (2, 1, 11),
    (3, 1, 6),
    (2, 2, 5),
    (2, 1, 12),
)

DICKSON_FIELDS = (
    (2, 1, 2),
    (2, 1, 3),
    (2, 1, 4),
    (2, 1, 5),
    (3, 1, 2),
    (3, 1, 3),
    (3, 1, 4),
    (2, 2, 2),
    (2, 2, 3),
    (5, 1, 2),
    (5, 1, 3),
    (7, 1, 2),
)


def suite_properties(q_filter=None, n_filter=None, rng_seed: int = 20240) -> list[ClaimResult]:
    rng = random.Random(rng_seed)
    out = []
    # pair-count identity across fields up to 2^12, two routes per polynomial
    bad = None
    checked = 0
    for (p, e, n) in PAIR_COUNT_FIELDS:
        ctx = ctx_create(p, e, n)
        polys = [LinearizedPoly(ctx, [1] * n)]
        deltas = norm_one_deltas(ctx)
        if len(deltas) > 1:
            polys.append(make_lp(ctx, deltas[1], 1, "f").obj)
        # random extras only on the smaller fields; the Dickson route costs
        # O(points * n^3) per polynomial
        extras = 2 if ctx.order <= 1024 else 0
        for _ in range(extras):
            codes = [rng.randrange(ctx.order) for _ in range(n)]
            polys.append(LinearizedPoly.from_codes(ctx, codes))
        for f in polys:
            for t in (0, 1):
                lhs, rhs = pair_count_identity(f, t)
                checked += 1
                if lhs != rhs:
                    bad = {"field": (p, e, n), "codes": f.codes, "t": t, "lhs": lhs, "rhs": rhs}
    out.append(
        ClaimResult(
            claim="pair-count identity",
            description=f"grouped pair count equals the Dickson-route weighted sum "
            f"({checked} (f, t) pairs, fields up to 2^12)",
            hard=True,
            passed=bad is None,
            details={"checked": checked, "counterexample": bad},
        )
    )
    # direct O(q^{2n}) oracle on tiny fields
    bad = None
    for (p, e, n) in ((2, 1, 3), (3, 1, 2), (2, 2, 2)):
        ctx = ctx_create(p, e, n)
        for _ in range(3):
            f = LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            for t in (0, 1):
                direct = 0
                for x in range(1, ctx.order):
                    fx = f.eval(FFElement(ctx, x)).code
                    xt = ctx.frob(x, t)
                    for y in range(1, ctx.order):
                        fy = f.eval(FFElement(ctx, y)).code
                        yt = ctx.frob(y, t)
                        if ctx.mul(fx, yt) == ctx.mul(fy, xt):
                            direct += 1
                lhs, _ = pair_count_identity(f, t)
                if direct != lhs:
                    bad = {"field": (p, e, n), "codes": f.codes, "t": t}
    out.append(
        ClaimResult(
            claim="pair-count direct oracle",
            description="raw double loop over all pairs agrees on tiny fields",
            hard=True,
            passed=bad is None,
            details={"counterexample": bad} if bad else {},
        )
    )
    # Dickson rank kernel dimension vs exhaustive root count, 1000 samples
    bad = None
    total = 0
    per_field = 1000 // len(DICKSON_FIELDS) + 1
    for (p, e, n) in DICKSON_FIELDS:
        ctx = ctx_create(p, e, n)
        for _ in range(per_field):
            if total >= 1000:
                break
            f = LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            kd = kernel_dim(f)
            rc = f.root_count()
            total += 1
            if ctx.q**kd != rc:
                bad = {"field": (p, e, n), "codes": f.codes, "kd": kd, "roots": rc}
    out.append(
        ClaimResult(
            claim="dickson kernel dimension",
            description=f"rank route equals exhaustive root count on {total} random polynomials",
            hard=True,
            passed=bad is None,
            details={"checked": total, "counterexample": bad},
        )
    )
    # adjoint point-set equality, degree 4, q in {2, 3}
    bad = None
    checked = 0
    for p in (2, 3):
        ctx = ctx_create(p, 1, 4)
        polys = [LinearizedPoly(ctx, [1] * 4)]
        for dc in range(1, ctx.order):
            codes = [0] * 4
            codes[0] = 1
            codes[2] = dc
            polys.append(LinearizedPoly.from_codes(ctx, codes))
        for _ in range(200):
            polys.append(
                LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(4)])
            )
        for f in polys:
            if f.is_zero():
                continue
            checked += 1
            if point_set(f, 0) != point_set(f.adjoint(), 0):
                bad = {"field": p, "codes": f.codes}
    out.append(
        ClaimResult(
            claim="adjoint point sets",
            description=f"the point sets of f and its adjoint coincide "
            f"({checked} polynomials over degree-4 fields, all points compared)",
            hard=True,
            passed=bad is None,
            details={"checked": checked, "counterexample": bad},
        )
    )
    # span route equals polynomial route
    bad = None
    checked = 0
    for (p, e, n) in ((2, 1, 4), (3, 1, 3), (2, 2, 3)):
        ctx = ctx_create(p, e, n)
        for _ in range(10):
            f = LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            if f.is_zero():
                continue
            for t in range(n):
                s1 = weight_spectrum(f, t)
                s2 = span_weights(graph_span(f, t))
                checked += 1
                if s1.counts != s2.counts or s2.infinity_weight != 0:
                    bad = {"field": (p, e, n), "codes": f.codes, "t": t}
    out.append(
        ClaimResult(
            claim="span route",
            description=f"subspace enumeration reproduces the polynomial spectrum ({checked} pairs)",
            hard=True,
            passed=bad is None,
            details={"checked": checked, "counterexample": bad},
        )
    )
    return out


# ---------------------------------------------------------------------------
# Suite registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., list[ClaimResult]]] = {
    "zanella": suite_zanella,
    "lp-odd": suite_lp_odd,
    "lp-even": suite_lp_even,
    "fw": suite_fw,
    "stabilizer": suite_stabilizer,
    "search": suite_search,
    "bounds": suite_bound_consistency,
    "q4": suite_q4,
    "families": suite_families,
    "properties": suite_properties,
}


def run_suites(
    names: list[str], q_filter: Optional[int] = None, n_filter: Optional[int] = None
) -> list[ClaimResult]:
    if "all" in names:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        results.extend(SUITES[name](q_filter=q_filter, n_filter=n_filter))
    return results
