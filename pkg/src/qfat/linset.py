"""Weight spectra and classification of linear sets of rank n on the
projective line over F_{q^n}.

A polynomial pair (f, t) defines the point set {(x^(q^t) : f(x))}.  For
x != 0 the point is (1 : f(x)/x^(q^t)), so the whole spectrum is the fiber
histogram of that quotient map; each fiber together with 0 is an
F_q-subspace, hence has size q^w - 1.  This runs fully vectorized in the
log domain.  Span-defined sets enumerate their subspace directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .field import CapExceededError, FFElement, FieldCtx
from .linpoly import LinearizedPoly, weight_at


@dataclass(frozen=True)
class WeightSpectrum:
    """Counts N_i of points of weight i, finite points and infinity split.

    counts covers the affine points (1 : m); infinity_weight is the weight
    of (0 : 1).  rank is the F_q-dimension of the defining subspace.
    """

    q: int
    n: int
    rank: int
    counts: dict[int, int]
    infinity_weight: int = 0

    def __post_init__(self):
        total = sum(
            ni * (self.q**i - 1) // (self.q - 1) for i, ni in self.counts.items()
        )
        total += (self.q**self.infinity_weight - 1) // (self.q - 1)
        expected = (self.q**self.rank - 1) // (self.q - 1)
        if total != expected:
            raise AssertionError(
                f"weight spectrum identity violated: {total} != {expected}"
            )

    @property
    def size(self) -> int:
        return sum(self.counts.values()) + (1 if self.infinity_weight else 0)

    @property
    def r(self) -> int:
        """Number of points of weight larger than one."""
        heavy = sum(ni for i, ni in self.counts.items() if i >= 2)
        return heavy + (1 if self.infinity_weight >= 2 else 0)

    @property
    def max_weight(self) -> int:
        weights = [i for i, ni in self.counts.items() if ni]
        if self.infinity_weight:
            weights.append(self.infinity_weight)
        return max(weights, default=0)

    def merged_counts(self) -> dict[int, int]:
        """Counts with the infinity point folded in."""
        out = dict(self.counts)
        if self.infinity_weight:
            out[self.infinity_weight] = out.get(self.infinity_weight, 0) + 1
        return {i: c for i, c in sorted(out.items()) if c}

    def curve_pair_sum(self) -> int:
        """sum of N_i (q^i - 1)(q^i - q) over the affine points."""
        return sum(
            ni * (self.q**i - 1) * (self.q**i - self.q) for i, ni in self.counts.items()
        )


@dataclass(frozen=True)
class Classification:
    scattered: bool
    r: int
    max_weight: int
    club_weight: Optional[int]
    constant_weight: Optional[int]
    size: int

    def as_dict(self) -> dict:
        return {
            "scattered": self.scattered,
            "r": self.r,
            "max_weight": self.max_weight,
            "club_weight": self.club_weight,
            "constant_weight": self.constant_weight,
            "size": self.size,
        }


def classify(spec: WeightSpectrum) -> Classification:
    merged = spec.merged_counts()
    weights = sorted(merged)
    constant = weights[0] if len(weights) == 1 else None
    r = spec.r
    club = None
    if r == 1 and spec.max_weight >= 2:
        heavy = [i for i in weights if i >= 2]
        if merged[heavy[0]] == 1:
            club = heavy[0]
    return Classification(
        scattered=(r == 0),
        r=r,
        max_weight=spec.max_weight,
        club_weight=club,
        constant_weight=constant,
        size=spec.size,
    )


# ---------------------------------------------------------------------------
# Polynomial-defined sets
# ---------------------------------------------------------------------------


def _fiber_counts(f: LinearizedPoly, t: int) -> tuple[np.ndarray, int]:
    """Sizes of the nonzero fibers of x -> f(x)/x^(q^t), plus the root count.

    Returns (counts over m-logs, number of nonzero roots of f).  Fibers are
    indexed by log(m); m = 0 corresponds to the roots and is kept separate.
    """
    ctx = f.ctx
    M = ctx.mult_order
    logs_fx = f.eval_logs()
    lx = ctx.v_logs_of_nonzero()
    nz = logs_fx != -1
    qt = ctx._q_pow_mod[t % ctx.n]
    m_logs = (logs_fx[nz] - lx[nz] * qt) % M if M else logs_fx[:0]
    counts = np.bincount(m_logs, minlength=max(M, 1))[: max(M, 1)]
    kernel_nonzero = int((~nz).sum())
    return counts, kernel_nonzero


def _weight_of_fiber(q: int, size_plus_one: int) -> int:
    w = round(math.log(size_plus_one, q))
    if q**w != size_plus_one:
        raise AssertionError(f"fiber size {size_plus_one - 1} is not q^w - 1")
    return w


def weight_spectrum(f: LinearizedPoly, t: int) -> WeightSpectrum:
    """Exact weight distribution of the point set of (f, t) over all m.

    Equivalent to evaluating weight_at for every m in F_{q^n}; computed as
    the fiber histogram of the quotient map, which agrees point for point.
    """
    ctx = f.ctx
    if not 0 <= t < ctx.n:
        raise ValueError("index t out of range")
    counts, kernel_nonzero = _fiber_counts(f, t)
    q = ctx.q
    spectrum: dict[int, int] = {}
    sizes = counts[counts > 0]
    if sizes.size:
        size_hist = np.bincount(sizes)
        for size, cnt in enumerate(size_hist):
            if cnt:
                w = _weight_of_fiber(q, size + 1)
                spectrum[w] = spectrum.get(w, 0) + int(cnt)
    if kernel_nonzero or f.is_zero():
        w0 = _weight_of_fiber(q, kernel_nonzero + 1) if not f.is_zero() else ctx.n
        if w0:
            spectrum[w0] = spectrum.get(w0, 0) + 1
    return WeightSpectrum(q=q, n=ctx.n, rank=ctx.n, counts=spectrum)


def point_set(f: LinearizedPoly, t: int) -> frozenset[int]:
    """Codes m of the affine points (1 : m) of the point set of (f, t)."""
    ctx = f.ctx
    counts, kernel_nonzero = _fiber_counts(f, t)
    codes = set(ctx.v_exp(np.nonzero(counts > 0)[0]).tolist())
    if kernel_nonzero or f.is_zero():
        codes.add(0)
    return frozenset(int(c) for c in codes)


def heavy_points(f: LinearizedPoly, t: int) -> list[tuple[int, int]]:
    """(m code, weight) for every point of weight at least two."""
    ctx = f.ctx
    counts, kernel_nonzero = _fiber_counts(f, t)
    q = ctx.q
    out = []
    heavy = np.nonzero(counts >= q * q - 1)[0]
    for mlog in heavy.tolist():
        w = _weight_of_fiber(q, int(counts[mlog]) + 1)
        if w >= 2:
            out.append((int(ctx._exp[mlog]), w))
    if kernel_nonzero:
        w0 = _weight_of_fiber(q, kernel_nonzero + 1)
        if w0 >= 2:
            out.append((0, w0))
    elif f.is_zero():
        out.append((0, ctx.n))
    return sorted(out)


# ---------------------------------------------------------------------------
# Span-defined sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpanLinearSet:
    """F_q-span of vectors (u, v) in F_{q^n}^2, as a projective point set."""

    ctx: FieldCtx
    generators: tuple[tuple[int, int], ...]

    @classmethod
    def from_elements(cls, ctx: FieldCtx, pairs: Sequence[tuple]) -> "SpanLinearSet":
        gens = tuple(
            (ctx.element(u).code, ctx.element(v).code) for u, v in pairs
        )
        return cls(ctx, gens)

    @property
    def rank(self) -> int:
        return self.ctx.fq_rank([list(g) for g in self.generators])

    def basis(self) -> list[tuple[int, int]]:
        """Subset of the generators forming an F_q-basis of the span."""
        out: list[tuple[int, int]] = []
        for g in self.generators:
            if self.ctx.fq_rank([list(h) for h in out + [g]]) == len(out) + 1:
                out.append(g)
        return out

    def vectors(self) -> list[tuple[int, int]]:
        """All q^rank vectors of the span (including zero)."""
        ctx = self.ctx
        basis = self.basis()
        scalars = ctx.subfield_codes(1)
        vecs = [(0, 0)]
        for bu, bv in basis:
            vecs = [
                (ctx.add(x, ctx.mul(c, bu)), ctx.add(y, ctx.mul(c, bv)))
                for (x, y) in vecs
                for c in scalars
            ]
        if len(set(vecs)) != len(vecs):
            raise RuntimeError("span enumeration produced duplicates")  # pragma: no cover
        return vecs


def span_weights(S: SpanLinearSet) -> WeightSpectrum:
    """Weight distribution of a span-defined set, by direct enumeration.

    Vectors are grouped by the projective point (1 : v/u), or (0 : 1) when
    u = 0; each group plus zero is a subspace of size q^w.
    """
    ctx = S.ctx
    q = ctx.q
    groups: dict[int, int] = {}
    inf_count = 0
    for (u, v) in S.vectors():
        if u == 0 and v == 0:
            continue
        if u == 0:
            inf_count += 1
        else:
            m = ctx.div(v, u)
            groups[m] = groups.get(m, 0) + 1
    counts: dict[int, int] = {}
    for m, c in groups.items():
        w = _weight_of_fiber(q, c + 1)
        counts[w] = counts.get(w, 0) + 1
    infinity_weight = _weight_of_fiber(q, inf_count + 1) if inf_count else 0
    rank = S.rank
    return WeightSpectrum(
        q=q, n=ctx.n, rank=rank, counts=counts, infinity_weight=infinity_weight
    )


def span_point_set(S: SpanLinearSet) -> tuple[frozenset[int], bool]:
    """(affine point codes, whether (0 : 1) belongs to the set)."""
    ctx = S.ctx
    pts = set()
    has_inf = False
    for (u, v) in S.vectors():
        if u == 0 and v == 0:
            continue
        if u == 0:
            has_inf = True
        else:
            pts.add(ctx.div(v, u))
    return frozenset(pts), has_inf


def graph_span(f: LinearizedPoly, t: int) -> SpanLinearSet:
    """Span of (b^(q^t), f(b)) over an F_q-basis b: the subspace behind (f, t)."""
    ctx = f.ctx
    gens = []
    for b in ctx.basis_over_q():
        gens.append((ctx.frob(b, t), f.eval(FFElement(ctx, b)).code))
    return SpanLinearSet(ctx, tuple(gens))


# ---------------------------------------------------------------------------
# Pair-counting identity
# ---------------------------------------------------------------------------


def pair_count_identity(
    f: LinearizedPoly, t: int, cap: int = 1 << 12
) -> tuple[int, int]:
    """Both sides of the pair-counting identity behind the curve bound.

    lhs counts pairs (x, y) of nonzero elements with
    f(x) y^(q^t) = f(y) x^(q^t), grouped by the quotient map without any
    subspace assumption; rhs is sum of N_i (q^i - 1)^2 with the N_i taken
    from per-point kernel dimensions of the Dickson route.  The two paths
    share no code beyond field arithmetic.
    """
    ctx = f.ctx
    if ctx.order > cap:
        raise CapExceededError(
            f"pair counting needs q^n <= {cap}, got {ctx.order}"
        )
    counts, kernel_nonzero = _fiber_counts(f, t)
    lhs = int((counts.astype(object) ** 2).sum()) + kernel_nonzero**2
    rhs = 0
    for mlog in np.nonzero(counts > 0)[0].tolist():
        m = FFElement(ctx, int(ctx._exp[mlog]))
        w = weight_at(f, t, m)
        rhs += (ctx.q**w - 1) ** 2
    if kernel_nonzero or f.is_zero():
        w0 = weight_at(f, t, 0)
        rhs += (ctx.q**w0 - 1) ** 2
    return lhs, rhs
