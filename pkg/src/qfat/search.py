"""Deterministic exhaustive enumeration of coefficient spaces.

Search spaces are supports (which q-degree slots may be nonzero) plus
optional per-slot code ranges, so the size is computable up front and
capped before anything runs.  Enumeration order is fixed: slot codes count
up numerically, the highest listed slot varying fastest, which makes every
run (and every worker split) reproducible.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .field import CapExceededError, FieldCtx, ctx_create
from .linpoly import LinearizedPoly
from .linset import WeightSpectrum, weight_spectrum

DEFAULT_SEARCH_CAP = 1 << 20


def space_size(ctx: FieldCtx, support: Sequence[int], ranges: Optional[dict] = None) -> int:
    size = 1
    for slot in support:
        lo, hi = (ranges or {}).get(slot, (0, ctx.order))
        size *= max(hi - lo, 0)
    return size


def enumerate_polys(
    ctx: FieldCtx,
    support: Sequence[int],
    ranges: Optional[dict] = None,
    cap: int = DEFAULT_SEARCH_CAP,
) -> Iterator[LinearizedPoly]:
    """All polynomials with the given support, in the documented fixed order."""
    support = tuple(support)
    if not support:
        raise ValueError("empty support")
    if any(not 0 <= s < ctx.n for s in support) or len(set(support)) != len(support):
        raise ValueError("support slots must be distinct q-degrees below n")
    total = space_size(ctx, support, ranges)
    if total > cap:
        raise CapExceededError(f"search space size {total} exceeds cap {cap}")
    slot_ranges = []
    for slot in support:
        lo, hi = (ranges or {}).get(slot, (0, ctx.order))
        slot_ranges.append(range(lo, hi))
    for combo in itertools.product(*slot_ranges):
        codes = [0] * ctx.n
        for slot, code in zip(support, combo):
            codes[slot] = code
        yield LinearizedPoly.from_codes(ctx, codes)


def linearity_degree(f: LinearizedPoly, t: int) -> int:
    """Largest d (dividing n) with the defining subspace F_{q^d}-linear.

    The graph of (f, t) is an F_{q^d}-subspace exactly when every supported
    exponent is congruent to t mod d; the zero polynomial gives d = n.
    """
    n = f.ctx.n
    if f.is_zero():
        return n
    g = math.gcd(n, math.gcd(*[(i - t) % n for i in f.support]))
    return g if g else n


@dataclass(frozen=True)
class SearchRecord:
    codes: tuple[int, ...]
    t: int
    counts: dict[int, int]
    r: int
    max_weight: int
    size: int
    linearity: int


def _spectrum_record(f: LinearizedPoly, t: int) -> SearchRecord:
    spec = weight_spectrum(f, t)
    return SearchRecord(
        codes=f.codes,
        t=t,
        counts=spec.counts,
        r=spec.r,
        max_weight=spec.max_weight,
        size=spec.size,
        linearity=linearity_degree(f, t),
    )


def _worker_chunk(args) -> list[SearchRecord]:
    (p, e, n, max_order), t, codes_chunk = args
    ctx = ctx_create(p, e, n, max_order)
    return [_spectrum_record(LinearizedPoly.from_codes(ctx, codes), t) for codes in codes_chunk]


def run_search(
    ctx: FieldCtx,
    support: Sequence[int],
    t: int,
    ranges: Optional[dict] = None,
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int = 1,
    chunk: int = 4096,
) -> Iterator[SearchRecord]:
    """Spectrum records for the whole space, in enumeration order.

    With several workers the space is split into contiguous chunks handled
    by a process pool; results are merged back in input order, so output
    does not depend on the worker count.
    """
    polys = enumerate_polys(ctx, support, ranges, cap)
    if workers <= 1:
        for f in polys:
            yield _spectrum_record(f, t)
        return
    key = (ctx.p, ctx.e, ctx.n, ctx.max_order)

    def chunks() -> Iterable[tuple]:
        batch = []
        for f in polys:
            batch.append(f.codes)
            if len(batch) >= chunk:
                yield (key, t, batch)
                batch = []
        if batch:
            yield (key, t, batch)

    with ProcessPoolExecutor(max_workers=workers) as pool:
        for recs in pool.map(_worker_chunk, chunks()):
            yield from recs


def search_summary(
    ctx: FieldCtx,
    support: Sequence[int],
    t: int,
    ranges: Optional[dict] = None,
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int = 1,
) -> dict:
    """Aggregate of a full search: realized r values and their counts.

    "proper" restricts to polynomials whose defining subspace is genuinely
    F_q-linear (linearity degree one); the rest belong to linear sets over
    a larger field of linearity and are tallied separately.
    """
    hist_all: dict[int, int] = {}
    hist_proper: dict[int, int] = {}
    by_linearity: dict[int, int] = {}
    total = 0
    for rec in run_search(ctx, support, t, ranges, cap, workers):
        total += 1
        hist_all[rec.r] = hist_all.get(rec.r, 0) + 1
        by_linearity[rec.linearity] = by_linearity.get(rec.linearity, 0) + 1
        if rec.linearity == 1:
            hist_proper[rec.r] = hist_proper.get(rec.r, 0) + 1
    return {
        "enumerated": total,
        "r_histogram_all": dict(sorted(hist_all.items())),
        "r_histogram_proper": dict(sorted(hist_proper.items())),
        "realized_r_all": sorted(hist_all),
        "realized_r_proper": sorted(hist_proper),
        "by_linearity_degree": dict(sorted(by_linearity.items())),
    }
