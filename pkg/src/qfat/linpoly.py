"""F_q-linearized polynomials over F_{q^n}.

A polynomial sum(a_i x^(q^i), i < n) is stored as its coefficient codes.
Kernel dimensions come from the rank of the associated Dickson matrix over
F_{q^n} (full Gaussian elimination); the north-east minor cascade is exposed
separately as a diagnostic.  Whole-field evaluation is vectorized through
the context's Zech tables, which is what the exhaustive weight scans use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import FFElement, FieldCtx


class LinearizedPoly:
    """sum of a_i x^(q^i) with coefficients in F_{q^n} and q-degree < n."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: FieldCtx, coeffs: Sequence):
        if len(coeffs) > ctx.n:
            raise ValueError("q-degree must be smaller than n")
        codes = []
        for c in coeffs:
            codes.append(ctx.element(c).code)
        codes.extend([0] * (ctx.n - len(codes)))
        self.ctx = ctx
        self.codes = tuple(codes)

    @classmethod
    def from_codes(cls, ctx: FieldCtx, codes: Sequence[int]) -> "LinearizedPoly":
        poly = cls.__new__(cls)
        codes = list(codes)
        if len(codes) > ctx.n:
            raise ValueError("q-degree must be smaller than n")
        codes.extend([0] * (ctx.n - len(codes)))
        poly.ctx = ctx
        poly.codes = tuple(int(c) for c in codes)
        return poly

    # -- structure -------------------------------------------------------------

    @property
    def q_degree(self):
        """Largest i with a_i != 0, or None for the zero polynomial."""
        for i in range(self.ctx.n - 1, -1, -1):
            if self.codes[i]:
                return i
        return None

    @property
    def min_support(self):
        """Smallest i with a_i != 0, or None for the zero polynomial."""
        for i in range(self.ctx.n):
            if self.codes[i]:
                return i
        return None

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.codes) if c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.codes)

    def is_monomial(self) -> bool:
        return len(self.support) == 1

    def coeff(self, i: int) -> FFElement:
        return FFElement(self.ctx, self.codes[i])

    def coeffs(self) -> tuple[FFElement, ...]:
        return tuple(FFElement(self.ctx, c) for c in self.codes)

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.ctx == other.ctx
            and self.codes == other.codes
        )

    def __hash__(self):
        return hash((id(self.ctx), self.codes))

    def __repr__(self):
        terms = [f"{self.codes[i]}*x^q{i}" for i in self.support] or ["0"]
        return "LinPoly(" + " + ".join(terms) + ")"

    # -- algebra -----------------------------------------------------------------

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._check(other)
        ctx = self.ctx
        return LinearizedPoly.from_codes(
            ctx, [ctx.add(a, b) for a, b in zip(self.codes, other.codes)]
        )

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._check(other)
        ctx = self.ctx
        return LinearizedPoly.from_codes(
            ctx, [ctx.sub(a, b) for a, b in zip(self.codes, other.codes)]
        )

    def _check(self, other):
        if not isinstance(other, LinearizedPoly) or other.ctx != self.ctx:
            raise ValueError("context mismatch")

    def scale(self, c) -> "LinearizedPoly":
        ctx = self.ctx
        cc = ctx.element(c).code
        return LinearizedPoly.from_codes(ctx, [ctx.mul(cc, a) for a in self.codes])

    def shift_down(self, u: int) -> "LinearizedPoly":
        """Replace x by x^(q^(n-u)), i.e. shift every exponent down by u.

        Requires every supported exponent to be >= u, so no wraparound occurs.
        """
        if u == 0:
            return self
        if any(self.codes[i] for i in range(u)):
            raise ValueError("cannot shift below exponent 0")
        return LinearizedPoly.from_codes(self.ctx, list(self.codes[u:]) + [0] * u)

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """Composition f(g(x)) reduced mod x^(q^n) - x."""
        self._check(other)
        ctx = self.ctx
        n = ctx.n
        out = [0] * n
        for i, ai in enumerate(self.codes):
            if not ai:
                continue
            for j, bj in enumerate(other.codes):
                if not bj:
                    continue
                k = (i + j) % n
                out[k] = ctx.add(out[k], ctx.mul(ai, ctx.frob(bj, i)))
        return LinearizedPoly.from_codes(ctx, out)

    # -- evaluation ----------------------------------------------------------------

    def __call__(self, x: FFElement) -> FFElement:
        return self.eval(x)

    def eval(self, x: FFElement) -> FFElement:
        if not isinstance(x, FFElement) or x.ctx != self.ctx:
            raise ValueError("context mismatch")
        ctx = self.ctx
        acc = 0
        for i, ai in enumerate(self.codes):
            if ai:
                acc = ctx.add(acc, ctx.mul(ai, ctx.frob(x.code, i)))
        return FFElement(ctx, acc)

    def eval_logs(self) -> np.ndarray:
        """Log of f(x) for every nonzero x, ordered by log(x) = 0..q^n-2.

        Returns an int64 array with -1 marking f(x) = 0.  This is the
        vectorized workhorse behind spectra and root counts.
        """
        ctx = self.ctx
        M = ctx.mult_order
        lx = ctx.v_logs_of_nonzero()
        acc = None
        for i, ai in enumerate(self.codes):
            if not ai:
                continue
            la = int(ctx._log[ai])
            term = (la + lx * ctx._q_pow_mod[i % ctx.n]) % M if M else lx * 0
            acc = term if acc is None else ctx.v_add_logs(acc, term)
        if acc is None:
            return np.full(max(M, 0), -1, dtype=np.int64)
        return acc

    def eval_on_logs(self, lu: np.ndarray) -> np.ndarray:
        """Vectorized evaluation at arbitrary points given by their logs.

        Input and output use the log representation with -1 for zero.
        """
        ctx = self.ctx
        M = ctx.mult_order
        acc = None
        for i, ai in enumerate(self.codes):
            if not ai:
                continue
            la = int(ctx._log[ai])
            term = np.where(lu >= 0, (la + lu * ctx._q_pow_mod[i % ctx.n]) % max(M, 1), -1)
            acc = term if acc is None else ctx.v_add_logs(acc, term)
        if acc is None:
            return np.full(lu.shape, -1, dtype=np.int64)
        return acc

    def root_count(self) -> int:
        """Number of roots in F_{q^n}, by exhaustive evaluation."""
        if self.is_zero():
            return self.ctx.order
        return int((self.eval_logs() == -1).sum()) + 1

    # -- derived polynomials ---------------------------------------------------------

    def adjoint(self) -> "LinearizedPoly":
        """Dual polynomial with respect to the trace bilinear form.

        Coefficient i moves to slot (n - i) mod n and gets raised to q^(n-i);
        the linear sets of a polynomial and its adjoint coincide.
        """
        ctx = self.ctx
        n = ctx.n
        out = [0] * n
        for i, ai in enumerate(self.codes):
            if ai:
                j = (n - i) % n
                out[j] = ctx.frob(ai, j)
        return LinearizedPoly.from_codes(ctx, out)


def identity_poly(ctx: FieldCtx) -> LinearizedPoly:
    return LinearizedPoly.from_codes(ctx, [1])


def monomial(ctx: FieldCtx, coeff, k: int) -> LinearizedPoly:
    codes = [0] * ctx.n
    codes[k % ctx.n] = ctx.element(coeff).code
    return LinearizedPoly.from_codes(ctx, codes)


# ---------------------------------------------------------------------------
# Dickson matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DicksonMatrix:
    """n x n matrix of Frobenius-twisted cyclic shifts of the coefficients.

    Row i is row i-1 shifted right by one slot with every entry raised to
    q^s.  Its rank over F_{q^n} equals the rank of the polynomial as an
    F_q-linear map.
    """

    ctx: FieldCtx
    s: int
    rows: tuple[tuple[int, ...], ...]

    def rank(self) -> int:
        return matrix_rank(self.ctx, [list(r) for r in self.rows])

    def northeast_minors(self) -> list[FFElement]:
        """Determinants of the top-right j x j corners, j = 1..n."""
        ctx = self.ctx
        n = len(self.rows)
        out = []
        for j in range(1, n + 1):
            sub = [list(self.rows[i][n - j :]) for i in range(j)]
            out.append(FFElement(ctx, matrix_det(ctx, sub)))
        return out

    def entries(self) -> list[list[FFElement]]:
        return [[FFElement(self.ctx, c) for c in row] for row in self.rows]


def dickson(f: LinearizedPoly, s: int = 1) -> DicksonMatrix:
    """Dickson matrix of f for the twist x -> x^(q^s), gcd(s, n) = 1.

    The coefficient vector is first re-indexed so that slot i holds the
    coefficient of x^(q^(s*i)); entry (i, j) is then that vector at
    position (j - i) mod n raised to q^(s*i).
    """
    ctx = f.ctx
    n = ctx.n
    if math.gcd(s, n) != 1:
        raise ValueError(f"gcd(s={s}, n={n}) must be 1")
    a = [f.codes[(s * i) % n] for i in range(n)]
    rows = []
    for i in range(n):
        twist = (s * i) % n
        rows.append(tuple(ctx.frob(a[(j - i) % n], twist) for j in range(n)))
    return DicksonMatrix(ctx, s, tuple(rows))


def matrix_rank(ctx: FieldCtx, rows: list[list[int]]) -> int:
    """Rank over F_{q^n} of a small matrix of codes, by Gaussian elimination."""
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, m):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pinv = ctx.inv(prow[col])
        for i in range(rank + 1, m):
            if rows[i][col]:
                factor = ctx.mul(rows[i][col], pinv)
                rows[i] = [
                    ctx.sub(rows[i][j], ctx.mul(factor, prow[j])) for j in range(ncols)
                ]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_det(ctx: FieldCtx, rows: list[list[int]]) -> int:
    """Determinant over F_{q^n} of a small square matrix of codes."""
    m = len(rows)
    det = 1
    sign_flip = False
    for col in range(m):
        pivot = None
        for i in range(col, m):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign_flip = not sign_flip
        prow = rows[col]
        det = ctx.mul(det, prow[col])
        pinv = ctx.inv(prow[col])
        for i in range(col + 1, m):
            if rows[i][col]:
                factor = ctx.mul(rows[i][col], pinv)
                rows[i] = [
                    ctx.sub(rows[i][j], ctx.mul(factor, prow[j])) for j in range(m)
                ]
    if sign_flip:
        det = ctx.neg(det)
    return det


# ---------------------------------------------------------------------------
# Kernel dimension and point weights
# ---------------------------------------------------------------------------


def kernel_dim(f: LinearizedPoly) -> int:
    """dim over F_q of the kernel of f, via n - rank of the Dickson matrix."""
    if f.is_zero():
        return f.ctx.n
    return f.ctx.n - dickson(f, 1).rank()


def weight_at(f: LinearizedPoly, t: int, m) -> int:
    """Weight of the point (1 : m): dim of ker(f(x) - m x^(q^t))."""
    ctx = f.ctx
    if not 0 <= t < ctx.n:
        raise ValueError("index t out of range")
    mc = ctx.element(m).code
    codes = list(f.codes)
    codes[t] = ctx.sub(codes[t], mc)
    return kernel_dim(LinearizedPoly.from_codes(ctx, codes))


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MRelabel:
    """Affine relabeling of the m-line induced by normalization.

    The weight of (1 : m) for the original pair equals the weight of
    (1 : apply(m)) for the normalized pair.
    """

    ctx: FieldCtx
    offset_code: int  # subtract this (the removed index-slot coefficient)
    scale_code: int  # then divide by this (the leading coefficient)
    down_shift: int  # exponent shift applied first; does not move m

    def apply(self, m: FFElement) -> FFElement:
        ctx = self.ctx
        c = ctx.sub(m.code, self.offset_code)
        return FFElement(ctx, ctx.div(c, self.scale_code))


@dataclass(frozen=True)
class NormalizedPoly:
    poly: LinearizedPoly
    index: int
    relabel: MRelabel


def normalize(f: LinearizedPoly, t: int) -> NormalizedPoly:
    """Monic form with zero coefficient at the index slot, separable if index > 0.

    The exponent shift, leading-coefficient scaling and index-slot removal
    preserve the weight multiset of the associated point set; the returned
    relabel maps old m-values to new ones pointwise.  Monomials (including
    c x^(q^t) itself) are rejected: their point sets obey the constant
    weight law and need no normalization.
    """
    ctx = f.ctx
    if not 0 <= t < ctx.n:
        raise ValueError("index t out of range")
    if f.is_zero() or f.is_monomial():
        raise ValueError("normalize requires a non-monomial polynomial")
    v = f.min_support
    u = min(t, v)
    g = f.shift_down(u)
    t2 = t - u
    offset = g.codes[t2]
    if offset:
        codes = list(g.codes)
        codes[t2] = 0
        g = LinearizedPoly.from_codes(ctx, codes)
    lead = g.codes[g.q_degree]
    g = g.scale(FFElement(ctx, ctx.inv(lead)))
    if t2 > 0 and g.codes[0] == 0:
        raise RuntimeError("normalization failed to produce a separable polynomial")
    return NormalizedPoly(g, t2, MRelabel(ctx, offset, lead, u))
