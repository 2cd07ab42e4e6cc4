"""Exact arithmetic in the tower F_p <= F_q <= F_{q^n}.

The big field F_{q^n} = F_{p^(e*n)} is realized as F_p[X]/(modulus) for a
deterministic modulus, and elements are identified with integer *codes*:
the base-p encoding of their coefficient vector (low degree digit first).
All scalar arithmetic runs through discrete-log tables (exp/log plus a Zech
logarithm table for addition), so every field operation is a couple of
array lookups and one modular index operation.  This is what makes the
exhaustive scans over whole coefficient spaces feasible.

F_q is the subfield fixed by x -> x^(p^e); it never gets a field object of
its own.  Subfield membership, relative trace/norm and F_q-linear algebra
are provided on top of the tables.

A FieldCtx is immutable after construction and safe to share across
threads; FFElement is a plain value type.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 1 << 26


class CapExceededError(Exception):
    """An enumeration or field size exceeded the configured cap."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, by trial division."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Plain polynomial arithmetic over F_p, used only while bootstrapping a
# context (modulus search, generator search).  Polynomials are tuples of
# digits, low degree first.
# ---------------------------------------------------------------------------


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(n):
                prod[d - n + j] = (prod[d - n + j] - c * modulus[j]) % p
    out = prod[:n]
    while len(out) < n:
        out.append(0)
    return tuple(out)


def _poly_powmod(a: Sequence[int], k: int, modulus: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(modulus) - 1
    result = tuple([1] + [0] * (n - 1))
    base = tuple(a)
    while k:
        if k & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        k >>= 1
    return result


def _poly_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over F_p (Euclid on digit lists, low degree first)."""

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            factor = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[i + shift] = (a[i + shift] - factor * bi) % p
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1 if a else -1


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial (digits, constant first)."""
    n = len(modulus) - 1
    if n == 1:
        return True
    x = tuple([0, 1] + [0] * (n - 2))
    # h_i = X^(p^i) mod modulus, by iterated p-th powers
    h = x
    powers = {}
    for i in range(1, n + 1):
        h = _poly_powmod(h, p, modulus, p)
        powers[i] = h
    if powers[n] != x:
        return False
    for ell in prime_factors(n):
        diff = [(hi - xi) % p for hi, xi in zip(powers[n // ell], x)]
        if _poly_gcd_degree(diff, list(modulus), p) != 0:
            return False
    return True


def _find_modulus(p: int, degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree over F_p.

    Candidates are ordered by the integer encoding of the non-leading
    digits (sum c_i * p^i), which matches the classical tables: for
    example degree 3 over F_2 yields x^3 + x + 1.
    """
    for code in range(p**degree):
        digits = []
        c = code
        for _ in range(degree):
            digits.append(c % p)
            c //= p
        candidate = tuple(digits) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable description of F_{q^n} = F_{p^(e*n)} with arithmetic tables.

    p, e, n:   prime, q = p^e, extension degree over F_q
    degree:    e*n, the degree over F_p
    modulus:   digits of the defining monic irreducible, constant term first
    order:     q^n
    """

    def __init__(self, p: int, e: int, n: int, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1 or n < 1:
            raise ValueError("e and n must be positive")
        order = p ** (e * n)
        if order > max_order:
            raise CapExceededError(
                f"field order {p}^{e * n} exceeds the configured cap {max_order}"
            )
        self.p = p
        self.e = e
        self.n = n
        self.q = p**e
        self.degree = e * n
        self.order = order
        self.mult_order = order - 1
        self.max_order = max_order
        self.modulus = _find_modulus(p, self.degree)
        self._p_pows = np.array([p**j for j in range(self.degree)], dtype=np.int64)
        self._build_tables()
        # q^i mod (order-1) for Frobenius exponents, index i mod n
        M = max(self.mult_order, 1)
        self._q_pow_mod = [pow(self.q, i, M) for i in range(n)]
        self._subfield_cache: dict[int, tuple[int, ...]] = {}

    # -- construction helpers ------------------------------------------------

    def _decode(self, codes: np.ndarray) -> np.ndarray:
        out = np.empty((len(codes), self.degree), dtype=np.int64)
        c = codes.astype(np.int64, copy=True)
        for j in range(self.degree):
            out[:, j] = c % self.p
            c //= self.p
        return out

    def _encode(self, digits: np.ndarray) -> np.ndarray:
        return digits @ self._p_pows

    def _mul_matrix(self, code: int) -> np.ndarray:
        """Matrix over F_p of multiplication by the element with this code."""
        N, p = self.degree, self.p
        col = list(self.coeffs_of(code))
        cols = []
        for _ in range(N):
            cols.append(list(col))
            top = col[-1]
            col = [0] + col[:-1]
            if top:
                for j in range(N):
                    col[j] = (col[j] - top * self.modulus[j]) % p
        return np.array(cols, dtype=np.int64).T

    def _scalar_powmod(self, code: int, k: int) -> int:
        digits = list(self.coeffs_of(code))
        res = _poly_powmod(digits, k, self.modulus, self.p)
        return int(sum(d * self.p**j for j, d in enumerate(res)))

    def _find_generator(self) -> int:
        M = self.mult_order
        if M <= 1:
            return 1
        factors = prime_factors(M)
        for cand in range(2, self.order):
            if all(self._scalar_powmod(cand, M // ell) != 1 for ell in factors):
                return cand
        raise RuntimeError("no multiplicative generator found")  # pragma: no cover

    def _build_tables(self):
        M = self.mult_order
        p = self.p
        exp = np.empty(max(M, 1), dtype=np.int64)
        exp[0] = 1
        if M > 1:
            g = self._find_generator()
            A = self._mul_matrix(g)
            t = 1
            while t < M:
                step = min(t, M - t)
                block = self._decode(exp[:step])
                exp[t : t + step] = self._encode(block @ A.T % p)
                t += step
                if t < M:
                    A = A @ A % p
        log = np.full(self.order, -1, dtype=np.int64)
        if M:
            log[exp] = np.arange(M, dtype=np.int64)
            if int((log >= 0).sum()) != M:
                raise RuntimeError("generator order check failed")  # pragma: no cover
        else:
            log[1] = 0
        # Zech table: zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
        low = exp % p
        plus_one = exp - low + (low + 1) % p
        zech = log[plus_one]
        self._exp = exp
        self._log = log
        self._zech = zech
        # log of -1 (p odd: g^(M/2); p = 2: -1 = 1, log 0)
        self._log_m1 = (M // 2) if (p != 2 and M > 1) else 0

    # -- identity / equality --------------------------------------------------

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, n={self.n})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.e, self.n, self.modulus) == (other.p, other.e, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.n, self.modulus))

    # -- scalar arithmetic on codes -------------------------------------------

    def coeffs_of(self, code: int) -> tuple[int, ...]:
        digits = []
        c = code
        for _ in range(self.degree):
            digits.append(c % self.p)
            c //= self.p
        return tuple(digits)

    def code_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector too long")
        return int(sum((c % self.p) * self.p**j for j, c in enumerate(coeffs)))

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        lb = self._log[b]
        z = self._zech[(lb - la) % self.mult_order]
        if z < 0:
            return 0
        return int(self._exp[(la + z) % self.mult_order])

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return int(self._exp[(self._log[a] + self._log_m1) % self.mult_order])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % self.mult_order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in finite field")
        return int(self._exp[(-self._log[a]) % self.mult_order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_int(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        M = self.mult_order
        if M == 0:
            return 1
        return int(self._exp[(self._log[a] * (k % M)) % M])

    def frob(self, a: int, i: int = 1) -> int:
        """a ** (q^i); i is taken mod n."""
        if a == 0:
            return 0
        M = self.mult_order
        if M <= 1:
            return a
        return int(self._exp[(self._log[a] * self._q_pow_mod[i % self.n]) % M])

    def rel_trace_code(self, a: int) -> int:
        acc = 0
        for i in range(self.n):
            acc = self.add(acc, self.frob(a, i))
        return acc

    def rel_norm_code(self, a: int) -> int:
        if a == 0:
            return 0
        M = self.mult_order
        if M == 0:
            return 1
        k = M // (self.q - 1)
        return int(self._exp[(self._log[a] * k) % M])

    def norm_to(self, a: int, m: int) -> int:
        """Relative norm from F_{q^n} down to F_{q^m}, for m dividing n."""
        if self.n % m:
            raise ValueError(f"{m} does not divide n={self.n}")
        if a == 0:
            return 0
        M = self.mult_order
        if M == 0:
            return 1
        k = M // (self.q**m - 1)
        return int(self._exp[(self._log[a] * k) % M])

    def in_subfield(self, a: int, m: int) -> bool:
        """Membership in F_{q^m}: a^(q^m) == a."""
        if a == 0:
            return True
        M = self.mult_order
        if M <= 1:
            return True
        return (self._log[a] * (pow(self.q, m, M) - 1)) % M == 0

    # -- element constructors --------------------------------------------------

    def from_code(self, code: int) -> "FFElement":
        if not 0 <= code < self.order:
            raise ValueError("code out of range")
        return FFElement(self, code)

    def element(self, value) -> "FFElement":
        """Build an element from an integer (prime-field constant) or digit vector."""
        if isinstance(value, FFElement):
            if value.ctx is not self:
                raise ValueError("context mismatch")
            return value
        if isinstance(value, int):
            return FFElement(self, value % self.p)
        return FFElement(self, self.code_of(list(value)))

    def zero(self) -> "FFElement":
        return FFElement(self, 0)

    def one(self) -> "FFElement":
        return FFElement(self, 1)

    def generator(self) -> "FFElement":
        """A fixed multiplicative generator of F_{q^n}*."""
        return FFElement(self, int(self._exp[1]) if self.mult_order > 1 else 1)

    def elements(self) -> Iterable["FFElement"]:
        return (FFElement(self, c) for c in range(self.order))

    def nonzero_elements(self) -> Iterable["FFElement"]:
        return (FFElement(self, c) for c in range(1, self.order))

    # -- subfield machinery ------------------------------------------------------

    def subfield_codes_abs(self, degree: int) -> tuple[int, ...]:
        """All codes of the subfield F_{p^degree} (degree | e*n), smallest first."""
        if self.degree % degree:
            raise ValueError(f"{degree} does not divide the extension degree {self.degree}")
        M = self.mult_order
        size = self.p**degree
        if M == 0:
            return tuple(range(min(size, self.order)))
        step = M // (size - 1)
        return tuple(sorted({0} | {int(self._exp[(step * j) % M]) for j in range(size - 1)}))

    def subfield_codes(self, m: int = 1) -> tuple[int, ...]:
        """All codes of F_{q^m} (m | n), in increasing code order."""
        if self.n % m:
            raise ValueError(f"{m} does not divide n={self.n}")
        if m not in self._subfield_cache:
            M = self.mult_order
            size = self.q**m
            if M == 0:
                codes = (0, 1) if size > 1 else (0,)
            else:
                step = M // (size - 1)
                codes = tuple(sorted({0} | {int(self._exp[(step * j) % M]) for j in range(size - 1)}))
            if len(codes) != size:
                raise RuntimeError("subfield enumeration failed")  # pragma: no cover
            self._subfield_cache[m] = codes
        return self._subfield_cache[m]

    def base_subfield_basis(self) -> tuple[int, ...]:
        """F_p-basis of F_q, as codes (powers of a generator of F_q*)."""
        M = self.mult_order
        if self.e == 1 or M == 0:
            return (1,)
        h_log = M // (self.q - 1)
        return tuple(int(self._exp[(h_log * j) % M]) for j in range(self.e))

    def basis_over_q(self) -> tuple[int, ...]:
        """An F_q-basis of F_{q^n}: powers of the multiplicative generator."""
        if self.mult_order <= 1:
            return (1,)
        return tuple(int(self._exp[j]) for j in range(self.n))

    def fq_rank(self, vectors: Sequence[Sequence[int]]) -> int:
        """Rank over F_q of vectors with entries in F_{q^n} (given as codes)."""
        if not vectors:
            return 0
        basis = self.base_subfield_basis()
        rows = []
        for vec in vectors:
            for b in basis:
                row = []
                for comp in vec:
                    row.extend(self.coeffs_of(self.mul(comp, b)))
                rows.append(row)
        r = fp_rank(np.array(rows, dtype=np.int64), self.p)
        if r % self.e:
            raise RuntimeError("F_q-rank computation inconsistent")  # pragma: no cover
        return r // self.e

    def fq_independent(self, vectors: Sequence[Sequence[int]]) -> bool:
        return self.fq_rank(vectors) == len(vectors)

    # -- vectorized helpers (log domain, sentinel -1 for zero) -------------------

    def v_logs_of_nonzero(self) -> np.ndarray:
        """Logs of every nonzero element, i.e. arange(q^n - 1)."""
        return np.arange(max(self.mult_order, 1), dtype=np.int64)[: self.mult_order]

    def v_add_logs(self, la: np.ndarray, lb: np.ndarray) -> np.ndarray:
        """Log of the sum of two log-represented arrays (-1 encodes zero)."""
        M = self.mult_order
        out = np.where(lb == -1, la, -1)
        out = np.where(la == -1, lb, out)
        both = (la != -1) & (lb != -1)
        if both.any():
            laa = la[both]
            z = self._zech[(lb[both] - laa) % M]
            out[both] = np.where(z < 0, -1, (laa + z) % M)
        return out

    def v_exp(self, logs: np.ndarray) -> np.ndarray:
        codes = np.where(logs >= 0, self._exp[np.clip(logs, 0, None)], 0)
        return codes.astype(np.int64)

    def v_log(self, codes: np.ndarray) -> np.ndarray:
        return self._log[codes]


def fp_rank(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    A = matrix % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if A[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        for i in range(r + 1, rows):
            if A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


class FFElement:
    """Element of F_{q^n}, identified by its coefficient vector over F_p."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = int(code)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs_of(self.code)

    def _coerce(self, other) -> "FFElement":
        if isinstance(other, FFElement):
            if other.ctx != self.ctx:
                raise ValueError("context mismatch")
            return other
        if isinstance(other, int):
            return FFElement(self.ctx, other % self.ctx.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.add(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.sub(self.code, o.code))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.sub(o.code, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.mul(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.div(self.code, o.code))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.ctx, self.ctx.div(o.code, self.code))

    def __neg__(self):
        return FFElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, k: int):
        return FFElement(self.ctx, self.ctx.pow_int(self.code, k))

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FF({self.code})@GF({self.ctx.p}^{self.ctx.degree})"

    def frobenius(self, i: int = 1) -> "FFElement":
        return FFElement(self.ctx, self.ctx.frob(self.code, i))

    def rel_trace(self) -> "FFElement":
        return FFElement(self.ctx, self.ctx.rel_trace_code(self.code))

    def rel_norm(self) -> "FFElement":
        return FFElement(self.ctx, self.ctx.rel_norm_code(self.code))

    def norm_to(self, m: int) -> "FFElement":
        return FFElement(self.ctx, self.ctx.norm_to(self.code, m))

    def is_in_subfield(self, m: int) -> bool:
        return self.ctx.in_subfield(self.code, m)


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

_CTX_CACHE: dict[tuple, FieldCtx] = {}


def ctx_create(p: int, e: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """Deterministic context for F_{q^n}, q = p^e.  Same inputs, same context."""
    key = (p, e, n, max_order)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = FieldCtx(p, e, n, max_order)
    return _CTX_CACHE[key]


def arith(a: FFElement, b: FFElement, op: str) -> FFElement:
    """Named dispatch over the four field operations (mostly for the CLI)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def frobenius_q(a: FFElement, i: int) -> FFElement:
    """a ** (q^i), the i-th power of the relative Frobenius."""
    return a.frobenius(i)


def rel_trace(a: FFElement) -> FFElement:
    """Trace of F_{q^n} over F_q: sum of a^(q^i) for i = 0..n-1."""
    return a.rel_trace()


def rel_norm(a: FFElement) -> FFElement:
    """Norm of F_{q^n} over F_q: a^((q^n-1)/(q-1))."""
    return a.rel_norm()


def solve_power_eq(target: FFElement, k: int) -> list[FFElement]:
    """All y in F_{q^n}* with y^k = target, via discrete logs.

    Rejects target = 0; returns [] when the equation has no solution.
    """
    if target.code == 0:
        raise ValueError("target must be nonzero")
    ctx = target.ctx
    M = ctx.mult_order
    if M == 0:
        return [ctx.one()] if target.code == 1 else []
    kk = k % M
    lt = int(ctx._log[target.code])
    if kk == 0:
        if lt == 0:
            return [FFElement(ctx, int(c)) for c in sorted(ctx._exp.tolist())]
        return []
    d = math.gcd(kk, M)
    if lt % d:
        return []
    Md = M // d
    base = (lt // d) * pow(kk // d, -1, Md) % Md
    codes = sorted(int(ctx._exp[(base + j * Md) % M]) for j in range(d))
    return [FFElement(ctx, c) for c in codes]


def subfield_embedding(small: FieldCtx, big: FieldCtx):
    """Ring embedding F_{p^N} -> F_{p^(N*m)} as a code-to-code callable.

    Deterministic: the image of the small field's defining root is the
    smallest-code root of the small modulus inside the big field.
    """
    if small.p != big.p or big.degree % small.degree:
        raise ValueError("no subfield embedding between these contexts")
    if small.degree == big.degree and small.modulus == big.modulus:
        return lambda code: code
    candidates = big.subfield_codes_abs(small.degree)
    root = None
    mod = small.modulus
    for cand in candidates:
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, cand), c % big.p)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise RuntimeError("modulus has no root in the big field")  # pragma: no cover
    pow_cache = [1]
    for _ in range(small.degree - 1):
        pow_cache.append(big.mul(pow_cache[-1], root))

    def embed(code: int) -> int:
        acc = 0
        for digit, rp in zip(small.coeffs_of(code), pow_cache):
            if digit:
                acc = big.add(acc, big.mul(digit % big.p, rp))
        return acc

    return embed
