"""
Arithmetic in the binary field GF(2^n), polynomial basis.

Field elements are plain Python ints used as bit vectors: bit ``i`` is the
coefficient of ``x^i`` in the residue polynomial.  A :class:`GF2n` instance
carries the modulus and every operation; it is immutable once built, so one
context can be shared freely.

Besides the ring operations the context provides the Artin-Schreier
toolkit used everywhere else in the package: absolute trace, membership in
``AS(k) = {x + x^2}``, solving ``x^2 + x = c`` and root extraction.

For ``n <= 20`` multiplication goes through log/antilog tables built on first
use; larger fields use shift-and-add.  The ``v*`` methods are numpy-vectorized
counterparts used by the counting scans.
"""

from __future__ import annotations

import functools
import random
from typing import Optional

import numpy as np

MAX_DEGREE = 30
TABLE_DEGREE = 20


class ReducibleModulusError(ValueError):
    """The requested modulus is not irreducible (or has the wrong degree)."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


# ---------- polynomials over F_2 as bitmasks


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    """Carry-less product of ``a`` and ``b`` reduced modulo ``m``."""
    dm = poly_degree(m)
    top = 1 << dm
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return r


def find_factor(p: int) -> Optional[int]:
    """Smallest nontrivial factor of ``p`` by trial division, or None."""
    d = poly_degree(p)
    for f in range(2, 1 << (d // 2 + 1)):
        if poly_degree(f) > d // 2:
            break
        if poly_mod(p, f) == 0:
            return f
    return None


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(p: int) -> bool:
    """Ben-Or test: no factor of degree i divides p for i <= deg(p)/2."""
    d = poly_degree(p)
    if d < 1:
        return False
    t = 0b10
    for _ in range(d // 2):
        t = poly_mulmod(t, t, p)
        if poly_gcd(p, t ^ 0b10) != 1:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("no irreducible polynomial of degree %d" % n)


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


# ---------- the field


class GF2n:
    """The field k = GF(2^n) = F_2[x]/(modulus).

    Use :func:`make_field` rather than the constructor so that contexts with
    equal parameters are shared.

    Attributes
    ----------
    n : int
        Extension degree.
    modulus : int
        Irreducible polynomial of degree ``n`` as a bitmask.
    q : int
        Field size ``2**n``.
    r0 : int
        Fixed element of trace 1 (``1`` when ``n`` is odd).
    """

    __slots__ = ("n", "modulus", "q", "r0", "_tmask", "_exp", "_log",
                 "_exp_np", "_log_np", "_nonAS")

    def __init__(self, n: int, modulus: Optional[int] = None):
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError("extension degree must satisfy 1 <= n <= %d, got %d"
                             % (MAX_DEGREE, n))
        if modulus is None:
            modulus = smallest_irreducible(n)
        else:
            if poly_degree(modulus) != n:
                raise ReducibleModulusError(
                    "modulus %x has degree %d, expected %d"
                    % (modulus, poly_degree(modulus), n))
            f = None if is_irreducible(modulus) else find_factor(modulus)
            if f is not None:
                raise ReducibleModulusError(
                    "modulus %x is reducible: divisible by %x" % (modulus, f),
                    factor=f)
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self._exp = None
        self._log = None
        self._exp_np = None
        self._log_np = None
        # bit i of the mask is tr(x^i); tr is linear so tr(a) = parity(a & mask)
        mask = 0
        for i in range(n):
            if self._slow_trace(1 << i):
                mask |= 1 << i
        self._tmask = mask
        self._nonAS = next(a for a in range(self.q) if self.trace(a))
        self.r0 = 1 if n % 2 else self._nonAS

    def __repr__(self):
        return "GF2n(n=%d, modulus=0x%x)" % (self.n, self.modulus)

    def __eq__(self, other):
        return (isinstance(other, GF2n) and self.n == other.n
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __reduce__(self):
        return (make_field, (self.n, self.modulus))

    # -- tables

    def _build_tables(self):
        q = self.q
        g = self._primitive_element()
        exp = np.empty(2 * (q - 1), dtype=np.int64)
        exp[0] = 1
        filled = 1
        # doubling: exp[k:2k] = exp[0:k] * g^k
        while filled < q - 1:
            take = min(filled, q - 1 - filled)
            step = self._slow_pow(g, filled)
            exp[filled:filled + take] = self._vmul_shift(exp[:take], step)
            filled += take
        exp[q - 1:] = exp[:q - 1]
        log = np.zeros(q, dtype=np.int64)
        log[exp[:q - 1]] = np.arange(q - 1)
        self._exp_np = exp
        self._log_np = log
        self._exp = exp.tolist()
        self._log = log.tolist()

    def _tables(self):
        if self._exp is None and self.n <= TABLE_DEGREE:
            self._build_tables()
        return self._exp is not None

    def _primitive_element(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        ps = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._slow_pow(g, order // p) != 1 for p in ps):
                return g
        raise AssertionError("no primitive element found")

    # -- slow reference paths (no tables)

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = poly_mulmod(r, a, self.modulus)
            a = poly_mulmod(a, a, self.modulus)
            e >>= 1
        return r

    def _slow_trace(self, a: int) -> int:
        s, t = 0, a
        for _ in range(self.n):
            s ^= t
            t = poly_mulmod(t, t, self.modulus)
        assert s in (0, 1)
        return s

    # -- scalar arithmetic

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._tables():
            return self._exp[self._log[a] + self._log[b]]
        return poly_mulmod(a, b, self.modulus)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^%d)" % self.n)
        if self._tables():
            return self._exp[self.q - 1 - self._log[a]]
        return self._slow_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self._tables():
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._slow_pow(a, e)

    def frobenius(self, a: int) -> int:
        """Absolute Frobenius ``a -> a^2``."""
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        """Unique square root, ``a^(2^(n-1))``."""
        return self.pow(a, 1 << (self.n - 1))

    def root4(self, a: int) -> int:
        return self.sqrt(self.sqrt(a))

    def root8(self, a: int) -> int:
        return self.sqrt(self.root4(a))

    def trace(self, a: int) -> int:
        """Absolute trace to F_2, returned as 0 or 1."""
        return (a & self._tmask).bit_count() & 1

    def in_AS(self, a: int) -> bool:
        return self.trace(a) == 0

    def as_class(self, a: int) -> int:
        """Representative of ``a + AS(k)`` in ``{0, r0}``."""
        return self.r0 if self.trace(a) else 0

    def smallest_non_AS(self) -> int:
        return self._nonAS

    def solve_AS(self, c: int) -> Optional[int]:
        """A root of ``x^2 + x = c``; the other root is ``x ^ 1``.

        Returns None when ``tr(c) = 1``.
        """
        if self.trace(c):
            return None
        if self.n % 2:
            # half-trace
            x, t = 0, c
            for _ in range((self.n + 1) // 2):
                x ^= t
                t = self.sqr(self.sqr(t))
            return x
        return self._solve_AS_linear(c)

    def _solve_AS_linear(self, c: int) -> int:
        # columns L(x^i) = x^{2i} + x^i of the F_2-linear map x -> x^2 + x
        rows = []
        for i in range(self.n):
            b = 1 << i
            rows.append((self.sqr(b) ^ b, b))
        # Gaussian elimination on (image, preimage) pairs
        basis = {}
        for img, pre in rows:
            while img:
                top = img.bit_length() - 1
                if top not in basis:
                    basis[top] = (img, pre)
                    break
                bi, bp = basis[top]
                img ^= bi
                pre ^= bp
        x = 0
        while c:
            top = c.bit_length() - 1
            if top not in basis:
                raise AssertionError("trace-0 element outside the image of x^2+x")
            bi, bp = basis[top]
            c ^= bi
            x ^= bp
        return x

    def cubic_roots(self, f: int, g: int) -> list[int]:
        """Roots in k of ``y^3 + f*y + g``, with multiplicity, sorted."""
        ys = self.vec_elements()
        vals = self.vmul(self.vmul(ys, ys) ^ f, ys) ^ g
        roots = []
        for v in np.nonzero(vals == 0)[0].tolist():
            # multiplicity from Hasse derivatives: D1 = y^2 + f, D2 = y
            mult = 1
            if self.sqr(v) ^ f == 0:
                mult += 1 + (v == 0)
            roots.extend([v] * mult)
        return sorted(roots)

    # -- encoding

    def hex(self, a: int) -> str:
        return format(a, "x")

    def parse(self, s: str) -> int:
        a = int(s, 16)
        if not 0 <= a < self.q:
            raise ValueError("element %s out of range for GF(2^%d)" % (s, self.n))
        return a

    def describe(self) -> dict:
        return {"n": self.n, "modulus": self.hex(self.modulus), "q": self.q,
                "r0": self.hex(self.r0)}

    # -- vectorized arithmetic

    def vec_elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def _vmul_shift(self, A, B):
        A = np.asarray(A, dtype=np.int64).copy()
        B = np.broadcast_to(np.asarray(B, dtype=np.int64), A.shape)
        R = np.zeros(np.broadcast_shapes(A.shape, B.shape), dtype=np.int64)
        A = np.broadcast_to(A, R.shape).copy()
        top = 1 << self.n
        for i in range(self.n):
            R ^= np.where((B >> i) & 1, A, 0)
            A <<= 1
            A ^= np.where(A & top, self.modulus, 0)
        return R

    def vmul(self, A, B):
        """Elementwise product; either argument may be a scalar."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if not self._tables():
            return self._vmul_shift(A, B)
        out = self._exp_np[self._log_np[A] + self._log_np[B]]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A):
        """Elementwise inverse with the convention ``0 -> 0``."""
        A = np.asarray(A, dtype=np.int64)
        if not self._tables():
            R = np.ones_like(A)
            base = A.copy()
            e = self.q - 2
            while e:
                if e & 1:
                    R = self._vmul_shift(R, base)
                base = self._vmul_shift(base, base)
                e >>= 1
            return np.where(A == 0, 0, R)
        out = self._exp_np[(self.q - 1) - self._log_np[A]]
        return np.where(A == 0, 0, out)

    def vtrace(self, A):
        return np.bitwise_count(np.asarray(A, dtype=np.int64) & self._tmask) & 1

    def vlog(self, A):
        """Discrete logs (zero entries map to 0; mask them yourself)."""
        self._tables()
        return self._log_np[np.asarray(A, dtype=np.int64)]

    def vexp(self, L):
        self._tables()
        return self._exp_np[np.asarray(L, dtype=np.int64) % (self.q - 1)]

    @property
    def has_tables(self) -> bool:
        return self._tables()


def make_field(n: int, modulus: Optional[int] = None) -> GF2n:
    """Shared field context for GF(2^n).

    The default modulus is the irreducible polynomial of degree ``n`` with the
    numerically smallest bitmask.  A reducible modulus raises
    :class:`ReducibleModulusError` carrying a witness factor.
    """
    if modulus is None:
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError("extension degree must satisfy 1 <= n <= %d, got %d"
                             % (MAX_DEGREE, n))
        modulus = _default_modulus(n)
    return _shared_field(n, modulus)


@functools.lru_cache(maxsize=None)
def _default_modulus(n: int) -> int:
    return smallest_irreducible(n)


@functools.lru_cache(maxsize=None)
def _shared_field(n: int, modulus: int) -> GF2n:
    return GF2n(n, modulus)
