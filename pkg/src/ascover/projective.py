"""
Ternary forms over GF(2^n) and dense scans of the projective plane.

A form is a dict mapping exponent triples ``(i, j, l)`` to nonzero field
elements, standing for ``sum c * x^i y^j z^l``.  Scans walk the standard
charts ``z = 1``, then ``(x, 1, 0)``, then ``(1, 0, 0)``, so every point of
P^2(k) is visited exactly once.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .gf2 import GF2n

ROW_BLOCK = 1 << 20  # target entries per vectorized block


def form_add(*forms: dict) -> dict:
    out: dict = {}
    for f in forms:
        for mono, c in f.items():
            v = out.get(mono, 0) ^ c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def form_mul(k: GF2n, f: dict, g: dict) -> dict:
    out: dict = {}
    for (i1, j1, l1), c1 in f.items():
        for (i2, j2, l2), c2 in g.items():
            mono = (i1 + i2, j1 + j2, l1 + l2)
            v = out.get(mono, 0) ^ k.mul(c1, c2)
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def linear(k: GF2n, cx: int = 0, cy: int = 0, cz: int = 0) -> dict:
    return {m: c for m, c in (((1, 0, 0), cx), ((0, 1, 0), cy), ((0, 0, 1), cz)) if c}


def monomial(c: int, i: int, j: int, l: int) -> dict:
    return {(i, j, l): c} if c else {}


def partial(f: dict, var: int) -> dict:
    """Formal partial derivative (characteristic 2: odd exponents survive)."""
    out = {}
    for mono, c in f.items():
        if mono[var] % 2:
            m = list(mono)
            m[var] -= 1
            out[tuple(m)] = c
    return out


def evaluate(k: GF2n, f: dict, P) -> int:
    x, y, z = P
    acc = 0
    for (i, j, l), c in f.items():
        acc ^= k.mul(c, k.mul(k.pow(x, i), k.mul(k.pow(y, j), k.pow(z, l))))
    return acc


def normalize(k: GF2n, P) -> tuple:
    """Scale a projective point so its last nonzero coordinate is 1."""
    x, y, z = P
    if z:
        iz = k.inv(z)
        return (k.mul(x, iz), k.mul(y, iz), 1)
    if y:
        return (k.mul(x, k.inv(y)), 1, 0)
    if x:
        return (1, 0, 0)
    raise ValueError("(0, 0, 0) is not a projective point")


def map_form(f: dict, phi) -> dict:
    """Apply a coefficient map (e.g. a field embedding) to a form."""
    return {m: phi(c) for m, c in f.items() if c}


# ---------- vectorized scan


def _coeffs_in_y(k: GF2n, f: dict, xs: np.ndarray, zval: int) -> dict:
    """Coefficients C_j(x) of f(x, y, zval) as a polynomial in y."""
    out: dict = {}
    for (i, j, l), c in f.items():
        if l and zval == 0:
            continue
        term = k.vmul(c, _vpow(k, xs, i))
        out[j] = out.get(j, 0) ^ term
    return out


def _vpow(k: GF2n, xs: np.ndarray, e: int) -> np.ndarray:
    r = np.ones_like(xs)
    for _ in range(e):
        r = k.vmul(r, xs)
    return r


def _horner(k: GF2n, coeffs: dict, ys: np.ndarray, rows: int) -> np.ndarray:
    top = max(coeffs) if coeffs else 0
    val = np.zeros((rows, ys.shape[0]), dtype=np.int64)
    for j in range(top, -1, -1):
        val = k.vmul(val, ys[None, :])
        c = coeffs.get(j)
        if c is not None:
            val ^= np.asarray(c)[:, None]
    return val


def common_zeros(k: GF2n, forms: list, first_only: bool = False,
                 row_block: Optional[int] = None):
    """Projective points of P^2(k) where every form in ``forms`` vanishes.

    Returns ``(count, first_point)``; with ``first_only`` the scan stops at
    the first hit.  ``row_block`` (number of x-values per block) only affects
    memory use, never the result.
    """
    q = k.q
    ys = k.vec_elements()
    if row_block is None:
        row_block = max(1, ROW_BLOCK // q)
    count = 0
    first = None
    # chart z = 1
    for lo in range(0, q, row_block):
        xs = np.arange(lo, min(q, lo + row_block), dtype=np.int64)
        mask = np.ones((xs.shape[0], q), dtype=bool)
        for f in forms:
            mask &= _horner(k, _coeffs_in_y(k, f, xs, 1), ys, xs.shape[0]) == 0
        hits = int(np.count_nonzero(mask))
        if hits and first is None:
            r, c = np.argwhere(mask)[0]
            first = (int(xs[r]), int(c), 1)
        count += hits
        if first_only and first is not None:
            return count, first
    # line z = 0: points (x, 1, 0), then (1, 0, 0)
    xs = k.vec_elements()
    mask = np.ones(q, dtype=bool)
    for f in forms:
        vals = np.zeros(q, dtype=np.int64)
        for (i, j, l), c in f.items():
            if l == 0:
                vals ^= k.vmul(c, _vpow(k, xs, i))
        mask &= vals == 0
    hits = int(np.count_nonzero(mask))
    if hits and first is None:
        first = (int(np.nonzero(mask)[0][0]), 1, 0)
    count += hits
    if all(evaluate(k, f, (1, 0, 0)) == 0 for f in forms):
        count += 1
        if first is None:
            first = (1, 0, 0)
    return count, first


def projective_points(k: GF2n):
    """Iterate over P^2(k) in scan order (pure Python; small fields only)."""
    for x in k.elements():
        for y in k.elements():
            yield (x, y, 1)
    for x in k.elements():
        yield (x, 1, 0)
    yield (1, 0, 0)
