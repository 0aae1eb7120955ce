"""Exact cyclic convolution of integer sequences (NTT + CRT).

Used by the Kreck-Stolz defect sums, which need single coefficients of a
fourfold cyclic convolution of integer polynomials whose coefficients
can exceed 64 bits.  Each convolution is done modulo several NTT-friendly
primes < 2^31 with vectorized butterflies (all products fit in uint64),
and the requested coefficients are reconstructed by the CRT.
"""

from __future__ import annotations

import numpy as np

# NTT primes p = c * 2^e + 1 with their primitive roots, all below 2^31.
_PRIMES = (998244353, 754974721, 167772161, 469762049, 1004535809)
_ROOTS = {998244353: 3, 754974721: 11, 167772161: 3, 469762049: 3, 1004535809: 3}


def _bit_reverse_permutation(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.uint64)
    rev = np.zeros(n, dtype=np.uint64)
    for _ in range(bits):
        rev = (rev << np.uint64(1)) | (idx & np.uint64(1))
        idx >>= np.uint64(1)
    return rev.astype(np.int64)


def _ntt(a: np.ndarray, p: int, invert: bool) -> np.ndarray:
    """In-place iterative NTT over Z_p; length of a must be a power of 2."""
    n = len(a)
    a = a[_bit_reverse_permutation(n)].astype(np.uint64)
    pu = np.uint64(p)
    length = 2
    while length <= n:
        w = pow(_ROOTS[p], (p - 1) // length, p)
        if invert:
            w = pow(w, p - 2, p)
        half = length // 2
        ws = np.empty(half, dtype=np.uint64)
        acc = 1
        for i in range(half):
            ws[i] = acc
            acc = (acc * w) % p
        blocks = a.reshape(-1, length)
        u = blocks[:, :half].copy()
        v = (blocks[:, half:] * ws) % pu
        blocks[:, :half] = (u + v) % pu
        blocks[:, half:] = (u + pu - v) % pu
        a = blocks.reshape(-1)
        length *= 2
    if invert:
        n_inv = pow(n, p - 2, p)
        a = (a * np.uint64(n_inv)) % pu
    return a


def _cyclic_conv_mod(arrays: list[np.ndarray], g: int, p: int) -> np.ndarray:
    """Cyclic (mod x^g - 1) convolution of several arrays, coefficients mod p."""
    need = sum(len(a) - 1 for a in arrays) + 1
    size = 1
    while size < need:
        size *= 2
    fts = None
    for arr in arrays:
        buf = np.zeros(size, dtype=np.uint64)
        buf[: len(arr)] = np.asarray(arr, dtype=np.uint64) % np.uint64(p)
        ft = _ntt(buf, p, invert=False)
        fts = ft if fts is None else (fts * ft) % np.uint64(p)
    lin = _ntt(fts, p, invert=True).astype(np.int64)
    out = np.zeros(g, dtype=np.int64)
    for start in range(0, size, g):
        chunk = lin[start : start + g]
        out[: len(chunk)] = (out[: len(chunk)] + chunk) % p
    return out


def cyclic_convolution_coeffs(
    arrays: list[list[int]], g: int, indices: list[int], coeff_bound: int
) -> list[int]:
    """Exact coefficients (at the given indices mod g) of the cyclic
    convolution of the integer arrays, all taken mod x^g - 1.

    coeff_bound must bound the true nonnegative coefficients.
    """
    np_arrays = [np.asarray(a, dtype=np.uint64) for a in arrays]
    primes = []
    mod_product = 1
    for p in _PRIMES:
        primes.append(p)
        mod_product *= p
        if mod_product > 2 * coeff_bound:
            break
    if mod_product <= 2 * coeff_bound:
        raise ValueError("coefficient bound too large for the prime table")
    residues = []
    for p in primes:
        conv = _cyclic_conv_mod(np_arrays, g, p)
        residues.append([int(conv[i % g]) for i in indices])
    out = []
    for pos in range(len(indices)):
        x = 0
        m = 1
        for p, res in zip(primes, residues):
            # incremental CRT
            t = ((res[pos] - x) * pow(m, -1, p)) % p
            x += m * t
            m *= p
        out.append(x)
    return out
