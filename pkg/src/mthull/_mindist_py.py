"""Exhaustive minimum-weight search, vectorized numpy fallback.

Splits the basis into prefix and suffix halves, materializes all suffix
codewords once, and scans prefix codewords in chunks.  The weight of
prefix + suffix is n minus the number of positions where the suffix equals
the negated prefix, which turns the inner loop into a single equality
reduction.
"""

import numpy as np

BACKEND = "fallback"

_SIDE_CAP = 1 << 16
_CHUNK = 256


def _span(rows, add, mul, q, n, dtype):
    """All linear combinations of the given rows, as a (q^len(rows), n) array."""
    out = np.zeros((1, n), dtype=dtype)
    for row in rows:
        multiples = mul[:, row]  # (q, n): c * row for every scalar c
        out = add[out[:, None, :], multiples[None, :, :]].reshape(-1, n)
    return out


def min_weight(rows, add, neg, mul, q):
    """Minimum Hamming weight over all nonzero combinations of the rows.

    rows: (k, n) array of field-element indices, assumed linearly
    independent; add/mul: (q, q) index tables; neg: (q,) negation table.
    """
    rows = np.ascontiguousarray(rows)
    k, n = rows.shape
    dtype = rows.dtype

    j = k // 2
    while j > 0 and q**j > _SIDE_CAP:
        j -= 1
    suffix = _span(rows[k - j :], add, mul, q, n, dtype)
    prefix = _span(rows[: k - j], add, mul, q, n, dtype)

    best = n + 1
    for start in range(0, len(prefix), _CHUNK):
        chunk = prefix[start : start + _CHUNK]
        counts = (suffix[None, :, :] == neg[chunk][:, None, :]).sum(axis=2)
        if start == 0:
            counts[0, 0] = -1  # the all-zero codeword
        hit = int(counts.max())
        if n - hit < best:
            best = n - hit
            if best <= 1:
                return best
    return best
