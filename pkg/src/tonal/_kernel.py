"""Compiled inner loop of the exhaustive colouring search.

A host colouring of ``K_n`` is an int64 whose bit ``i`` says edge ``i`` is
red.  Each coverage target is a list of placed copies ``(red_mask,
blue_mask)``; a colouring contains a copy iff it has every bit of
``red_mask`` and none of ``blue_mask``.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True, nogil=True)
def popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56 & 0xFF


@njit(cache=True, nogil=True)
def first_missing(col, red, blue, offsets):
    """Index of the first target with no copy in *col*, or -1."""
    for t in range(offsets.shape[0] - 1):
        found = False
        for j in range(offsets[t], offsets[t + 1]):
            if (col & red[j]) == red[j] and (col & blue[j]) == 0:
                found = True
                break
        if not found:
            return t
    return -1


@njit(cache=True, nogil=True)
def scan(lo, hi, fixed, n_edges, red, blue, offsets, best):
    """Largest ``min(|R|, |B|)`` above *best* over bad colourings ``c | fixed``, ``lo <= c < hi``.

    Returns ``(best, witness)``; the witness is the first colouring in counter
    order attaining the returned value, or -1 if nothing beat *best*.
    """
    witness = np.int64(-1)
    cap = n_edges // 2
    for c in range(lo, hi):
        if best >= cap:
            break
        col = c | fixed
        k = popcount(col)
        m = min(k, n_edges - k)
        if m <= best:
            continue
        if first_missing(col, red, blue, offsets) >= 0:
            best = m
            witness = col
    return best, witness
