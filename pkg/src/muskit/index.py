"""Suffix-array index: SA, LCP, and shortest-unique-length array."""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import EmptyText
from .text import Text

UNDEFINED = -1


@dataclass(frozen=True)
class TextIndex:
    """Suffix array, LCP array and shortest-unique-length array of a text.

    All arrays are 0-based internally.  ``sa[r]`` is the start of the
    rank-r suffix, ``lcp[r]`` the common-prefix length of the suffixes at
    ranks r and r+1 (length n-1), and ``unique_len[i]`` the length of the
    shortest substring starting at i that occurs exactly once, or
    UNDEFINED (-1) when the whole suffix T[i..n] repeats.
    """

    text: Text
    sa: np.ndarray
    lcp: np.ndarray
    rank: np.ndarray
    unique_len: np.ndarray


def _suffix_array(data: bytes) -> np.ndarray:
    """Prefix-doubling suffix sort; O(n log n) vectorized rounds."""
    n = len(data)
    rank = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    ordered = rank[sa]
    newrank = np.zeros(n, dtype=np.int64)
    newrank[1:] = np.cumsum(np.diff(ordered) != 0)
    tmp = np.empty(n, dtype=np.int64)
    tmp[sa] = newrank
    rank = tmp
    k = 1
    while k < n and rank[sa[-1]] != n - 1:
        # pack (rank[i], rank[i+k]) into one sortable int64 key
        key = rank * np.int64(n + 1)
        key[: n - k] += rank[k:] + 1
        sa = np.argsort(key, kind="stable")
        ordered = key[sa]
        diff = np.zeros(n, dtype=np.int64)
        diff[1:] = np.diff(ordered) != 0
        newrank = np.cumsum(diff)
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = newrank
        k *= 2
    return sa


@njit(cache=True)
def _kasai(data: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    n = len(data)
    lcp = np.zeros(n - 1, dtype=np.int64) if n > 1 else np.zeros(0, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r == n - 1:
            h = 0
            continue
        j = sa[r + 1]
        while i + h < n and j + h < n and data[i + h] == data[j + h]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1
    return lcp


def build_index(t: Text) -> TextIndex:
    """Build the full index; rejects the empty text."""
    n = t.n
    if n == 0:
        raise EmptyText("cannot index the empty text")
    data = np.frombuffer(t.data, dtype=np.uint8)
    sa = _suffix_array(t.data)
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.arange(n)
    lcp = _kasai(data, sa, rank)

    # unique_len[i] = max LCP with rank neighbors + 1, demoted to UNDEFINED
    # when the candidate would run past the end of the text.
    neighbor = np.zeros(n, dtype=np.int64)
    if n > 1:
        neighbor = np.maximum(
            np.concatenate((np.zeros(1, dtype=np.int64), lcp)),
            np.concatenate((lcp, np.zeros(1, dtype=np.int64))),
        )
    cand = np.empty(n, dtype=np.int64)
    cand[sa] = neighbor + 1
    pos = np.arange(n)
    unique_len = np.where(pos + cand <= n, cand, UNDEFINED)
    return TextIndex(text=t, sa=sa, lcp=lcp, rank=rank, unique_len=unique_len)


def _compare_suffix(data: bytes, start: int, pattern: bytes) -> int:
    """-1/0/+1 comparison of the suffix at 0-based start against pattern."""
    chunk = data[start : start + len(pattern)]
    if chunk == pattern:
        return 0 if len(chunk) == len(pattern) else -1
    return -1 if chunk < pattern else 1


def occurrence_count(idx: TextIndex, pattern: bytes) -> int:
    """Number of occurrences of pattern in the text; n+1 for the empty one."""
    n = idx.text.n
    if len(pattern) == 0:
        return n + 1
    if len(pattern) > n:
        return 0
    data = idx.text.data
    sa = idx.sa

    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_suffix(data, int(sa[mid]), pattern) < 0:
            lo = mid + 1
        else:
            hi = mid
    first = lo
    lo, hi = first, n
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_suffix(data, int(sa[mid]), pattern) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return lo - first
