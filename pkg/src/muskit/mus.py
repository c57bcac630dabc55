"""Minimal unique substrings: enumeration, stabbing queries, counting bounds."""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyText, PositionOutOfRange
from .index import UNDEFINED, TextIndex
from .text import Text


@dataclass(frozen=True, order=True)
class MusInterval:
    """A MUS occurrence [start..end], 1-based inclusive."""

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contains(self, pos: int) -> bool:
        return self.start <= pos <= self.end


class MusSet:
    """The set of all MUSs of a text, sorted by start.

    MUSs never nest, so sorting by start also sorts by end; stabbing
    queries therefore hit a contiguous run of intervals.  Backed by
    start/end arrays so multi-million-MUS texts stay cheap; MusInterval
    objects are materialized lazily.
    """

    def __init__(self, intervals):
        ivs = list(intervals)
        self.starts = np.array([iv.start for iv in ivs], dtype=np.int64)
        self.ends = np.array([iv.end for iv in ivs], dtype=np.int64)
        self._intervals = ivs

    @classmethod
    def from_arrays(cls, starts: np.ndarray, ends: np.ndarray) -> "MusSet":
        ms = cls.__new__(cls)
        ms.starts = starts
        ms.ends = ends
        ms._intervals = None
        return ms

    @property
    def intervals(self) -> list[MusInterval]:
        if self._intervals is None:
            self._intervals = [
                MusInterval(int(s), int(e)) for s, e in zip(self.starts, self.ends)
            ]
        return self._intervals

    def __len__(self):
        return len(self.starts)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other):
        return (
            isinstance(other, MusSet)
            and np.array_equal(self.starts, other.starts)
            and np.array_equal(self.ends, other.ends)
        )

    def __repr__(self):
        return f"MusSet({self.intervals!r})"


def compute_mus(idx: TextIndex) -> MusSet:
    """Enumerate all MUSs from the shortest-unique-length array.

    Position i starts a MUS exactly when a unique substring starts there
    and the shortest-unique length does not drop at i+1 (missing entries
    count as infinite); the MUS is then the shortest unique substring at i.
    """
    n = idx.text.n
    if n == 0:
        raise EmptyText("compute_mus requires a nonempty text")
    L = idx.unique_len
    big = n + 2
    eff = np.where(L == UNDEFINED, big, L)
    nxt = np.concatenate((eff[1:], np.array([big], dtype=eff.dtype)))
    starts = np.nonzero((L != UNDEFINED) & (nxt >= eff))[0]
    return MusSet.from_arrays(starts + 1, starts + L[starts])


def mus_stab(ms: MusSet, pos: int, n: int | None = None) -> list[MusInterval]:
    """All MUSs containing pos, via two binary searches.

    Valid because non-nesting makes the stabbing set a contiguous run in
    start order.  If n is given, pos is range-checked against it.
    """
    if pos < 1 or (n is not None and pos > n):
        raise PositionOutOfRange(f"position {pos} out of range")
    hi = int(np.searchsorted(ms.starts, pos, side="right"))
    lo = int(np.searchsorted(ms.ends, pos, side="left"))
    return [
        MusInterval(int(s), int(e))
        for s, e in zip(ms.starts[lo:hi], ms.ends[lo:hi])
    ]


def max_stab(ms: MusSet) -> tuple[int, int]:
    """(position, count) maximizing the stabbing count; smallest pos wins ties."""
    if len(ms) == 0:
        return (1, 0)
    n = int(ms.ends[-1])
    delta = np.bincount(ms.starts, minlength=n + 2) - np.bincount(
        ms.ends + 1, minlength=n + 2
    )
    coverage = np.cumsum(delta)[1 : n + 1]  # coverage[i-1] = stab count at i
    best = int(np.argmax(coverage))
    return (best + 1, int(coverage[best]))


def rle_size(t: Text) -> int:
    """Number of maximal runs of equal symbols."""
    if t.n == 0:
        raise EmptyText("rle_size requires a nonempty text")
    a = np.frombuffer(t.data, dtype=np.uint8)
    return 1 + int(np.count_nonzero(np.diff(a)))


def stab_bound(n: int) -> float:
    """Real-valued upper bound sqrt(12n+18)-2 on the max stabbing count."""
    return math.sqrt(12 * n + 18) - 2


@dataclass(frozen=True)
class BoundReport:
    n: int
    mus_count: int
    rle_size: int
    max_stab_pos: int
    max_stab_count: int
    sqrt_bound: float
    bound_n_ok: bool
    bound_rle_ok: bool
    bound_sqrt_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.bound_n_ok and self.bound_rle_ok and self.bound_sqrt_ok


def check_bounds(t: Text, ms: MusSet) -> BoundReport:
    """Evaluate |MUS| <= n, |MUS| <= 2m-1 (RLE), and the sqrt stabbing bound."""
    n = t.n
    m = rle_size(t)
    pos, cnt = max_stab(ms)
    bound = stab_bound(n)
    return BoundReport(
        n=n,
        mus_count=len(ms),
        rle_size=m,
        max_stab_pos=pos,
        max_stab_count=cnt,
        sqrt_bound=bound,
        bound_n_ok=len(ms) <= n,
        bound_rle_ok=len(ms) <= 2 * m - 1,
        bound_sqrt_ok=cnt <= bound,
    )


def _escape_bytes(b: bytes) -> str:
    out = []
    for c in b:
        if c == 0x5C:
            out.append("\\\\")
        elif 0x20 <= c <= 0x7E:
            out.append(chr(c))
        else:
            out.append(f"\\x{c:02x}")
    return "".join(out)


def write_mus_csv(ms: MusSet, t: Text, out, show_strings: bool = False) -> None:
    """Emit a MusSet as CSV: start,end,length[,substring]."""
    w = csv.writer(out, lineterminator="\n")
    header = ["start", "end", "length"]
    if show_strings:
        header.append("substring")
    w.writerow(header)
    for iv in ms:
        row = [iv.start, iv.end, iv.length]
        if show_strings:
            row.append(_escape_bytes(t.sub(iv.start, iv.end)))
        w.writerow(row)
