"""Brute-force oracle and executable checkers for the combinatorial lemmas."""

import itertools
import math
import random
import string
from collections import Counter
from dataclasses import dataclass, field

from .errors import BudgetExceeded, TextTooLargeForOracle
from .index import build_index
from .mus import MusInterval, MusSet, check_bounds, compute_mus, mus_stab
from .text import Text

ORACLE_CAP = 2000
FACT_CAP = 100
DEFAULT_OCC_CAP = 8

SUITES = ("oracle", "bounds", "fact", "key-lemma", "marker-gap")


@dataclass
class VerificationReport:
    """Outcome of a checker sweep: pass iff no violations."""

    suite: str
    texts: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)
    flagged: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> None:
        self.texts += other.texts
        self.checks += other.checks
        self.violations.extend(other.violations)
        self.flagged.extend(other.flagged)


def brute_mus(t: Text, cap: int = ORACLE_CAP) -> MusSet:
    """MUSs by direct occurrence counting, independent of the index.

    Counts all substrings length by length; a start that just became
    unique at length L yields a MUS iff its length-(L-1) suffix still
    repeats (the length-(L-1) prefix repeats by construction).
    """
    n = t.n
    if n == 0 or n > cap:
        raise TextTooLargeForOracle(f"oracle accepts 1 <= n <= {cap}, got {n}")
    data = t.data
    found = []
    resolved = [False] * n  # 0-based starts with a known shortest unique length
    prev_counts: Counter = Counter()
    for length in range(1, n + 1):
        counts = Counter(data[i : i + length] for i in range(n - length + 1))
        done = True
        for i in range(n - length + 1):
            if resolved[i]:
                continue
            w = data[i : i + length]
            if counts[w] == 1:
                resolved[i] = True
                # empty string counts as a repeat (n+1 occurrences)
                if length == 1 or prev_counts[data[i + 1 : i + length]] >= 2:
                    found.append(MusInterval(i + 1, i + length))
            else:
                done = False
        if done:
            break
        prev_counts = counts
    found.sort()
    return MusSet(found)


def _occurrences(data: bytes, pattern: bytes) -> list[int]:
    """All 1-based occurrence positions of pattern, overlapping included."""
    out = []
    start = data.find(pattern)
    while start != -1:
        out.append(start + 1)
        start = data.find(pattern, start + 1)
    return out


def _has_period(s: bytes, p: int) -> bool:
    return s[p:] == s[: len(s) - p]


def check_three_overlap_fact(t: Text, cap: int = FACT_CAP) -> VerificationReport:
    """Check the gcd-period consequence of triply-overlapping occurrences.

    For every substring S with occurrences i < j < k and k <= i+|S|-1:
    gcd(j-i, k-j) must be a period of T[i..k+|S|-1], and T[j-1] == T[k-1].
    """
    n = t.n
    if n == 0 or n > cap:
        raise TextTooLargeForOracle(f"fact checker accepts 1 <= n <= {cap}, got {n}")
    data = t.data
    report = VerificationReport(suite="fact", texts=1)
    seen = set()
    for length in range(1, n + 1):
        for start in range(n - length + 1):
            s = data[start : start + length]
            if s in seen:
                continue
            seen.add(s)
            occs = _occurrences(data, s)
            if len(occs) < 3:
                continue
            for a, i in enumerate(occs):
                limit = i + length - 1
                window = [o for o in occs[a + 1 :] if o <= limit]
                for j, k in itertools.combinations(window, 2):
                    report.checks += 1
                    g = math.gcd(j - i, k - j)
                    span = t.sub(i, k + length - 1)
                    if not _has_period(span, g):
                        report.violations.append(
                            (data, f"S={s!r} (i,j,k)=({i},{j},{k}): gcd {g} not a period")
                        )
                    if t.char(j - 1) != t.char(k - 1):
                        report.violations.append(
                            (data, f"S={s!r} (i,j,k)=({i},{j},{k}): T[j-1] != T[k-1]")
                        )
    return report


def _tail_occurrences(data: bytes, tail: bytes, original: int, cap: int) -> list[int]:
    """Leftmost occurrences of a MUS tail other than its in-MUS one."""
    occs = [o for o in _occurrences(data, tail) if o != original]
    return occs[:cap]


def _disjoint(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] > b[1] or b[0] > a[1]


def check_key_lemma(
    t: Text, occurrence_cap: int = DEFAULT_OCC_CAP, cap: int = ORACLE_CAP
) -> VerificationReport:
    """Check that of the three shifted overlap occurrences, two are disjoint.

    For every position stabbed by >= 3 MUSs, every start-ordered triple of
    them with a nonempty common overlap tail u, and every capped choice of
    alternative tail occurrences, at least one pair of the induced
    u-occurrences must not overlap.
    """
    n = t.n
    if n == 0 or n > cap:
        raise TextTooLargeForOracle(f"key-lemma checker accepts 1 <= n <= {cap}, got {n}")
    data = t.data
    report = VerificationReport(suite="key-lemma", texts=1)
    ms = compute_mus(build_index(t))
    for pos in range(1, n + 1):
        stab = mus_stab(ms, pos)
        if len(stab) < 3:
            continue
        for m1, m2, m3 in itertools.combinations(stab, 3):
            i1, i2, i3 = m1.start, m2.start, m3.start
            ulen = m1.end - i3  # overlap is T[i3..end1] = a3 u
            if ulen < 1:
                continue
            qlen = i3 - i1  # prefix of s1 before the u occurrence
            plen = i3 - i2
            tails = [t.sub(m.start + 1, m.end) for m in (m1, m2, m3)]
            choices = [
                _tail_occurrences(data, tails[k], (m1, m2, m3)[k].start + 1, occurrence_cap)
                for k in range(3)
            ]
            for o1, o2, o3 in itertools.product(*choices):
                report.checks += 1
                u1 = (o1 + qlen, o1 + qlen + ulen - 1)
                u2 = (o2 + plen, o2 + plen + ulen - 1)
                u3 = (o3, o3 + ulen - 1)
                if not (
                    _disjoint(u1, u2) or _disjoint(u1, u3) or _disjoint(u2, u3)
                ):
                    report.violations.append(
                        (
                            data,
                            f"pos={pos} triple=({m1},{m2},{m3}) "
                            f"occs=({o1},{o2},{o3}) all u-occurrences overlap",
                        )
                    )
    return report


def check_marker_gap_lemma(
    t: Text, occurrence_cap: int = DEFAULT_OCC_CAP, cap: int = ORACLE_CAP
) -> VerificationReport:
    """Check the marked-position gap inequality at heavily stabbed positions.

    With h+1 >= 4 MUSs through a position, tails of the first h are moved
    to alternative occurrences, the stabbed position's image is marked in
    each, and consecutive-by-rank markers two apart must be more than
    h - omega positions apart, omega being the largest of the three ranks'
    MUS indices.  Configurations with tied marks are flagged, not asserted.
    """
    n = t.n
    if n == 0 or n > cap:
        raise TextTooLargeForOracle(
            f"marker-gap checker accepts 1 <= n <= {cap}, got {n}"
        )
    data = t.data
    report = VerificationReport(suite="marker-gap", texts=1)
    ms = compute_mus(build_index(t))
    for pos in range(1, n + 1):
        stab = mus_stab(ms, pos)
        if len(stab) < 4:
            continue
        h = len(stab) - 1
        first = stab[:h]
        choices = [
            _tail_occurrences(data, t.sub(m.start + 1, m.end), m.start + 1, occurrence_cap)
            for m in first
        ]
        offsets = [pos - m.start - 1 for m in first]  # mark offset inside each tail
        for combo in itertools.product(*choices):
            marks = [combo[k] + offsets[k] for k in range(h)]
            if len(set(marks)) < h:
                report.flagged.append(
                    (data, f"pos={pos} tied marks {marks}; inequality not asserted")
                )
                continue
            order = sorted(range(h), key=lambda k: marks[k])  # order[x-1] = f(x)-1
            for x in range(h - 2):
                report.checks += 1
                k0, k1, k2 = order[x], order[x + 1], order[x + 2]
                omega = max(k0, k1, k2) + 1
                if not marks[k2] - marks[k0] > h - omega:
                    report.violations.append(
                        (
                            data,
                            f"pos={pos} marks={marks} x={x + 1}: "
                            f"{marks[k2]} - {marks[k0]} <= {h} - {omega}",
                        )
                    )
    return report


def _check_oracle(t: Text, report: VerificationReport) -> None:
    report.checks += 1
    fast = compute_mus(build_index(t))
    slow = brute_mus(t)
    if fast != slow:
        report.violations.append(
            (t.data, f"compute_mus {fast.intervals} != brute_mus {slow.intervals}")
        )


def _check_text_bounds(t: Text, report: VerificationReport) -> None:
    report.checks += 1
    br = check_bounds(t, compute_mus(build_index(t)))
    if not br.all_ok:
        report.violations.append((t.data, f"bound violated: {br}"))


def _run_suites(t: Text, suites, occ_cap: int) -> VerificationReport:
    report = VerificationReport(suite="+".join(sorted(suites)), texts=1)
    if "oracle" in suites:
        _check_oracle(t, report)
    if "bounds" in suites:
        _check_text_bounds(t, report)
    if "fact" in suites:
        report.merge(check_three_overlap_fact(t))
        report.texts -= 1
    if "key-lemma" in suites:
        report.merge(check_key_lemma(t, occ_cap))
        report.texts -= 1
    if "marker-gap" in suites:
        report.merge(check_marker_gap_lemma(t, occ_cap))
        report.texts -= 1
    return report


def _alphabet(size: int) -> bytes:
    if size <= 26:
        return string.ascii_lowercase[:size].encode()
    return bytes(range(size))


def exhaustive_verify(
    alphabet_size: int,
    max_len: int,
    suites,
    occ_cap: int = DEFAULT_OCC_CAP,
    canonicalize: bool = False,
    budget: int = 2_000_000,
) -> VerificationReport:
    """Run suites over every nonempty text up to max_len.

    With canonicalize=True the first symbol is fixed to the alphabet's
    first letter, cutting the sweep by a factor of the alphabet size.
    """
    sigma = _alphabet(alphabet_size)
    total = sum(alphabet_size**length for length in range(1, max_len + 1))
    if canonicalize:
        total //= alphabet_size
    if total > budget:
        raise BudgetExceeded(f"{total} texts exceed budget {budget}")
    report = VerificationReport(suite="+".join(sorted(suites)))
    for length in range(1, max_len + 1):
        head = sigma[:1] if canonicalize else sigma
        for lead in head:
            for rest in itertools.product(sigma, repeat=length - 1):
                t = Text(bytes([lead]) + bytes(rest))
                report.merge(_run_suites(t, suites, occ_cap))
    return report


def random_verify(
    alphabet_size: int,
    length: int,
    samples: int,
    seed: int,
    suites,
    occ_cap: int = DEFAULT_OCC_CAP,
) -> VerificationReport:
    """Run suites over seeded random texts of length 1..length (uniform symbols)."""
    sigma = _alphabet(alphabet_size)
    rng = random.Random(seed)
    report = VerificationReport(suite="+".join(sorted(suites)))
    for _ in range(samples):
        n = rng.randint(1, length)
        t = Text(bytes(rng.choice(sigma) for _ in range(n)))
        report.merge(_run_suites(t, suites, occ_cap))
    return report
