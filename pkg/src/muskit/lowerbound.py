"""The sqrt-growth lower-bound family of texts over {a, b}."""

import csv
import warnings
from dataclasses import dataclass

from .errors import ParameterTooSmall
from .index import build_index, occurrence_count
from .mus import MusInterval, MusSet, mus_stab
from .text import Text
from .verify import VerificationReport


@dataclass(frozen=True)
class LowerBoundInstance:
    """Family member for parameter m: text, hot position p, expected MUSs.

    The text is a b^{2m} a b^{2m+2} followed by the blocks a b^k a b^{2m-k}
    for k = 1..m-1; its length is 2m^2 + 4m + 2.  The family lists, for
    i = 2..m-1, the interval of b^i a b^{2m-i+1}, each of which is a MUS
    through position p = 2m+4.
    """

    m: int
    text: Text
    p: int
    family: list[tuple[MusInterval, bytes]]


def gen_lower(m: int) -> LowerBoundInstance:
    """Build the family member for parameter m >= 2 (empty family at m = 2)."""
    if m < 2:
        raise ParameterTooSmall(f"family parameter must be >= 2, got {m}")
    if m == 2:
        warnings.warn("m = 2 yields an empty expected-MUS family", stacklevel=2)
    parts = [b"a" + b"b" * (2 * m), b"a" + b"b" * (2 * m + 2)]
    for k in range(1, m):
        parts.append(b"a" + b"b" * k + b"a" + b"b" * (2 * m - k))
    text = Text(b"".join(parts))
    assert text.n == 2 * m * m + 4 * m + 2
    p = 2 * m + 4
    family = []
    for i in range(2, m):
        iv = MusInterval(p - (2 + i), p + (2 * m - 1 - i))
        s = b"b" * i + b"a" + b"b" * (2 * m - i + 1)
        assert text.sub(iv.start, iv.end) == s
        family.append((iv, s))
    return LowerBoundInstance(m=m, text=text, p=p, family=family)


def verify_lower(inst: LowerBoundInstance, ms: MusSet) -> VerificationReport:
    """Check the claimed MUS structure of a family member against its MusSet.

    Passes iff every family interval is a computed MUS containing p, each
    re-verifies the unique/repeat-parent occurrence conditions, and the
    stabbing count at p is at least m-2.
    """
    report = VerificationReport(suite="lowerbound", texts=1)
    computed = set(ms.intervals)
    idx = build_index(inst.text)
    for iv, s in inst.family:
        report.checks += 1
        if iv not in computed:
            report.violations.append((inst.text.data, f"{iv} ({s!r}) not a computed MUS"))
        if not iv.contains(inst.p):
            report.violations.append((inst.text.data, f"{iv} misses position {inst.p}"))
        if occurrence_count(idx, s) != 1:
            report.violations.append((inst.text.data, f"{s!r} not unique"))
        if occurrence_count(idx, s[:-1]) < 2:
            report.violations.append((inst.text.data, f"{s[:-1]!r} not a repeat"))
        if occurrence_count(idx, s[1:]) < 2:
            report.violations.append((inst.text.data, f"{s[1:]!r} not a repeat"))
    report.checks += 1
    stab = mus_stab(ms, inst.p)
    if len(stab) < inst.m - 2:
        report.violations.append(
            (inst.text.data, f"stab count {len(stab)} at p={inst.p} below m-2={inst.m - 2}")
        )
    return report


def write_family_csv(inst: LowerBoundInstance, out) -> None:
    """Emit the expected-MUS family as CSV: i,start,end,string."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["i", "start", "end", "string"])
    for offset, (iv, s) in enumerate(inst.family):
        w.writerow([offset + 2, iv.start, iv.end, s.decode("ascii")])
