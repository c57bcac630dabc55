"""Single-character-edit sensitivity of the MUS set."""

import csv
from dataclasses import dataclass

from .errors import PositionOutOfRange, ResultEmpty
from .index import build_index
from .mus import MusSet, compute_mus, mus_stab
from .text import Text

KINDS = ("substitute", "insert", "delete")


@dataclass(frozen=True)
class EditOp:
    """One edit: substitute/delete at pos (1..n), or insert before pos (1..n+1)."""

    kind: str
    pos: int
    symbol: int | None = None


@dataclass(frozen=True)
class SensitivityRecord:
    """MUS-count change for one edit.

    MUSs are matched across the two texts by string content; new_at_edit
    counts post-edit MUSs absent from the pre-edit set that contain the
    edit position, new_elsewhere those that do not.  pre_stab and
    post_stab are the stabbing counts at the edit position in each text
    (the two readings of "MUSs containing the edit"), reported side by
    side rather than asserted equal.
    """

    edit: EditOp
    pre_count: int
    post_count: int
    additive: int
    multiplicative: float
    new_at_edit: int
    new_elsewhere: int
    surviving: int
    pre_stab: int
    post_stab: int
    error: str | None = None


def apply_edit(t: Text, op: EditOp) -> Text:
    """Apply one edit; rejects bad positions and the delete-to-empty case."""
    n = t.n
    data = t.data
    if op.kind == "substitute":
        if not 1 <= op.pos <= n:
            raise PositionOutOfRange(f"substitute position {op.pos} not in 1..{n}")
        return Text(data[: op.pos - 1] + bytes([op.symbol]) + data[op.pos :])
    if op.kind == "insert":
        if not 1 <= op.pos <= n + 1:
            raise PositionOutOfRange(f"insert position {op.pos} not in 1..{n + 1}")
        return Text(data[: op.pos - 1] + bytes([op.symbol]) + data[op.pos - 1 :])
    if op.kind == "delete":
        if not 1 <= op.pos <= n:
            raise PositionOutOfRange(f"delete position {op.pos} not in 1..{n}")
        if n == 1:
            raise ResultEmpty("deleting the last remaining symbol")
        return Text(data[: op.pos - 1] + data[op.pos :])
    raise ValueError(f"unknown edit kind {op.kind!r}")


def _mus_strings(t: Text, ms: MusSet) -> set[bytes]:
    return {t.sub(iv.start, iv.end) for iv in ms}


def sensitivity(t: Text, op: EditOp) -> SensitivityRecord:
    """Full before/after comparison of the MUS sets around one edit."""
    post_text = apply_edit(t, op)
    pre_ms = compute_mus(build_index(t))
    post_ms = compute_mus(build_index(post_text))
    pre_strings = _mus_strings(t, pre_ms)
    pre_count, post_count = len(pre_ms), len(post_ms)

    # Edit position in the post-edit text; a delete of the final symbol
    # lands on the new last position.
    edit_pos_post = min(op.pos, post_text.n)
    edit_pos_pre = min(op.pos, t.n)

    post_stab_set = set(mus_stab(post_ms, edit_pos_post))
    new_at_edit = 0
    new_elsewhere = 0
    surviving = 0
    for iv in post_ms:
        if post_text.sub(iv.start, iv.end) in pre_strings:
            surviving += 1
        elif iv in post_stab_set:
            new_at_edit += 1
        else:
            new_elsewhere += 1
    return SensitivityRecord(
        edit=op,
        pre_count=pre_count,
        post_count=post_count,
        additive=post_count - pre_count,
        multiplicative=post_count / pre_count,
        new_at_edit=new_at_edit,
        new_elsewhere=new_elsewhere,
        surviving=surviving,
        pre_stab=len(mus_stab(pre_ms, edit_pos_pre)),
        post_stab=len(post_stab_set),
    )


def sensitivity_scan(
    t: Text, kinds=KINDS, alphabet: bytes | None = None
) -> tuple[list[SensitivityRecord], SensitivityRecord, SensitivityRecord]:
    """Records for every (position, kind, symbol) edit, plus argmax rows.

    The default alphabet is the symbols present in the text plus one
    fresh symbol.  Returns (records, max_additive, max_multiplicative);
    edits rejected downstream (delete to empty) appear as error records.
    """
    if alphabet is None:
        present = sorted(set(t.data))
        # prefer a printable fresh symbol, starting at 'a'
        candidates = list(range(ord("a"), 256)) + list(range(ord("a")))
        fresh = next(c for c in candidates if c not in set(present))
        alphabet = bytes(present + [fresh])
    records = []
    for pos in range(1, t.n + 2):
        for kind in KINDS:
            if kind not in kinds:
                continue
            if kind == "insert":
                symbols = list(alphabet)
            elif pos > t.n:
                continue
            elif kind == "substitute":
                symbols = list(alphabet)
            else:
                symbols = [None]
            for sym in symbols:
                op = EditOp(kind, pos, sym)
                try:
                    records.append(sensitivity(t, op))
                except ResultEmpty as exc:
                    records.append(
                        SensitivityRecord(
                            edit=op,
                            pre_count=0,
                            post_count=0,
                            additive=0,
                            multiplicative=0.0,
                            new_at_edit=0,
                            new_elsewhere=0,
                            surviving=0,
                            pre_stab=0,
                            post_stab=0,
                            error=f"ResultEmpty: {exc}",
                        )
                    )
    valid = [r for r in records if r.error is None]
    best_add = max(valid, key=lambda r: r.additive) if valid else None
    best_mul = max(valid, key=lambda r: r.multiplicative) if valid else None
    return records, best_add, best_mul


def write_sensitivity_csv(records, out) -> None:
    """Emit sensitivity records as CSV."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(
        [
            "kind",
            "pos",
            "symbol",
            "pre_count",
            "post_count",
            "additive",
            "multiplicative",
            "new_at_edit",
            "new_elsewhere",
        ]
    )
    for r in records:
        sym = "" if r.edit.symbol is None else chr(r.edit.symbol)
        if r.error is not None:
            w.writerow([r.edit.kind, r.edit.pos, sym, "", "", "", "", "", ""])
            continue
        w.writerow(
            [
                r.edit.kind,
                r.edit.pos,
                sym,
                r.pre_count,
                r.post_count,
                r.additive,
                f"{r.multiplicative:.6f}",
                r.new_at_edit,
                r.new_elsewhere,
            ]
        )
