"""Measure how one character edit changes the MUS set.

For each edit the harness matches MUSs across the two texts by string
content and splits the post-edit set into survivors, new MUSs through
the edit position, and new MUSs elsewhere.
"""

from muskit import EditOp, Text, gen_lower, sensitivity, sensitivity_scan

t = Text(b"aaaa")
r = sensitivity(t, EditOp("substitute", 1, ord("b")))
print(f"'aaaa' -> 'baaa': |MUS| {r.pre_count} -> {r.post_count} "
      f"(additive {r.additive:+d}, x{r.multiplicative:.2f})")

records, best_add, best_mul = sensitivity_scan(Text(b"mississippi"))
print(f"\nscan of 'mississippi': {len(records)} edits")
e = best_add.edit
sym = "" if e.symbol is None else f" {chr(e.symbol)!r}"
print(f"  worst additive: {e.kind}{sym} at {e.pos} -> {best_add.additive:+d} "
      f"({best_add.new_at_edit} new at edit, {best_add.new_elsewhere} elsewhere)")
e = best_mul.edit
sym = "" if e.symbol is None else f" {chr(e.symbol)!r}"
print(f"  worst ratio:    {e.kind}{sym} at {e.pos} -> x{best_mul.multiplicative:.2f}")

# the lower-bound family makes single edits expensive: deleting the 'a'
# at the hot position kills the whole stabbing bundle at once
inst = gen_lower(8)
records, best_add, _ = sensitivity_scan(inst.text, kinds=("substitute",), alphabet=b"ab")
print(f"\nscan of T_8 (n={inst.text.n}): worst additive {best_add.additive:+d} "
      f"at position {best_add.edit.pos}")
