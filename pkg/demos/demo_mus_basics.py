"""Walk through MUS enumeration and stabbing queries on small texts.

A minimal unique substring (MUS) occurs exactly once while both of its
one-shorter substrings occur at least twice.  This script shows the
index arrays, the enumerated MUS intervals, and positional queries.
"""

from muskit import Text, build_index, check_bounds, compute_mus, max_stab, mus_stab

for data in (b"banana", b"abaab", b"mississippi", b"aaaa"):
    t = Text(data)
    idx = build_index(t)
    ms = compute_mus(idx)
    print(f"text = {data.decode()!r} (n={t.n})")
    print(f"  suffix array (1-based): {(idx.sa + 1).tolist()}")
    print(f"  lcp array:              {idx.lcp.tolist()}")
    print(f"  shortest-unique len:    {idx.unique_len.tolist()}  (-1 = none)")
    print("  MUSs:")
    for iv in ms:
        print(f"    [{iv.start},{iv.end}] = {t.sub(iv.start, iv.end).decode()!r}")
    pos, count = max_stab(ms)
    print(f"  busiest position: {pos} with {count} MUS(s) through it")
    for q in (1, t.n // 2 + 1):
        hits = [t.sub(iv.start, iv.end).decode() for iv in mus_stab(ms, q)]
        print(f"  MUSs through position {q}: {hits or 'none'}")
    rep = check_bounds(t, ms)
    print(
        f"  bounds: |MUS|={rep.mus_count} <= n={rep.n}, "
        f"<= 2*rle-1={2 * rep.rle_size - 1}, "
        f"max stab {rep.max_stab_count} <= {rep.sqrt_bound:.3f} -> "
        f"{'all hold' if rep.all_ok else 'VIOLATED'}"
    )
    print()
