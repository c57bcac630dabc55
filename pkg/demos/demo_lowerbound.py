"""Generate the sqrt-growth family and watch the stabbing count grow.

The text a b^{2m} a b^{2m+2} (a b^k a b^{2m-k})_{k=1..m-1} of length
2m^2+4m+2 forces at least m-2 MUSs through position 2m+4, so the maximum
stabbing count grows like the square root of the text length.
"""

import math

from muskit import build_index, compute_mus, gen_lower, max_stab, mus_stab, verify_lower

inst = gen_lower(5)
print(f"T_5 = {inst.text.data.decode()}")
print(f"n = {inst.text.n}, hot position p = {inst.p}")
ms = compute_mus(build_index(inst.text))
print("expected MUSs through p:")
for iv, s in inst.family:
    print(f"  [{iv.start},{iv.end}] = {s.decode()}")
stab = mus_stab(ms, inst.p)
print(f"actually {len(stab)} MUSs contain p (the family is a lower bound, not all of them)")
print()

print(" m     n   m-2   stab(p)   max stab   sqrt bound")
for m in range(3, 26, 2):
    inst = gen_lower(m)
    ms = compute_mus(build_index(inst.text))
    assert verify_lower(inst, ms).ok
    n = inst.text.n
    _, count = max_stab(ms)
    bound = math.sqrt(12 * n + 18) - 2
    print(
        f"{m:2d}  {n:5d}   {m - 2:3d}   {len(mus_stab(ms, inst.p)):5d}   "
        f"{count:6d}   {bound:8.2f}"
    )
