"""Homology of the double branched cover via the Smith normal form.

``V + V^T`` presents H1 of the double cover; its Smith normal form gives the
invariant factors.
"""

import math

from cosmetic import double_cover_homology, seifert, smith_normal_form, symmetrize

for name, rows in [("9_46 = P(3,3,-3)", [[3, 2], [1, 0]]),
                   ("11n139 = P(-5,3,-3)", [[-1, 2], [1, 0]]),
                   ("trefoil", [[1, 1], [0, 1]])]:
    V = seifert(rows)
    print(f"{name:<20} V + V^T = {symmetrize(V)}  H1 = {double_cover_homology(V)}")

# Matrices [[2x, 2y+1], [2y+1, 0]] present Z/d + Z/((2y+1)^2/d) with
# d = gcd(2x, 2y+1); the homology is cyclic exactly when d = 1.
print()
print(" x   y   d   group")
for x, y in [(3, 1), (-1, 1), (0, 2), (5, 7), (6, -5)]:
    k = 2 * y + 1
    print(f"{x:>2}  {y:>2}  {math.gcd(2 * x, k):>2}   {smith_normal_form([[2 * x, k], [k, 0]])}")
