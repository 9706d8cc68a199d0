"""Alexander polynomials from Seifert matrices.

Run with ``python demos/01_alexander_polynomials.py``.
"""

from cosmetic import LaurentPoly, alexander, conj, dot_equal, eval_at_sign, seifert
from cosmetic.laurent import T as t
from cosmetic.seifert import alexander_raw

# The right-handed trefoil has Seifert matrix [[1, 1], [0, 1]].
V = seifert([[1, 1], [0, 1]])
raw = alexander_raw(V)
print("det(V - tV^T)        =", raw)
print("normalized           =", alexander(V))
print("value at t = 1       =", eval_at_sign(raw, 1))
print("determinant |D(-1)|  =", abs(eval_at_sign(raw, -1)))

# Alexander polynomials are symmetric up to units.
D = alexander(V)
print("D ≐ D(t^-1)?         ", dot_equal(D, conj(D)))

# Any 2x2 Seifert matrix with det(V) = m gives m(t^2 + 1) + (1 - 2m)t.
for rows in ([[3, 2], [1, 0]], [[-1, 2], [1, 0]], [[2, 5], [4, -3]]):
    V = seifert(rows)
    m = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    print(f"V = {rows}: m = {m}, Delta = {alexander_raw(V)}")

# Laurent polynomials support ordinary arithmetic.
f = 1 - 2 * t
print("f(t) f(t^-1) =", f * conj(f))
print("parse         ", LaurentPoly.parse("2t^2 - 5t + 2"))
