"""Pretzel knots and twisted Whitehead doubles."""

import itertools

from cosmetic import (
    PretzelParams,
    WhiteheadParams,
    alexander,
    alg_slice_test,
    knot_signature,
    pretzel_test,
    whitehead_seifert,
    whitehead_test,
)

print("Whitehead doubles D+(K, n)")
for n in range(-4, 7):
    V = whitehead_seifert(WhiteheadParams("+", n))
    w = whitehead_test(WhiteheadParams("+", n))
    s = alg_slice_test(alexander(V))
    print(f"  n = {n:>2}  Delta = {str(alexander(V)):<14} sig = {knot_signature(V):>2}  "
          f"family test: {w.status.value:<12}  slice test: {s.status.value}")

print()
print("Pretzel knots P(p,q,r), 0 < p <= q <= r in absolute value <= 7, det > 1,")
print("that the pretzel tests leave open:")
odd = [x for x in range(-7, 8, 2)]
for p, q, r in itertools.product(odd, repeat=3):
    if not (abs(p) <= abs(q) <= abs(r)):
        continue
    out = pretzel_test(PretzelParams(p, q, r))
    if not out.obstructed and out.witness["s"] != -1:
        print(f"  P({p},{q},{r})  pq+qr+pr = {out.witness['s']}")
