# C_d(tau) + 1 runs over the same multiset as the exponential sum
#     S(a) = sum_x (-1)^(Tr_m(a x) + Tr_k(x^(d(2^k+1)))),  a in GF(2^k)*.
# One Walsh-Hadamard transform of f(x) = Tr_k(x^(d(2^k+1))) gives all of them.

import time

import numpy as np

from mseqcorr import CorrDistribution, S_all_wht, S_naive, build_field
from mseqcorr.expsums import walsh_spectrum

ctx = build_field(5)
d = 11

t0 = time.perf_counter()
fast = S_all_wht(ctx, d)
t_fast = time.perf_counter() - t0

t0 = time.perf_counter()
slow = {a: S_naive(ctx, d, a) for a in fast}
t_slow = time.perf_counter() - t0

print(f"Walsh route {t_fast * 1e3:.1f} ms, naive route {t_slow * 1e3:.1f} ms, agree: {fast == slow}")
print("S(a) distribution:", CorrDistribution.from_values(list(fast.values())).entries)

# the full spectrum also covers a outside the subfield
spec = walsh_spectrum(ctx, d)
print("full spectrum values:", sorted(set(spec.tolist())))
print("Parseval:", int((spec.astype(np.int64) ** 2).sum()) == 4**ctx.m)

# a bigger field, Walsh route only
ctx9 = build_field(9)
t0 = time.perf_counter()
vals = S_all_wht(ctx9, 31).values()
print(f"k=9, d=31: {CorrDistribution.from_values(list(vals)).entries}  ({time.perf_counter() - t0:.2f} s)")
