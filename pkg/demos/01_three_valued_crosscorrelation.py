# Crosscorrelation between a long m-sequence (period 2^m - 1) and a decimated
# short one (period 2^k - 1), m = 2k.  For k = 5 we scan a handful of
# decimations and see which of them give only three distinct values.

import math

import numpy as np

from mseqcorr import build_field, crosscorr_all, crosscorr_distribution, long_seq, short_seq

ctx = build_field(5)
print(ctx)

s = long_seq(ctx)
u = short_seq(ctx, 1)
print("long sequence:  length", len(s), "ones", int(s.sum()))
print("short sequence: length", len(u), "ones", int(u.sum()))
print("first 31 bits of s:", "".join(map(str, s[:31])))

# d = 1 is the small Kasami set: two values only
print("d=1 ->", crosscorr_distribution(ctx, 1).entries)

# decimations coprime to 31, one per cyclotomic coset
for d in (3, 5, 7, 11, 15):
    dist = crosscorr_distribution(ctx, d)
    tag = "three-valued" if len(dist) == 3 else f"{len(dist)} values"
    print(f"d={d:<3} {tag:<14} {dist.entries}")

# the raw values for d = 7, one per shift tau
c = crosscorr_all(ctx, 7)
print("C_7(tau):", c.tolist())
print("sum =", c.sum(), " sum of squares =", int((c * c).sum()), " expected", 1023 * 31 - 2)

# d and 2d give the same distribution
assert crosscorr_distribution(ctx, 7) == crosscorr_distribution(ctx, 14)
assert math.gcd(7, 31) == 1
