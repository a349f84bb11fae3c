# Search every coprime decimation class for three-valued spectra and line
# the hits up against the classes d(2^l + 1) = 2^i mod 2^k - 1.

import time

from mseqcorr import build_field, search_three_valued, solve_distribution, valid_decimations
from mseqcorr.verify import table1_row

print(f"{'m':>3} {'classes':>8} {'found':<22} {'predicted':<22} time")
for k in (3, 5, 7, 9):
    t0 = time.perf_counter()
    res = search_three_valued(build_field(k))
    row = table1_row(res)
    print(f"{2 * k:>3} {res.n_classes:>8} {str(res.found_reps):<22} "
          f"{str([c.rep for c in valid_decimations(k)]):<22} {time.perf_counter() - t0:.2f}s")
    assert row["found"] == res.found_reps

# the counts of the values 0, 2^k, -2^k, -2^(k+1)
for k in (3, 5, 7, 9):
    print(f"k={k}: (r, s, t, v) =", solve_distribution(k, (2**k + 1) // 3))
