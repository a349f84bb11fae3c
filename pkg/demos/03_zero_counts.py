# The affine polynomial A_a(v) = a^(2^l) v^(2^2l) + v^(2^l) + a v + 1 has
# 1, 2 or 4 zeros in GF(2^k).  Tally the classes M1, M2, M4 for a few k and l
# and compare with the closed forms.

from mseqcorr import affine_zeros_A, build_field, make_lparams
from mseqcorr.dobbertin import R_eval, valid_ls
from mseqcorr.zerocount import M_distribution, linearized_kernel_L, theorem1_expected

for k in (3, 4, 5, 6, 7):
    ctx = build_field(k)
    for l in valid_ls(k):
        got = M_distribution(ctx, make_lparams(k, l))
        mark = "ok" if got == theorem1_expected(k) else "MISMATCH"
        print(f"k={k} l={l}: (|M1|, |M2|, |M4|) = {got}  {mark}")

# one a in detail: R(1/a) is always one of the zeros
ctx = build_field(5)
lp = make_lparams(5, 2)
a = int(ctx.subfield[3])
rep = affine_zeros_A(ctx, lp, a, method="both")
v0 = R_eval(ctx, lp, ctx.inv(a))
print("a =", hex(a), "zeros:", [hex(z) for z in rep.zeros], "R(1/a) =", hex(v0))

# the linearized polynomial L_a over the big field has 1 or 4 zeros
lp = make_lparams(5, 1)
counts = [linearized_kernel_L(ctx, lp, int(x)).count for x in ctx.subfield]
print("T_a over GF(2^5):", {t: counts.count(t) for t in sorted(set(counts))})
