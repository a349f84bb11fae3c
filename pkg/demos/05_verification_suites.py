# Run every verification suite at k = 5 and print a short report.

from mseqcorr import build_field, run_suite
from mseqcorr.verify import SUITE_NAMES

ctx = build_field(5)
for rep in run_suite(ctx, SUITE_NAMES):
    status = "PASS" if rep.passed else "FAIL"
    print(f"{status} {rep.theorem:<12} checked={rep.checked:<5} {rep.wall_time_ms:7.1f} ms  {rep.info or ''}")
