"""Desk-scale re-proof: run every instance of a given half-order.

For each of the m! instances, the scan checks the two-4-cycles-or-one-
Petersen dichotomy and, for every edge lying in all matched 4-cycles,
demands that the witness engine produce a sound certificate.  Zero
violations expected everywhere.
"""

import sys
import time

from mpgraphs import exhaustive_scan

upto = int(sys.argv[1]) if len(sys.argv) > 1 else 6

print(f"{'m':>2} {'instances':>9} {'witness runs':>12} {'violations':>10} {'seconds':>8}")
for m in range(3, upto + 1):
    t0 = time.time()
    report = exhaustive_scan(m)
    print(
        f"{m:>2} {report.instance_count:>9} {report.witness_runs:>12} "
        f"{report.violation_count:>10} {time.time() - t0:>8.2f}"
    )

print(
    """
Reading the table: at m = 3 and 4 no edge ever satisfies the premise
(4-cycles always spread out), so the dichotomy does the work; from m = 5
on, 4-cycle-free instances appear and every one of their edges must be --
and is -- witnessed.
"""
)
