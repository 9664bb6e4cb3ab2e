"""
Run the exhaustive checks at desk scale
=======================================

Same harness the test suite drives, smaller n, instant feedback.  Exit
status mirrors the CLI: verified / violated / resource-exhausted.
"""
import sys

from domcycle.verify import THEOREM_IDS, run, verify_necessity_scan

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 6

worst = 0
for theorem in THEOREM_IDS:
    report = run(theorem, n_max=n_max, s_max=4)
    for line in report.summary_lines():
        print(line)
    worst = max(worst, report.exit_code)

# and the subgraph-intersection scan that motivates the pair {P4, W}
scan = verify_necessity_scan()
print(f"{scan.theorem}: {scan.status}; common subgraph classes by order:",
      scan.extra["common_class_counts_by_order"])

sys.exit(worst)
