"""
Scanning a corpus, and making sure the scan can fail
====================================================

All connected graphs on up to six vertices are scanned. Then theta is
halved before the certificates are evaluated; the unconditional
inequalities should now break, which shows the comparison is not vacuous.
"""

import tempfile
from pathlib import Path

from lapcert import ScanConfig, enumerate_graphs, scan, write_graph6

tmp = Path(tempfile.mkdtemp()) / "upto6.g6"
tmp.write_text("\n".join(write_graph6(g) for n in range(2, 7) for g in enumerate_graphs(n)) + "\n")

report = scan(ScanConfig(sources=(str(tmp),), subset_samples=200))
print(f"{report.summary['graphs']} graphs, {report.violations} violations")
for cid, counts in report.summary["verdicts"].items():
    shown = {k: v for k, v in counts.items() if v}
    print(f"  {cid:24s} {shown}")

bad = scan(ScanConfig(sources=(str(tmp),), theta_scale=0.5, forwarding=False))
print()
print(f"theta halved: {bad.violations} violations")
for cid, counts in bad.summary["verdicts"].items():
    if counts["VIOLATION"]:
        print(f"  {cid:24s} {counts['VIOLATION']}")
