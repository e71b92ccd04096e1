"""
Machine-readable reports
========================

The command-line tool prints the same report as JSON with ``--format
json``. The dictionary can also be built in-process.
"""

import json

from fibered_floer import compute_rank, parse_word
from fibered_floer.cli import build_report, main

report = build_report(compute_rank(parse_word("g d g", 3)), torsion_levels=True)
print(json.dumps({k: report[k] for k in ("case", "lefschetz", "census", "spinc", "total_rank")}, indent=1))

# %%
# The same from the command line; exit status 2 marks words outside the
# supported families.

main(["--genus", "3", "--word", "g^2 d^-1", "--format", "json"])
print("exit status:", main(["--genus", "3", "--word", "g d g^-1"]))
