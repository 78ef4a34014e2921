"""Driving the verification suite from Python.

The suite recomputes each structural claim from scratch on a configured
sweep of instances and compares computed graph structure against the
independently computed algebraic prediction.  The default configuration
is exhaustive at desk scale (order <= 16 abelian types with all of their
automorphisms, a registry of nonabelian groups, dihedral parameters to
50); here we run a trimmed copy so the demo finishes in about a second.
"""
from quandle_cayley import SuiteConfig, format_reports, run_suite

config = SuiteConfig(
    abelian_order_cap=9,
    nonabelian_registry=("S3", "S4", "D4"),
    dihedral_range=(2, 12),
    takasaki_window=6,
)

reports = run_suite(config)
print(format_reports(reports, show_timing=True))

slowest = max(reports, key=lambda r: r.elapsed)
print(f"slowest check: {slowest.theorem_id} on {slowest.instance} "
      f"({slowest.elapsed:.3f}s)")

print("\nSingle checks can be cherry-picked by id:")
subset = run_suite(SuiteConfig(checks=("s4_example", "takasaki"),
                               takasaki_window=3))
print(format_reports(subset))
