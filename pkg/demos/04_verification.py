#!/usr/bin/env python3
"""Running the brute-force verifiers.

The oracle layer recomputes everything from definitions: enumeration sizes
from partition counting, first occurrences from fiber scans, and variant
uniqueness from exhaustive evaluation.  A deliberate perturbation shows the
harness actually detects failures.
"""

from thetasym import (
    PLUS,
    TowerContext,
    verify_counts,
    verify_f1,
    verify_variant_uniqueness,
)

print("== enumeration counts against partition counting ==")
report = verify_counts(8)
print(f"  {report}")

print()
print("== closed-form first occurrence against fiber scanning ==")
report = verify_f1(5)
print(f"  {report}")
print(f"  JSON: {report.to_json()[:80]}...")

print()
print("== injected failure is caught ==")
report = verify_f1(2, index_offset=1)
print(f"  {report}")
for failure in report.failures[:3]:
    print(f"    {failure['input']}: expected {failure['expected']}, got {failure['actual']}")

print()
print("== transpose-variant uniqueness ==")
report = verify_variant_uniqueness(2, TowerContext(eps_minus_one=PLUS))
print(f"  {report}")
