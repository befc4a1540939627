#!/usr/bin/env python3
"""The theta correspondence at symbol level.

Whether a symplectic-type symbol pairs with an even-type symbol in a given
tower is a band condition between staircase-free rows plus a defect
equation.  First occurrences have closed forms, checked here against the
defining scan, and the cuspidal staircases form a two-sided chain.
"""

from thetasym import (
    MINUS,
    PLUS,
    CuspidalThetaVariant,
    SymbolFamily,
    ThetaDirection,
    brute_first_occurrence,
    cuspidal_theta,
    enumerate_symbols,
    first_occurrence_unipotent,
    format_sign,
    format_symbol,
    in_B,
    parse_symbol,
    symbol_rank,
    theta_fiber,
)
from thetasym.oracle import default_scan_bound

print("== pairing fibers of the rank-2 symplectic symbols, plus tower ==")
for lam in enumerate_symbols(2, SymbolFamily.SP_UNIPOTENT):
    row = []
    for target in range(4):
        fiber = theta_fiber(lam, PLUS, target)
        row.append("{" + ",".join(format_symbol(x) for x in fiber) + "}")
    print(f"{format_symbol(lam):>10}  " + "  ".join(f"rk{i}:{r}" for i, r in enumerate(row)))

print()
print("== closed-form first occurrence vs. exhaustive scanning ==")
for lam in enumerate_symbols(2, SymbolFamily.SP_UNIPOTENT):
    for sign in (PLUS, MINUS):
        occ = first_occurrence_unipotent(lam, sign, ThetaDirection.SP_TO_O)
        brute = brute_first_occurrence(lam, sign, default_scan_bound(lam))
        marker = "ok" if brute == occ.index else "MISMATCH"
        print(
            f"{format_symbol(lam):>10} tower {format_sign(sign)}: closed {occ.index}, "
            f"scan {brute}, lift {format_symbol(occ.lift)}  [{marker}]"
        )

print()
print("== the cuspidal chain ==")
for k in range(4):
    for variant in CuspidalThetaVariant:
        lam, lam_prime, sign = cuspidal_theta(k, variant)
        assert in_B(lam, lam_prime, sign)
        print(
            f"k={k} {variant.value:>4}: sp rank {symbol_rank(lam):2d} "
            f"{format_symbol(lam):>14}  <->  o{format_sign(sign)} rank "
            f"{symbol_rank(lam_prime):2d} {format_symbol(lam_prime)}"
        )

print()
print("== the two towers of one symbol ==")
lam = parse_symbol("[2,0|1]")
for sign in (PLUS, MINUS):
    occ = first_occurrence_unipotent(lam, sign, ThetaDirection.SP_TO_O)
    print(f"{format_symbol(lam)} first occurs in the o{format_sign(sign)} tower at rank "
          f"{occ.index} with lift {format_symbol(occ.lift)}")
