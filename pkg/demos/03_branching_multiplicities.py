#!/usr/bin/env python3
"""Branching multiplicities and restriction decompositions.

The multiplicity of a label pair passes through relevance bands, an
orientation-dependent tower match, and a four-way pair condition; the base
factor is decided by the general-linear descriptors.  Decompositions keep
orientation-blocked rows visible as "undetermined" instead of guessing.
"""

from thetasym import (
    FOURIER_JACOBI,
    MINUS,
    PLUS,
    TowerContext,
    branch_decomposition,
    format_label,
    ggp_multiplicity,
    is_strongly_relevant,
    make_label,
    o_even,
    o_odd,
    parse_label,
    parse_symbol,
    select_nonzero_variant,
    sp,
    unipotent_label,
    TRIVIAL_RHO,
)

ctx = TowerContext(eps_minus_one=PLUS)

print("== a rank-1 symplectic pair ==")
steinberg = parse_label("sp(2): rho=trivial:0:reg ; L=[1,0|1] ; L'=[|]")
theta_half = parse_label("sp(2): rho=trivial:0:reg ; L=[0|] ; L'=[1|0]")
print(f"left   {format_label(steinberg)}")
print(f"right  {format_label(theta_half)}")
print(f"strongly relevant: {is_strongly_relevant(steinberg, theta_half, FOURIER_JACOBI, ctx)}")
print(f"multiplicity:      {ggp_multiplicity(steinberg, theta_half, FOURIER_JACOBI, ctx)}")

print()
print("== variant selection ==")
report = select_nonzero_variant(steinberg, theta_half, FOURIER_JACOBI, ctx)
for left, right, value in report.entries:
    print(f"  {format_label(right):>50}  ->  {value}")

print()
print("== restriction of the trivial character of the 3-dimensional group ==")
trivial_o3 = unipotent_label(o_odd(1, PLUS), parse_symbol("[1|]"), PLUS)
for eps in (PLUS, MINUS):
    rows = branch_decomposition(trivial_o3, o_even(1, eps), ctx)
    print(f"target sign {'+' if eps > 0 else '-'}:")
    for label, value in rows:
        print(f"  {format_label(label):>50}  ->  {value}")

print()
print("== oscillator decomposition of a rank-2 unipotent label ==")
pi = unipotent_label(sp(2), parse_symbol("[2,1,0|2,1]"))
for label, value in branch_decomposition(pi, sp(2), ctx):
    print(f"  {format_label(label):>52}  ->  {value}")

print()
print("== an orientation bit resolves an undetermined pair ==")
cusp4 = make_label(sp(2), TRIVIAL_RHO, parse_symbol("[|2,1,0]"), parse_symbol("[|]"))
near = make_label(sp(1), TRIVIAL_RHO, parse_symbol("[0|]"), parse_symbol("[1,0|]"))
for bits in (None, MINUS, PLUS):
    sub = TowerContext(eps_minus_one=PLUS, orient_right_alt=bits)
    shown = "unset" if bits is None else ("+" if bits > 0 else "-")
    print(f"  right alt bit {shown:>5}: {ggp_multiplicity(cusp4, near, FOURIER_JACOBI, sub)}")
