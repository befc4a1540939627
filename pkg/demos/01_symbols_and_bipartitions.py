#!/usr/bin/env python3
"""Symbols, their invariants, and the staircase bijection.

A symbol is a pair of strictly decreasing rows of nonnegative integers,
taken up to a simultaneous shift.  Rank and defect are the two invariants
of the shift class, and stripping the staircase from each row identifies
symbols of a fixed rank and defect with bipartitions.
"""

from thetasym import (
    SymbolFamily,
    enumerate_symbols,
    format_bipartition,
    format_symbol,
    parse_symbol,
    symbol_defect,
    symbol_normalize,
    symbol_rank,
    symbol_transpose,
    upsilon,
    upsilon_inverse,
)

print("== a symbol and its invariants ==")
s = parse_symbol("[4,2,1|3,0]")
print(f"symbol     {format_symbol(s)}")
print(f"rank       {symbol_rank(s)}")
print(f"defect     {symbol_defect(s)}")
print(f"upsilon    {format_bipartition(upsilon(s))}")

print()
print("== shift equivalence ==")
raw = tuple(x + 2 for x in s.row_a) + (1, 0), tuple(x + 2 for x in s.row_b) + (1, 0)
print(f"raw rows   {raw[0]} | {raw[1]}")
reduced = symbol_normalize(*raw)
print(f"reduced    {format_symbol(reduced)}  (same rank {symbol_rank(reduced)}, "
      f"defect {symbol_defect(reduced)})")

print()
print("== transposition negates the defect ==")
t = symbol_transpose(s)
print(f"transpose  {format_symbol(t)}  rank {symbol_rank(t)}  defect {symbol_defect(t)}")

print()
print("== the staircase bijection ==")
bp = upsilon(s)
print(f"upsilon_inverse({format_bipartition(bp)}, {symbol_defect(s)}) = "
      f"{format_symbol(upsilon_inverse(bp, symbol_defect(s)))}")

print()
print("== symbol tables ==")
for family in (SymbolFamily.SP_UNIPOTENT, SymbolFamily.O_EVEN_PLUS, SymbolFamily.O_EVEN_MINUS):
    for rank in range(3):
        symbols = enumerate_symbols(rank, family)
        listing = "  ".join(format_symbol(x) for x in symbols)
        print(f"{family.value:>3} rank {rank}: {len(symbols):2d} symbols   {listing}")
