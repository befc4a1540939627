import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetasym.core import (
    Bipartition,
    EMPTY_SYMBOL,
    Symbol,
    SymbolFamily,
    admissible_defects,
    bipartition_count,
    bipartitions_of,
    close_dominates,
    count_symbols,
    defect_rank_offset,
    enumerate_symbols,
    format_symbol,
    parse_bipartition,
    parse_symbol,
    partition,
    partition_count,
    partition_transpose,
    partitions_of,
    random_symbol,
    shift_symbol,
    symbol_defect,
    symbol_normalize,
    symbol_rank,
    symbol_transpose,
    symbols_with_defect,
    upsilon,
    upsilon_inverse,
)
from thetasym.errors import NormalizationError, ParseError


partitions_strategy = st.lists(st.integers(1, 9), max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def symbols_strategy():
    def build(data):
        up, lo, defect_choice = data
        defects = [1, -3, 5, 0, 2, -2, 4, -4]
        return upsilon_inverse(Bipartition(partition(up), partition(lo)), defects[defect_choice])

    return st.tuples(
        partitions_strategy, partitions_strategy, st.integers(0, 7)
    ).map(build)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def test_partition_transpose_examples():
    assert partition_transpose(()) == ()
    assert partition_transpose((2, 2)) == (2, 2)
    assert partition_transpose((3, 1)) == (2, 1, 1)


@given(partitions_strategy)
def test_partition_transpose_involutive(p):
    assert partition_transpose(partition_transpose(p)) == p
    assert sum(partition_transpose(p)) == sum(p)


def test_close_dominates_examples():
    assert close_dominates((1,), (1,))
    assert not close_dominates((), (2,))
    assert close_dominates((3, 1), (3, 2))


@given(partitions_strategy, partitions_strategy)
def test_close_dominates_size_band(lam, mu):
    if close_dominates(lam, mu):
        nonzero = sum(1 for x in mu if x > 0)
        assert sum(mu) - nonzero <= sum(lam) <= sum(mu)


def test_partition_count_matches_generator():
    for n in range(12):
        assert partition_count(n) == sum(1 for _ in partitions_of(n))
    for n in range(9):
        assert bipartition_count(n) == sum(1 for _ in bipartitions_of(n))


def test_partition_rejects_bad_input():
    with pytest.raises(NormalizationError):
        partition((1, 2))
    with pytest.raises(NormalizationError):
        partition((-1,))


# ---------------------------------------------------------------------------
# symbols
# ---------------------------------------------------------------------------


def test_rank_defect_examples():
    assert symbol_rank(parse_symbol("[|2,1,0]")) == 2
    assert symbol_rank(parse_symbol("[4,3,2,1,0|]")) == 6
    assert symbol_rank(EMPTY_SYMBOL) == 0
    assert symbol_defect(parse_symbol("[4,3,2,1,0|]")) == 5
    assert symbol_defect(parse_symbol("[|2,1,0]")) == -3
    assert symbol_defect(EMPTY_SYMBOL) == 0


def test_normalize_examples():
    assert symbol_normalize((1, 0), (0,)) == Symbol((0,), ())
    assert symbol_normalize((), ()) == EMPTY_SYMBOL
    assert symbol_normalize((3, 1), (2,)) == Symbol((3, 1), (2,))


def test_normalize_rejects_bad_rows():
    with pytest.raises(NormalizationError):
        symbol_normalize((1, 1), ())
    with pytest.raises(NormalizationError):
        symbol_normalize((0, 1), ())
    with pytest.raises(NormalizationError):
        Symbol((1, 0), (0,))  # not reduced


def test_transpose_examples():
    assert symbol_transpose(Symbol((1,), (0,))) == Symbol((0,), (1,))
    assert symbol_transpose(parse_symbol("[|2,1,0]")) == parse_symbol("[2,1,0|]")


def test_upsilon_examples():
    assert upsilon(parse_symbol("[2,0|1]")) == ((1,), (1,))
    assert upsilon(parse_symbol("[4,3,2,1,0|]")) == ((), ())
    assert upsilon(EMPTY_SYMBOL) == ((), ())


def test_upsilon_inverse_examples():
    assert upsilon_inverse(((1,), (1,)), 1) == parse_symbol("[2,0|1]")
    assert upsilon_inverse(((), ()), -3) == parse_symbol("[|2,1,0]")
    assert upsilon_inverse(((), ()), 0) == EMPTY_SYMBOL


def test_upsilon_inverse_rank_shift():
    for defect in (-4, -3, -2, 0, 1, 2, 4, 5):
        s = upsilon_inverse(((2, 1), (1,)), defect)
        assert symbol_rank(s) == 4 + defect_rank_offset(defect)
        assert symbol_defect(s) == defect


@settings(max_examples=300)
@given(symbols_strategy())
def test_symbol_roundtrips(s):
    assert symbol_transpose(symbol_transpose(s)) == s
    assert symbol_rank(symbol_transpose(s)) == symbol_rank(s)
    assert symbol_defect(symbol_transpose(s)) == -symbol_defect(s)
    bp = upsilon(s)
    assert upsilon_inverse(bp, symbol_defect(s)) == s
    assert upsilon(symbol_transpose(s)) == Bipartition(bp.lower, bp.upper)


@settings(max_examples=300)
@given(symbols_strategy(), st.integers(0, 5))
def test_shift_invariance(s, steps):
    raw = shift_symbol(s, steps)
    again = symbol_normalize(*raw)
    assert again == s
    # rank and defect can be read off the raw rows through one more normalize
    assert symbol_rank(again) == symbol_rank(s)
    assert symbol_defect(again) == symbol_defect(s)


def test_normalize_idempotent_random():
    rng = random.Random(7)
    for _ in range(500):
        s = random_symbol(rng)
        again = symbol_normalize(s.row_a, s.row_b)
        assert again == s


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def test_enumerate_examples():
    assert enumerate_symbols(1, SymbolFamily.SP_UNIPOTENT) == [
        parse_symbol("[1|]"),
        parse_symbol("[1,0|1]"),
    ]
    assert len(enumerate_symbols(2, SymbolFamily.SP_UNIPOTENT)) == 6
    assert enumerate_symbols(0, SymbolFamily.O_EVEN_PLUS) == [EMPTY_SYMBOL]


def test_enumerate_matches_bipartition_counts():
    for family in SymbolFamily:
        for rank in range(7):
            symbols = enumerate_symbols(rank, family)
            assert len(symbols) == count_symbols(rank, family)
            assert len(symbols) == len(set(symbols))
            for defect in admissible_defects(rank, family):
                block = symbols_with_defect(rank, defect)
                assert len(block) == bipartition_count(rank - defect_rank_offset(defect))
                for s in block:
                    assert symbol_rank(s) == rank
                    assert symbol_defect(s) == defect


def test_enumerate_is_deterministic():
    a = enumerate_symbols(5, SymbolFamily.O_EVEN_MINUS)
    b = enumerate_symbols(5, SymbolFamily.O_EVEN_MINUS)
    assert a == b


def test_o_odd_enumerates_same_symbols_as_sp():
    for rank in range(5):
        assert enumerate_symbols(rank, SymbolFamily.O_ODD) == enumerate_symbols(
            rank, SymbolFamily.SP_UNIPOTENT
        )


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------


def test_parse_format_roundtrip():
    for text in ("[4,3,2,1,0|]", "[|2,1,0]", "[|]", "[2,0|1]"):
        assert format_symbol(parse_symbol(text)) == text


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as err:
        parse_symbol("2,0|1]")
    assert err.value.offset == 0
    with pytest.raises(ParseError):
        parse_symbol("[2,0|1|]")
    with pytest.raises(ParseError):
        parse_symbol("[2,x|1]")
    with pytest.raises(NormalizationError):
        parse_symbol("[1,1|]")


def test_parse_bipartition():
    assert parse_bipartition("([2,1],[1])") == ((2, 1), (1,))
    assert parse_bipartition("([],[])") == ((), ())
    with pytest.raises(ParseError):
        parse_bipartition("[1],[2]")
