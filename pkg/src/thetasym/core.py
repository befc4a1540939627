"""Partitions, bipartitions and two-row symbols.

A *symbol* is a pair of strictly decreasing sequences of nonnegative
integers.  Symbols are taken up to the shift equivalence generated by

    (a_1, ..., a_r | b_1, ..., s_t)  ~  (a_1+1, ..., a_r+1, 0 | b_1+1, ..., b_t+1, 0),

and every equivalence class has a unique *reduced* representative in which
the two rows do not both contain the entry 0.  Two class invariants drive
everything downstream:

    rank(L) = sum(row_a) + sum(row_b) - floor(((|row_a| + |row_b| - 1) / 2)^2)
    def(L)  = |row_a| - |row_b|

Symbols of rank n are classified by the residue of the defect mod 4: the
class 1 parametrizes the unipotent representations of the rank-n symplectic
group (and, with an extra sign, of the odd orthogonal group), while the
classes 0 and 2 parametrize the split and non-split even orthogonal groups.

Removing the staircase (m-1, m-2, ..., 0) from each row turns a symbol into
an ordered pair of partitions (a *bipartition*); together with the defect
this is a bijection, which is how symbols of a given rank and defect are
enumerated here.

Partitions are plain tuples of weakly decreasing positive integers, with
trailing zeros trimmed; comparisons pad with zeros on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import Iterable, Iterator, NamedTuple

from .errors import NormalizationError, ParseError

Partition = tuple[int, ...]

EMPTY_PARTITION: Partition = ()

#: Enumeration refuses ranks above this bound; raise it explicitly if you
#: really want the (very large) tables beyond desk scale.
MAX_ENUMERATION_RANK = 64


def partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize a partition: weakly decreasing, zeros trimmed."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x < 0:
            raise NormalizationError(f"negative part {x} in partition {p}")
        if i + 1 < len(p) and p[i + 1] > x:
            raise NormalizationError(f"parts not weakly decreasing in {p}")
    return p


def partition_transpose(p: Partition) -> Partition:
    """Conjugate partition (column counts of the Young diagram).

    Involutive and size preserving: ``[3, 1] -> [2, 1, 1]``.
    """
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def close_dominates(lam: Partition, mu: Partition) -> bool:
    """Band relation: mu_i - 1 <= lam_i <= mu_i for every i (zero padded)."""
    n = max(len(lam), len(mu))
    for i in range(n):
        li = lam[i] if i < len(lam) else 0
        mi = mu[i] if i < len(mu) else 0
        if not (mi - 1 <= li <= mi):
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order, largest part first."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@cache
def partition_count(n: int) -> int:
    """Number of partitions of n, via the Euler pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


class Bipartition(NamedTuple):
    """Ordered pair of partitions; the staircase-free image of a symbol."""

    upper: Partition
    lower: Partition

    @property
    def size(self) -> int:
        return sum(self.upper) + sum(self.lower)


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    """All bipartitions of total size n."""
    for a in range(n, -1, -1):
        for up in partitions_of(a):
            for lo in partitions_of(n - a):
                yield Bipartition(up, lo)


def bipartition_count(n: int) -> int:
    """|P_2(n)|, computed from partition counts (independent of the generator)."""
    if n < 0:
        return 0
    return sum(partition_count(a) * partition_count(n - a) for a in range(n + 1))


# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------


def _check_row(row: tuple[int, ...], name: str) -> None:
    for i, x in enumerate(row):
        if x < 0:
            raise NormalizationError(f"negative entry {x} in {name} row {row}")
        if i + 1 < len(row) and row[i + 1] >= x:
            raise NormalizationError(f"{name} row {row} not strictly decreasing")


@dataclass(frozen=True, order=True)
class Symbol:
    """Reduced two-row symbol.

    The constructor insists on the canonical reduced representative (rows
    strictly decreasing, not both containing 0); use :func:`symbol_normalize`
    to reduce raw row data.  Equality, hashing and ordering are structural
    on the reduced form, so symbols can live in sets and sorted tables.
    """

    row_a: tuple[int, ...]
    row_b: tuple[int, ...]

    def __post_init__(self):
        _check_row(self.row_a, "first")
        _check_row(self.row_b, "second")
        if self.row_a and self.row_b and self.row_a[-1] == 0 and self.row_b[-1] == 0:
            raise NormalizationError(
                f"symbol {self.row_a}|{self.row_b} is not reduced (0 in both rows)"
            )

    def __repr__(self):
        return f"Symbol({format_symbol(self)!r})"


EMPTY_SYMBOL = Symbol((), ())

#: Canonical rank-0 symbol of defect 1 (the trivial slot of a symplectic-type
#: factor; the empty symbol has defect 0 and fills the even-type slot).
ZERO_SYMBOL = Symbol((0,), ())


def symbol_normalize(row_a: Iterable[int], row_b: Iterable[int]) -> Symbol:
    """Reduce raw rows: strip one 0 from each row and shift down while possible."""
    a = tuple(int(x) for x in row_a)
    b = tuple(int(x) for x in row_b)
    _check_row(a, "first")
    _check_row(b, "second")
    while a and b and a[-1] == 0 and b[-1] == 0:
        a = tuple(x - 1 for x in a[:-1])
        b = tuple(x - 1 for x in b[:-1])
    return Symbol(a, b)


def symbol_rank(s: Symbol) -> int:
    # floor of the square of the half-integer (m-1)/2, not the square of its
    # floor: the two differ for even m, and only the former is shift invariant.
    m = len(s.row_a) + len(s.row_b)
    return sum(s.row_a) + sum(s.row_b) - ((m - 1) ** 2) // 4


def symbol_defect(s: Symbol) -> int:
    return len(s.row_a) - len(s.row_b)


def symbol_transpose(s: Symbol) -> Symbol:
    """Swap the two rows; rank is preserved, defect is negated."""
    return Symbol(s.row_b, s.row_a)


def upsilon(s: Symbol) -> Bipartition:
    """Subtract the staircase from each row and trim zeros.

    Entry ``a_i`` (1-indexed) maps to ``a_i - (m - i)`` where m is the row
    length, so the bottom entry is kept as is.
    """
    m1, m2 = len(s.row_a), len(s.row_b)
    up = partition(a - (m1 - 1 - i) for i, a in enumerate(s.row_a))
    lo = partition(b - (m2 - 1 - i) for i, b in enumerate(s.row_b))
    return Bipartition(up, lo)


def defect_rank_offset(defect: int) -> int:
    """Rank of the staircase part: ((d+1)/2)((d-1)/2) for odd d, (d/2)^2 for even."""
    if defect % 2 == 0:
        return (defect // 2) ** 2
    return (defect * defect - 1) // 4


def upsilon_inverse(bp: Bipartition | tuple[Partition, Partition], defect: int) -> Symbol:
    """The unique reduced symbol with the given defect mapping to ``bp``.

    Row lengths are the minimal ones compatible with the defect, which is
    exactly what reducedness requires.
    """
    up, lo = partition(bp[0]), partition(bp[1])
    m2 = max(0, len(lo), len(up) - defect, -defect)
    m1 = m2 + defect
    row_a = tuple((up[i] if i < len(up) else 0) + (m1 - 1 - i) for i in range(m1))
    row_b = tuple((lo[i] if i < len(lo) else 0) + (m2 - 1 - i) for i in range(m2))
    return Symbol(row_a, row_b)


class SymbolFamily(Enum):
    """Defect residue classes mod 4, keyed by the groups they parametrize.

    SP_UNIPOTENT and O_ODD share the residue class 1; the odd orthogonal
    groups additionally carry a sign on each label, which lives on labels
    rather than on symbols.
    """

    SP_UNIPOTENT = "sp"
    O_EVEN_PLUS = "o+"
    O_EVEN_MINUS = "o-"
    O_ODD = "o_odd"

    @property
    def defect_residue(self) -> int:
        return {"sp": 1, "o+": 0, "o-": 2, "o_odd": 1}[self.value]

    def admits_defect(self, defect: int) -> bool:
        return defect % 4 == self.defect_residue


def admissible_defects(rank: int, family: SymbolFamily) -> list[int]:
    """Defects of the family whose staircase offset fits inside ``rank``.

    Ordered by absolute value, positive before negative; all other defects
    give an empty set of symbols at this rank.
    """
    out = []
    residue = family.defect_residue
    if residue == 1:
        k = 0
        while k * (k + 1) <= rank:
            out.append((-1) ** k * (2 * k + 1))
            k += 1
    else:
        d = residue
        while (d // 2) ** 2 <= rank:
            if d == 0:
                out.append(0)
            else:
                out.extend([d, -d])
            d += 4
    return out


def symbols_with_defect(rank: int, defect: int) -> list[Symbol]:
    """All reduced symbols of the given rank and defect, sorted on rows."""
    residual = rank - defect_rank_offset(defect)
    if residual < 0:
        return []
    syms = [upsilon_inverse(bp, defect) for bp in bipartitions_of(residual)]
    syms.sort(key=lambda s: (s.row_a, s.row_b))
    return syms


def enumerate_symbols(rank: int, family: SymbolFamily) -> list[Symbol]:
    """All reduced symbols of this rank in the family's defect classes.

    Deterministic order: defect ascending by absolute value (positive before
    negative at ties), then lexicographic on rows.  For ``O_ODD`` this is
    the same symbol set as ``SP_UNIPOTENT``; the extra sign lives on labels.
    """
    if rank > MAX_ENUMERATION_RANK:
        raise ValueError(
            f"rank {rank} exceeds enumeration bound {MAX_ENUMERATION_RANK}"
        )
    out: list[Symbol] = []
    for defect in admissible_defects(rank, family):
        out.extend(symbols_with_defect(rank, defect))
    return out


def count_symbols(rank: int, family: SymbolFamily) -> int:
    """Symbol count by bipartition counting; independent of the generator."""
    return sum(
        bipartition_count(rank - defect_rank_offset(d))
        for d in admissible_defects(rank, family)
    )


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------


def format_symbol(s: Symbol) -> str:
    """Render in the bracket grammar, e.g. ``[4,3,2,1,0|]`` or ``[|]``."""
    a = ",".join(str(x) for x in s.row_a)
    b = ",".join(str(x) for x in s.row_b)
    return f"[{a}|{b}]"


def format_bipartition(bp: Bipartition) -> str:
    up = ",".join(str(x) for x in bp.upper)
    lo = ",".join(str(x) for x in bp.lower)
    return f"([{up}],[{lo}])"


def _parse_row(text: str, base: int) -> tuple[int, ...]:
    if not text.strip():
        return ()
    entries = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        if not stripped or not all(c.isdigit() for c in stripped):
            raise ParseError(f"bad row entry {piece!r}", base + pos)
        entries.append(int(stripped))
        pos += len(piece) + 1
    return tuple(entries)


def parse_symbol(text: str) -> Symbol:
    """Parse the ``[a1,a2,...|b1,...]`` grammar and normalize.

    Raises :class:`ParseError` with a byte offset for malformed text and
    :class:`NormalizationError` for rows that are not strictly decreasing.
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped.startswith("["):
        raise ParseError("symbol must start with '['", offset)
    if not stripped.endswith("]"):
        raise ParseError("symbol must end with ']'", offset + len(stripped) - 1)
    body = stripped[1:-1]
    if body.count("|") != 1:
        raise ParseError("symbol needs exactly one '|' row separator", offset + 1)
    left, right = body.split("|")
    row_a = _parse_row(left, offset + 1)
    row_b = _parse_row(right, offset + 2 + len(left))
    return symbol_normalize(row_a, row_b)


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``([p1,p2,...],[q1,...])``."""
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("bipartition must be parenthesized", offset)
    body = stripped[1:-1].strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("bipartition rows must be bracketed", offset + 1)
    parts = body[1:-1].split("],[")
    if len(parts) != 2:
        raise ParseError("bipartition needs two bracketed rows", offset + 1)
    up = _parse_row(parts[0], offset + 2)
    lo = _parse_row(parts[1], offset + 4 + len(parts[0]))
    return Bipartition(partition(up), partition(lo))


def random_symbol(rng, max_rank: int = 12) -> Symbol:
    """A uniform-ish random reduced symbol, for fuzz tests."""
    rank = rng.randrange(max_rank + 1)
    choices = [
        d for fam in SymbolFamily for d in admissible_defects(rank, fam)
    ]
    defect = rng.choice(choices)
    residual = rank - defect_rank_offset(defect)
    cut = rng.randrange(residual + 1)
    up = _random_partition(rng, cut)
    lo = _random_partition(rng, residual - cut)
    return upsilon_inverse(Bipartition(up, lo), defect)


def _random_partition(rng, n: int) -> Partition:
    parts = []
    remaining = n
    bound = n
    while remaining > 0:
        x = rng.randrange(1, min(bound, remaining) + 1)
        parts.append(x)
        bound = x
        remaining -= x
    return tuple(parts)


def shift_symbol(s: Symbol, steps: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Un-reduced raw rows equivalent to ``s``, shifted up ``steps`` times."""
    a, b = s.row_a, s.row_b
    for _ in range(steps):
        a = tuple(x + 1 for x in a) + (0,)
        b = tuple(x + 1 for x in b) + (0,)
    return a, b
