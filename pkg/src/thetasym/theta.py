"""The finite theta correspondence at symbol level.

Whether a unipotent representation of a rank-n symplectic group pairs with
one of a rank-n' even orthogonal group inside the oscillator representation
is a pure symbol condition: the pair of symbols must satisfy a band relation
between transposed staircase-free rows together with a defect equation,

    plus tower:   def(L') = -def(L) + 1,
    minus tower:  def(L') = -def(L) - 1.

This module implements that membership predicate, the four-way pair
condition with untransposed rows that governs branching multiplicities, the
closed-form first-occurrence index and lift for unipotent symbols, the
cuspidal staircase chains, and the first-occurrence case tables for
representations supported on cuspidal symbol pairs.

First occurrences along a pair of Witt towers come in a small/large branch
pair whose assignment to the two tower signs is genuinely extra data (it
depends on the additive character through the square class of -1).  The
:class:`TowerContext` carries those orientation bits; when a bit is neither
supplied nor derivable the operations return their small branch flagged as
unresolved rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .catalog import (
    KH,
    MINUS,
    PLUS,
    CuspidalKind,
    GroupFamily,
    RepLabel,
    Sign,
    cuspidal_symbol,
    cuspidal_symbol_with_defect,
    format_sign,
    is_unipotent_cuspidal,
    kh_of,
    sign_pow,
)
from .core import (
    Bipartition,
    Symbol,
    SymbolFamily,
    close_dominates,
    enumerate_symbols,
    partition_transpose,
    symbol_defect,
    symbol_rank,
    symbol_transpose,
    upsilon,
    upsilon_inverse,
)
from .errors import CaseMismatch, DefectClassMismatch, NotCuspidalSupport


class Tower(Enum):
    """Witt towers; the sign on the even/odd orthogonal towers is the form type."""

    SP = "sp"
    O_EVEN_PLUS = "o_even+"
    O_EVEN_MINUS = "o_even-"
    O_ODD_PLUS = "o_odd+"
    O_ODD_MINUS = "o_odd-"

    @property
    def sign(self) -> Sign | None:
        if self is Tower.SP:
            return None
        return PLUS if self.value.endswith("+") else MINUS

    @property
    def is_even_orthogonal(self) -> bool:
        return self in (Tower.O_EVEN_PLUS, Tower.O_EVEN_MINUS)

    @property
    def is_odd_orthogonal(self) -> bool:
        return self in (Tower.O_ODD_PLUS, Tower.O_ODD_MINUS)


@dataclass(frozen=True)
class TowerContext:
    """Additive-character-dependent data for first-occurrence questions.

    ``eps_minus_one`` is the square class of -1.  ``tower`` names the target
    tower of a single-label query.  The four orientation slots resolve the
    small/large branch assignments: ``orient_left`` / ``orient_right`` are
    the primary bits of the two labels of a pair (for a single-label query
    only ``orient_left`` is read), and the ``_alt`` bits belong to the
    twisted partner family.  Concretely:

    * symplectic label: primary = sign of the even orthogonal tower where
      the first occurrence is small; alt = same for the odd towers;
    * orthogonal label: primary = + when the label itself (rather than its
      sign twist) occurs small in the symplectic tower; alt = the same bit
      for the label with its two symbols swapped.

    Unset bits are derived from the cuspidal theta chain whenever the
    label's support is unipotent cuspidal with trivial descriptor, and left
    open otherwise.
    """

    eps_minus_one: Sign = PLUS
    tower: Tower | None = None
    orient_left: Sign | None = None
    orient_right: Sign | None = None
    orient_left_alt: Sign | None = None
    orient_right_alt: Sign | None = None


@dataclass(frozen=True)
class FirstOccurrence:
    """First-occurrence index plus the lift there, when determined.

    ``lift`` is a :class:`Symbol` (unipotent case), a :class:`KH` pair
    (supported case; components whose sign the case table leaves open are
    reported nonnegative), or ``None``.  ``resolved`` records whether the
    branch was certain: an orientation bit was known, or the two branches
    coincide.
    """

    index: int
    lift: Symbol | KH | None = None
    resolved: bool = True

    def __post_init__(self):
        if isinstance(self.lift, Symbol):
            assert symbol_rank(self.lift) == self.index


# ---------------------------------------------------------------------------
# Pair membership predicates
# ---------------------------------------------------------------------------


def in_B(lam: Symbol, lam_prime: Symbol, sign: Sign) -> bool:
    """Symbol-level occurrence in the oscillator representation.

    ``lam`` is a symplectic-type symbol (defect = 1 mod 4), ``lam_prime``
    even-type; ``sign`` picks the tower.  Plus tower: the transposed rows
    must satisfy

        t(lower') <= t(upper),  t(lower) <= t(upper'),  def' = -def + 1,

    where <= is the band relation; the minus tower swaps the row roles and
    uses def' = -def - 1.
    """
    d = symbol_defect(lam)
    if d % 4 != 1:
        raise DefectClassMismatch(f"first symbol defect {d} not = 1 mod 4")
    d2 = symbol_defect(lam_prime)
    if d2 % 2 != 0:
        raise DefectClassMismatch(f"second symbol defect {d2} must be even")
    up, lo = upsilon(lam)
    up2, lo2 = upsilon(lam_prime)
    if sign == PLUS:
        return (
            d2 == -d + 1
            and close_dominates(partition_transpose(lo2), partition_transpose(up))
            and close_dominates(partition_transpose(lo), partition_transpose(up2))
        )
    return (
        d2 == -d - 1
        and close_dominates(partition_transpose(up2), partition_transpose(lo))
        and close_dominates(partition_transpose(up), partition_transpose(lo2))
    )


class GVariant(Enum):
    EVEN_PLUS = "even+"
    EVEN_MINUS = "even-"
    ODD_MINUS = "odd-"
    ODD_PLUS = "odd+"


def in_G(lam: Symbol, lam_prime: Symbol) -> GVariant | None:
    """Which of the four branching-gate sets contains the pair, if any.

    These conditions use the *untransposed* staircase-free rows, unlike
    :func:`in_B`; the asymmetry is intrinsic.  Pairs whose first defect is
    zero (or otherwise outside every defect gate) return ``None``.
    """
    d, d2 = symbol_defect(lam), symbol_defect(lam_prime)
    up, lo = upsilon(lam)
    up2, lo2 = upsilon(lam_prime)
    if d > 0:
        if d2 == d - 1 and close_dominates(up, up2) and close_dominates(lo2, lo):
            return GVariant.EVEN_PLUS
        if d2 == -d - 1 and close_dominates(lo2, up) and close_dominates(lo, up2):
            return GVariant.EVEN_MINUS
    if d < 0:
        if d2 == d + 1 and close_dominates(up2, up) and close_dominates(lo, lo2):
            return GVariant.ODD_MINUS
        if d2 == -d + 1 and close_dominates(up2, lo) and close_dominates(up, lo2):
            return GVariant.ODD_PLUS
    return None


def theta_fiber(lam: Symbol, sign: Sign, target_rank: int) -> list[Symbol]:
    """All even-type symbols of the target rank pairing with ``lam``.

    Brute enumeration of the target family filtered through :func:`in_B`;
    deliberately definition-driven so it can serve as the oracle for the
    closed-form first occurrence.
    """
    family = SymbolFamily.O_EVEN_PLUS if sign == PLUS else SymbolFamily.O_EVEN_MINUS
    want = -symbol_defect(lam) + (1 if sign == PLUS else -1)
    if not family.admits_defect(want):
        return []
    return [s for s in enumerate_symbols(target_rank, family) if in_B(lam, s, sign)]


# ---------------------------------------------------------------------------
# Closed-form first occurrence for unipotent symbols
# ---------------------------------------------------------------------------


class ThetaDirection(Enum):
    SP_TO_O = "sp-to-o"
    O_TO_SP = "o-to-sp"


def first_occurrence_unipotent(
    lam: Symbol, sign: Sign, direction: ThetaDirection
) -> FirstOccurrence:
    """Closed-form first-occurrence index and lift for a unipotent symbol.

    Writing (up, lo) for the staircase-free rows of the source and d for
    its defect:

    * symplectic source, plus tower: index n - up_1 - (d-1)/2, lift rows
      (lo ; up minus its first part), lift defect -d + 1;
    * symplectic source, minus tower: index n - lo_1 + (d+1)/2, lift rows
      (lo minus first part ; up), lift defect -d - 1;
    * even orthogonal source (tower sign must match the symbol family):
      plus family: index n - up_1 - d/2, lift (lo ; up minus first part),
      defect -d + 1; minus family: index n - lo_1 + d/2, lift
      (lo minus first part ; up), defect -d - 1.

    The lift is always the unique fiber member at the index, so the result
    is resolved.  No tower-orientation data is needed: for unipotent data
    the two towers have *different* closed forms rather than an unknown
    assignment.
    """
    d = symbol_defect(lam)
    n = symbol_rank(lam)
    up, lo = upsilon(lam)
    up1 = up[0] if up else 0
    lo1 = lo[0] if lo else 0
    if direction is ThetaDirection.SP_TO_O:
        if d % 4 != 1:
            raise DefectClassMismatch(f"defect {d} not = 1 mod 4 for a symplectic symbol")
        if sign == PLUS:
            index = n - up1 - (d - 1) // 2
            lift = upsilon_inverse(Bipartition(lo, up[1:]), -d + 1)
        else:
            index = n - lo1 + (d + 1) // 2
            lift = upsilon_inverse(Bipartition(lo[1:], up), -d - 1)
        return FirstOccurrence(index, lift)
    if d % 2 != 0:
        raise DefectClassMismatch(f"defect {d} must be even for an orthogonal symbol")
    if sign_pow(d // 2) != sign:
        raise DefectClassMismatch(
            f"symbol of defect {d} lives on the o{format_sign(sign_pow(d // 2))} tower, "
            f"not o{format_sign(sign)}"
        )
    if sign == PLUS:
        index = n - up1 - d // 2
        lift = upsilon_inverse(Bipartition(lo, up[1:]), -d + 1)
    else:
        index = n - lo1 + d // 2
        lift = upsilon_inverse(Bipartition(lo[1:], up), -d - 1)
    return FirstOccurrence(index, lift)


class CuspidalThetaVariant(Enum):
    DOWN = "down"
    UP = "up"


def cuspidal_theta(k: int, variant: CuspidalThetaVariant) -> tuple[Symbol, Symbol, Sign]:
    """The cuspidal chain: rank k(k+1) symplectic cuspidal paired down/up.

    DOWN pairs it with the even orthogonal cuspidal of rank k^2 on the tower
    of sign (-1)^k; UP with the rank (k+1)^2 cuspidal on the tower of sign
    (-1)^(k+1).  Returns (symplectic symbol, orthogonal symbol, tower sign).
    """
    sp_symbol = cuspidal_symbol(CuspidalKind.SP, k)
    if variant is CuspidalThetaVariant.DOWN:
        stair = cuspidal_symbol(CuspidalKind.O_EVEN, k)
        o_symbol = symbol_transpose(stair) if k % 2 == 0 else stair
        return sp_symbol, o_symbol, sign_pow(k)
    stair = cuspidal_symbol(CuspidalKind.O_EVEN, k + 1)
    o_symbol = symbol_transpose(stair) if k % 2 == 0 else stair
    return sp_symbol, o_symbol, sign_pow(k + 1)


# ---------------------------------------------------------------------------
# First occurrence for supported labels
# ---------------------------------------------------------------------------


def _require_cuspidal_slots(label: RepLabel) -> KH:
    fam = label.group.family
    slot1 = (
        SymbolFamily.SP_UNIPOTENT
        if fam in (GroupFamily.SP, GroupFamily.O_ODD)
        else SymbolFamily.O_EVEN_PLUS
        if symbol_defect(label.lam) % 4 == 0
        else SymbolFamily.O_EVEN_MINUS
    )
    slot2 = (
        SymbolFamily.SP_UNIPOTENT
        if fam is GroupFamily.O_ODD
        else SymbolFamily.O_EVEN_PLUS
        if symbol_defect(label.lam_prime) % 4 == 0
        else SymbolFamily.O_EVEN_MINUS
    )
    if not (
        is_unipotent_cuspidal(label.lam, slot1)
        and is_unipotent_cuspidal(label.lam_prime, slot2)
    ):
        raise NotCuspidalSupport(
            f"label {label} does not have cuspidal staircase symbols"
        )
    return kh_of(label)


def support_label(label: RepLabel) -> RepLabel:
    """Replace both symbols by the cuspidal staircases of the same defects.

    The result is the supported label through which first-occurrence
    distances of the original are computed; the descriptor is carried along
    untouched.
    """
    lam_c = cuspidal_symbol_with_defect(symbol_defect(label.lam))
    lam_pc = cuspidal_symbol_with_defect(symbol_defect(label.lam_prime))
    rank = label.rho.glu_rank + symbol_rank(lam_c) + symbol_rank(lam_pc)
    return RepLabel(
        replace(label.group, rank=rank), label.rho, lam_c, lam_pc, label.eps_flag
    )


def default_orientation(label: RepLabel, eps_minus_one: Sign) -> tuple[Sign | None, Sign | None]:
    """(primary, secondary) orientation bits derivable from the cuspidal chain.

    Only labels with trivial descriptor and unipotent cuspidal support get
    defaults:

    * symplectic, h = 0: the chain puts the small even-tower occurrence on
      the tower of sign (-1)^k; the odd-tower bit is degenerate;
    * even orthogonal, h = 0: the label occurs small exactly when the sign
      of k agrees with (-1)^|k| (the defect of the small-occurring cuspidal
      staircase); the swapped-slot bit is degenerate;
    * everything else (odd orthogonal sign pairs, swapped-slot data, theta
      shapes with h != 0, nontrivial descriptors): no default.
    """
    if not label.rho.is_trivial:
        return (None, None)
    k, h = kh_of(label)
    fam = label.group.family
    if fam is GroupFamily.SP and h == 0:
        return (sign_pow(k), None)
    if fam is GroupFamily.O_EVEN and h == 0:
        if k == 0:
            return (None, None)
        sign_of_k = PLUS if k > 0 else MINUS
        return (PLUS if sign_of_k == sign_pow(abs(k)) else MINUS, None)
    return (None, None)


def first_occurrence_supported(label: RepLabel, ctx: TowerContext) -> FirstOccurrence:
    """First occurrence of a label supported on cuspidal symbol pairs.

    The case table, with n the label's group rank and (k, h) its support
    coordinates:

    * symplectic label, even orthogonal towers: indices {n - k, n + k + 1};
      the small branch lifts to support coordinates (k, h) (slot signs not
      determined by the table);
    * symplectic label, odd orthogonal towers: indices {n - |h|, n + |h|};
      the small branch lifts to (|h| - 1, k), clipped at 0 when h = 0;
    * even orthogonal label, symplectic tower: indices n -+ |k|; small
      branch lifts to (|k| - 1 clipped, h), large branch to (|k|, h);
    * odd orthogonal label, symplectic tower: indices n - k (lift (h, k))
      and n + k + 1 (lift (h, k + 1)).

    ``ctx.tower`` selects the tower; ``ctx.orient_left`` (with the derived
    default as fallback) selects the branch.  With no orientation available
    the small branch is returned and ``resolved`` is False unless the two
    branches coincide.
    """
    if ctx.tower is None:
        raise CaseMismatch("TowerContext.tower must name the target tower")
    k, h = _require_cuspidal_slots(label)
    n = label.group.rank
    fam = label.group.family
    orientation = ctx.orient_left
    if orientation is None:
        orientation = default_orientation(label, ctx.eps_minus_one)[0]

    if fam is GroupFamily.SP and ctx.tower.is_even_orthogonal:
        small, large = n - k, n + k + 1
        small_lift, large_lift = KH(abs(k), abs(h)), None
        branch_known = orientation is not None
        want_small = branch_known and orientation == ctx.tower.sign
    elif fam is GroupFamily.SP and ctx.tower.is_odd_orthogonal:
        small, large = n - abs(h), n + abs(h)
        small_lift, large_lift = KH(max(abs(h) - 1, 0), k), None
        branch_known = orientation is not None
        want_small = branch_known and orientation == ctx.tower.sign
    elif fam is GroupFamily.O_EVEN and ctx.tower is Tower.SP:
        small, large = n - abs(k), n + abs(k)
        small_lift, large_lift = KH(max(abs(k) - 1, 0), h), KH(abs(k), h)
        branch_known = orientation is not None
        want_small = branch_known and orientation == PLUS
    elif fam is GroupFamily.O_ODD and ctx.tower is Tower.SP:
        small, large = n - k, n + k + 1
        small_lift, large_lift = KH(h, k), KH(h, k + 1)
        branch_known = orientation is not None
        want_small = branch_known and orientation == PLUS
    else:
        raise CaseMismatch(
            f"no theta pairing from {label.group} into the {ctx.tower.value} tower"
        )

    if small == large:
        return FirstOccurrence(small, small_lift, resolved=True)
    if branch_known:
        if want_small:
            return FirstOccurrence(small, small_lift, resolved=True)
        return FirstOccurrence(large, large_lift, resolved=True)
    return FirstOccurrence(small, small_lift, resolved=False)
