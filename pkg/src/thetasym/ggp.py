"""Branching multiplicities for symplectic and orthogonal pairs.

Two restriction problems are covered: the Fourier-Jacobi case (two
symplectic labels, paired through an oscillator-representation twist) and
the Bessel case (one odd and one even orthogonal label).  The multiplicity
of a pair factors through three gates and a base factor:

1. *Relevance bands.*  The first-occurrence distances of the two cuspidal
   supports must agree up to the shift built into the restriction: for
   Fourier-Jacobi, k on one side must lie in {|h'|, |h'| - 1} of the other
   (and symmetrically); for Bessel the slot parameters pair up straight,
   |k'| in {k, k + 1} and |h'| in {h, h + 1}.
2. *Tower match.*  On top of the bands, the small-occurrence branches must
   sit on matching towers.  Which tower carries the small branch is data
   (it depends on the additive character), carried by orientation bits in
   the :class:`~thetasym.theta.TowerContext` and derived from the cuspidal
   chain when the support is unipotent cuspidal with trivial descriptor.
   A needed bit that is neither supplied nor derivable makes the result
   ``Undetermined`` rather than a guess.
3. *Pair-condition gate.*  Some symbol of the transpose pair of each varied
   slot must combine with the fixed slot into one of the four branching
   sets (:func:`~thetasym.theta.in_G`).

The base factor is the multiplicity of the general-linear parts: 1 when a
side is trivial and the other is trivial or regular, 1 for two regular
descriptors with disjoint eigenvalue data (asserted by the caller, default
true), and a symbolic value otherwise - evaluating it in general is out of
scope here.  When a unipotent label restricts against a general one, the
unipotent side additionally forces the opposite slot symbol to be regular
(metadata, with a documented default convention).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable

from .catalog import (
    KH,
    PLUS,
    GroupFamily,
    GroupTag,
    RepLabel,
    RhoDescriptor,
    Sign,
    TRIVIAL_RHO,
    enumerate_labels,
    is_unipotent_label,
    kh_of,
    symbol_regular_by_convention,
)
from .core import Symbol, symbol_defect, symbol_transpose
from .errors import CaseMismatch, MultipleNonzero, NotUnipotent, RankMismatch, RankOrder
from .theta import TowerContext, default_orientation, in_G

RegularPredicate = Callable[[Symbol], bool]
OrientationResolver = Callable[[RepLabel], tuple[Sign | None, Sign | None]]


class GGPKind(Enum):
    BESSEL = "bessel"
    FOURIER_JACOBI = "fourier-jacobi"


@dataclass(frozen=True)
class GGPCase:
    """Which restriction problem, plus the oscillator twist for Fourier-Jacobi.

    ``eps_zero`` defaults to the square class of -1 from the evaluation
    context, which is the twist appearing in the restriction pairing.
    """

    kind: GGPKind
    eps_zero: Sign | None = None


BESSEL = GGPCase(GGPKind.BESSEL)
FOURIER_JACOBI = GGPCase(GGPKind.FOURIER_JACOBI)


@dataclass(frozen=True)
class Undetermined:
    """Marker for answers that hinge on absent orientation data."""

    reason: str


class MultKind(Enum):
    ZERO = "zero"
    ONE = "one"
    SYMBOLIC = "symbolic-base"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Multiplicity:
    """Zero, One, a symbolic base factor, or an undetermined marker.

    The symbolic value stands for the unevaluated pairing of the two
    general-linear descriptors; it does not depend on the additive
    character, which ``psi_independent`` records as metadata.
    """

    kind: MultKind
    rho_left: RhoDescriptor | None = None
    rho_right: RhoDescriptor | None = None
    reason: str | None = None
    psi_independent: bool = True

    @staticmethod
    def zero() -> "Multiplicity":
        return Multiplicity(MultKind.ZERO)

    @staticmethod
    def one() -> "Multiplicity":
        return Multiplicity(MultKind.ONE)

    @staticmethod
    def symbolic(rho_left: RhoDescriptor, rho_right: RhoDescriptor) -> "Multiplicity":
        return Multiplicity(MultKind.SYMBOLIC, rho_left, rho_right)

    @staticmethod
    def undetermined(reason: str) -> "Multiplicity":
        return Multiplicity(MultKind.UNDETERMINED, reason=reason)

    @property
    def is_zero(self) -> bool:
        return self.kind is MultKind.ZERO

    @property
    def is_one(self) -> bool:
        return self.kind is MultKind.ONE

    @property
    def is_nonzero(self) -> bool:
        return self.kind in (MultKind.ONE, MultKind.SYMBOLIC)

    @property
    def is_undetermined(self) -> bool:
        return self.kind is MultKind.UNDETERMINED

    def __str__(self):
        if self.kind is MultKind.ZERO:
            return "0"
        if self.kind is MultKind.ONE:
            return "1"
        if self.kind is MultKind.SYMBOLIC:
            return f"m({self.rho_left.id},{self.rho_right.id})"
        return f"undetermined({self.reason})"


# ---------------------------------------------------------------------------
# Relevance
# ---------------------------------------------------------------------------


def relevance_necessary(kh_left: KH, kh_right: KH, case: GGPCase) -> bool:
    """Orientation-free necessary bands for nonzero multiplicity.

    Fourier-Jacobi pairs cross the slots: k against |h'| and k' against |h|.
    Bessel pairs them straight, with the odd orthogonal side on the left:
    |k'| in {k, k + 1} and |h'| in {h, h + 1}.
    """
    if case.kind is GGPKind.FOURIER_JACOBI:
        return kh_left.k in (abs(kh_right.h), abs(kh_right.h) - 1) and kh_right.k in (
            abs(kh_left.h),
            abs(kh_left.h) - 1,
        )
    return abs(kh_right.k) in (kh_left.k, kh_left.k + 1) and abs(kh_right.h) in (
        kh_left.h,
        kh_left.h + 1,
    )


def _tri_and(a: bool | None, b: bool | None) -> bool | None:
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def _one_sided(dist: int, other: int, match: bool | None) -> bool | None:
    """One relevance condition: distance band plus tower match.

    ``dist`` is the small-branch distance of the picked side (>= 0),
    ``other`` the absolute slot parameter of the opposing side, ``match``
    whether the opposing small branch sits on the matching tower (None when
    unknown).  With ``other`` = 0 the opposing branches coincide and no
    match bit is needed.
    """
    if other == 0:
        return dist == 0
    if dist not in (other - 1, other):
        return False
    return match


def _match_bit(a: Sign | None, b: Sign | None, twist: Sign = PLUS) -> bool | None:
    if a is None or b is None:
        return None
    return a * twist == b


Bits = tuple[Sign | None, Sign | None]


def _resolve_bits(
    label: RepLabel,
    supplied: Bits,
    ctx: TowerContext,
    resolver: OrientationResolver | None,
) -> Bits:
    primary, secondary = supplied
    if resolver is not None and (primary is None or secondary is None):
        rp, rs = resolver(label)
        primary = primary if primary is not None else rp
        secondary = secondary if secondary is not None else rs
    dp, ds = default_orientation(label, ctx.eps_minus_one)
    return (
        primary if primary is not None else dp,
        secondary if secondary is not None else ds,
    )


def _strong_relevance(
    left: RepLabel,
    right: RepLabel,
    bits_left: Bits,
    bits_right: Bits,
    kind: GGPKind,
    eps_zero: Sign,
    eps_minus_one: Sign,
) -> bool | None:
    kl, hl = kh_of(left)
    kr, hr = kh_of(right)
    if kind is GGPKind.FOURIER_JACOBI:
        c1 = _one_sided(kl, abs(hr), _match_bit(bits_left[0], bits_right[1], eps_zero))
        c2 = _one_sided(
            kr, abs(hl), _match_bit(bits_right[0], bits_left[1], eps_minus_one * eps_zero)
        )
    else:
        c1 = _one_sided(kl, abs(kr), _match_bit(bits_left[0], bits_right[0]))
        c2 = _one_sided(hl, abs(hr), _match_bit(bits_left[1], bits_right[1]))
    return _tri_and(c1, c2)


def _label_key(label: RepLabel):
    return (
        label.group.family.value,
        label.group.rank,
        label.group.sign or 0,
        label.rho,
        label.lam.row_a,
        label.lam.row_b,
        label.lam_prime.row_a,
        label.lam_prime.row_b,
        label.eps_flag or 0,
    )


def _validate_pair(left: RepLabel, right: RepLabel, case: GGPCase) -> bool:
    """Whether the pair must be swapped into normalized order.

    For Fourier-Jacobi the larger rank goes first (canonical key at ties);
    for Bessel the odd orthogonal label goes first.
    """
    fl, fr = left.group.family, right.group.family
    if case.kind is GGPKind.FOURIER_JACOBI:
        if fl is not GroupFamily.SP or fr is not GroupFamily.SP:
            raise CaseMismatch("Fourier-Jacobi needs two symplectic labels")
        if left.group.rank != right.group.rank:
            return left.group.rank < right.group.rank
        return _label_key(left) > _label_key(right)
    if {fl, fr} != {GroupFamily.O_ODD, GroupFamily.O_EVEN}:
        raise CaseMismatch("Bessel needs one odd and one even orthogonal label")
    return fl is GroupFamily.O_EVEN


def is_strongly_relevant(
    left: RepLabel,
    right: RepLabel,
    case: GGPCase,
    ctx: TowerContext,
    orientation_resolver: OrientationResolver | None = None,
) -> bool | Undetermined:
    """Two-sided relevance of the pair's cuspidal supports.

    False is definitive; ``Undetermined`` means the bands hold but a needed
    tower-orientation bit is absent.  Implied by (and implying nothing
    beyond) the distance comparison of the supports' first occurrences.
    """
    swap = _validate_pair(left, right, case)
    bits_left: Bits = (ctx.orient_left, ctx.orient_left_alt)
    bits_right: Bits = (ctx.orient_right, ctx.orient_right_alt)
    if swap:
        left, right = right, left
        bits_left, bits_right = bits_right, bits_left
    eps_zero = case.eps_zero if case.eps_zero is not None else ctx.eps_minus_one
    result = _strong_relevance(
        left,
        right,
        _resolve_bits(left, bits_left, ctx, orientation_resolver),
        _resolve_bits(right, bits_right, ctx, orientation_resolver),
        case.kind,
        eps_zero,
        ctx.eps_minus_one,
    )
    if result is None:
        return Undetermined("orientation")
    return result


# ---------------------------------------------------------------------------
# Pair-condition gate and base factor
# ---------------------------------------------------------------------------


def _g_gate(first: Symbol, varied: Symbol) -> bool:
    """Whether some transpose of ``varied`` combines with ``first``."""
    return any(
        in_G(first, t) is not None for t in {varied, symbol_transpose(varied)}
    )


def _pair_gate(left: RepLabel, right: RepLabel, kind: GGPKind) -> bool:
    if kind is GGPKind.FOURIER_JACOBI:
        return _g_gate(left.lam, right.lam_prime) and _g_gate(right.lam, left.lam_prime)
    return _g_gate(left.lam, right.lam) and _g_gate(left.lam_prime, right.lam_prime)


def _base_multiplicity(
    left: RepLabel, right: RepLabel, rho_disjoint: bool
) -> Multiplicity:
    rl, rr = left.rho, right.rho
    if rl.is_trivial and rr.is_trivial:
        return Multiplicity.one()
    if rl.is_trivial:
        return Multiplicity.one() if rr.regular else Multiplicity.zero()
    if rr.is_trivial:
        return Multiplicity.one() if rl.regular else Multiplicity.zero()
    if rl.regular and rr.regular and rho_disjoint:
        return Multiplicity.one()
    return Multiplicity.symbolic(rl, rr)


def _unipotent_slot_gates(
    left: RepLabel, right: RepLabel, kind: GGPKind, regular: RegularPredicate
) -> bool:
    """Regularity forced on the opposite slot by a unipotent side.

    Applied when the unipotent side is at least as large as the other (the
    regime in which the restriction is stated); at equal size both
    directions are enforced, which keeps the evaluation symmetric.
    """
    checks: list[Symbol] = []
    if kind is GGPKind.FOURIER_JACOBI:
        if is_unipotent_label(left) and left.group.rank >= right.group.rank:
            checks.append(right.lam)
        if is_unipotent_label(right) and right.group.rank >= left.group.rank:
            checks.append(left.lam)
    else:
        if is_unipotent_label(left) and left.group.dimension >= right.group.dimension:
            checks.append(right.lam_prime)
    return all(regular(s) for s in checks)


def ggp_multiplicity(
    left: RepLabel,
    right: RepLabel,
    case: GGPCase,
    ctx: TowerContext,
    regular: RegularPredicate = symbol_regular_by_convention,
    rho_disjoint: bool = True,
    orientation_resolver: OrientationResolver | None = None,
    symmetrize: bool = True,
) -> Multiplicity:
    """Multiplicity of the pair under the restriction named by ``case``.

    The pair is normalized internally (larger rank first for Fourier-Jacobi,
    odd orthogonal first for Bessel) so that evaluating with swapped
    arguments returns the same value; pass ``symmetrize=False`` to insist on
    the normalized order and get :class:`RankOrder` otherwise.

    Gate order: the necessary bands, then two-sided relevance, then the
    pair-condition gate - a definite failure anywhere gives Zero, and only
    then does an open orientation surface as Undetermined.  Afterwards the
    base factor and the unipotent-side regularity gates decide between One,
    Zero and a symbolic base.
    """
    swap = _validate_pair(left, right, case)
    bits_left: Bits = (ctx.orient_left, ctx.orient_left_alt)
    bits_right: Bits = (ctx.orient_right, ctx.orient_right_alt)
    if swap:
        if not symmetrize and case.kind is GGPKind.FOURIER_JACOBI and (
            left.group.rank < right.group.rank
        ):
            raise RankOrder("left label has smaller rank; pass symmetrize=True")
        left, right = right, left
        bits_left, bits_right = bits_right, bits_left
    eps_zero = case.eps_zero if case.eps_zero is not None else ctx.eps_minus_one

    if not relevance_necessary(kh_of(left), kh_of(right), case):
        return Multiplicity.zero()
    strong = _strong_relevance(
        left,
        right,
        _resolve_bits(left, bits_left, ctx, orientation_resolver),
        _resolve_bits(right, bits_right, ctx, orientation_resolver),
        case.kind,
        eps_zero,
        ctx.eps_minus_one,
    )
    if strong is False:
        return Multiplicity.zero()
    if not _pair_gate(left, right, case.kind):
        return Multiplicity.zero()
    if strong is None:
        return Multiplicity.undetermined("orientation")
    base = _base_multiplicity(left, right, rho_disjoint)
    if base.is_zero:
        return base
    if not _unipotent_slot_gates(left, right, case.kind, regular):
        return Multiplicity.zero()
    return base


# ---------------------------------------------------------------------------
# Variant selection
# ---------------------------------------------------------------------------


def _transpose_slot(label: RepLabel, slot: str) -> RepLabel:
    if slot == "lam":
        return replace(label, lam=symbol_transpose(label.lam))
    return replace(label, lam_prime=symbol_transpose(label.lam_prime))


def _flip(bits: Bits, primary: bool, secondary: bool) -> Bits:
    p, s = bits
    if primary and p is not None:
        p = -p
    if secondary and s is not None:
        s = -s
    return (p, s)


def _variant_class_key(label: RepLabel, varied_slots: Iterable[str]):
    """Collapse transpose variants of defect-0 slots.

    A defect-0 slot and its transpose pass exactly the same gates (the band
    uses the absolute slot parameter and the pair condition searches both
    transposes), so the selection statements treat them as one variant.
    """
    parts = []
    for slot in ("lam", "lam_prime"):
        s = getattr(label, slot)
        if slot in varied_slots and symbol_defect(s) == 0:
            parts.append(min((s.row_a, s.row_b), (s.row_b, s.row_a)))
        else:
            parts.append((s.row_a, s.row_b))
    return tuple(parts)


@dataclass(frozen=True)
class VariantReport:
    """Evaluation of a transpose-variant family.

    ``entries`` holds every (left, right, multiplicity) triple in family
    order; ``nonzero`` the entries with definite nonzero multiplicity;
    ``undetermined`` the orientation-blocked ones.  ``selected`` is the
    unique nonzero entry when there is one.
    """

    entries: tuple[tuple[RepLabel, RepLabel, Multiplicity], ...]
    nonzero: tuple[tuple[RepLabel, RepLabel, Multiplicity], ...]
    undetermined: tuple[tuple[RepLabel, RepLabel, Multiplicity], ...]

    @property
    def selected(self) -> tuple[RepLabel, RepLabel, Multiplicity] | None:
        return self.nonzero[0] if self.nonzero else None


def select_nonzero_variant(
    left: RepLabel,
    right: RepLabel,
    case: GGPCase,
    ctx: TowerContext,
    regular: RegularPredicate = symbol_regular_by_convention,
    rho_disjoint: bool = True,
) -> VariantReport:
    """Evaluate the transpose-variant family and check the selection shape.

    Fourier-Jacobi varies the second slot on both sides (four pairs);
    Bessel varies both slots of the even orthogonal label (four pairs, the
    odd label fixed).  At most one variant class may come out nonzero;
    more than one raises :class:`MultipleNonzero`, which would be an
    implementation bug, not a data condition.
    """
    for rho in (left.rho, right.rho):
        if not (rho.is_trivial or rho.regular):
            raise ValueError(
                "variant selection expects a definite base factor "
                "(trivial or regular descriptors)"
            )
    base_bits_left: Bits = (ctx.orient_left, ctx.orient_left_alt)
    base_bits_right: Bits = (ctx.orient_right, ctx.orient_right_alt)

    if case.kind is GGPKind.FOURIER_JACOBI:
        left_variants = [
            (left, base_bits_left, ()),
            (_transpose_slot(left, "lam_prime"), _flip(base_bits_left, False, True), ("lam_prime",)),
        ]
        right_variants = [
            (right, base_bits_right, ()),
            (_transpose_slot(right, "lam_prime"), _flip(base_bits_right, False, True), ("lam_prime",)),
        ]
        pairs = [
            (lv, rv) for lv in left_variants for rv in right_variants
        ]
        varied = ("lam_prime",)
        varied_left = True
    else:
        swap_roles = left.group.family is GroupFamily.O_EVEN
        odd, odd_bits = (right, base_bits_right) if swap_roles else (left, base_bits_left)
        even, even_bits = (left, base_bits_left) if swap_roles else (right, base_bits_right)
        even_variants = [
            (even, even_bits, ()),
            (_transpose_slot(even, "lam"), _flip(even_bits, True, False), ("lam",)),
            (_transpose_slot(even, "lam_prime"), _flip(even_bits, False, True), ("lam_prime",)),
            (
                _transpose_slot(_transpose_slot(even, "lam"), "lam_prime"),
                _flip(even_bits, True, True),
                ("lam", "lam_prime"),
            ),
        ]
        pairs = [((odd, odd_bits, ()), ev) for ev in even_variants]
        varied = ("lam", "lam_prime")
        varied_left = False

    entries = []
    seen = set()
    for (lv, lbits, _), (rv, rbits, _) in pairs:
        if (lv, rv) in seen:
            continue
        seen.add((lv, rv))
        sub_ctx = replace(
            ctx,
            orient_left=lbits[0],
            orient_left_alt=lbits[1],
            orient_right=rbits[0],
            orient_right_alt=rbits[1],
        )
        value = ggp_multiplicity(
            lv, rv, case, sub_ctx, regular=regular, rho_disjoint=rho_disjoint
        )
        entries.append((lv, rv, value))

    nonzero = tuple(e for e in entries if e[2].is_nonzero)
    undetermined = tuple(e for e in entries if e[2].is_undetermined)

    classes = {}
    for lv, rv, value in entries:
        if not value.is_nonzero:
            continue
        left_key = _variant_class_key(lv, varied if varied_left else ())
        right_key = _variant_class_key(rv, varied)
        classes.setdefault((left_key, right_key), []).append(value)
    if len(classes) > 1:
        raise MultipleNonzero(
            f"{len(classes)} variant classes nonzero for {left} / {right}"
        )
    for values in classes.values():
        if any(v != values[0] for v in values):
            raise MultipleNonzero("variant class with inconsistent values")
    return VariantReport(tuple(entries), nonzero, undetermined)


# ---------------------------------------------------------------------------
# Branching decompositions
# ---------------------------------------------------------------------------


def default_rho_catalog(max_rank: int) -> tuple[RhoDescriptor, ...]:
    """One regular descriptor per residual rank, plus the trivial one."""
    return (TRIVIAL_RHO,) + tuple(
        RhoDescriptor(r, True, f"regular-{r}") for r in range(1, max_rank + 1)
    )


def branch_decomposition(
    pi: RepLabel,
    target: GroupTag,
    ctx: TowerContext,
    rho_catalog: Iterable[RhoDescriptor] | None = None,
    regular: RegularPredicate = symbol_regular_by_convention,
) -> list[tuple[RepLabel, Multiplicity]]:
    """Constituents of a unipotent label's restriction to the target group.

    Two shapes are supported, both at equal rank parameter: a symplectic
    label against symplectic candidates (restriction through the oscillator
    twist) and an odd orthogonal label against even orthogonal candidates.
    Candidates run over all labels of the target built from the descriptor
    catalog (default: one regular descriptor per residual rank); rows whose
    multiplicity is definitely zero are dropped, and orientation-blocked
    rows are kept as undetermined rather than silently discarded.

    Output order: first-slot defect, second-slot defect, rows, descriptor
    id, sign flag.
    """
    if not is_unipotent_label(pi):
        raise NotUnipotent(f"{pi} is not a unipotent label")
    src = pi.group.family
    if src is GroupFamily.SP and target.family is GroupFamily.SP:
        case = FOURIER_JACOBI
    elif src is GroupFamily.O_ODD and target.family is GroupFamily.O_EVEN:
        case = BESSEL
    else:
        raise CaseMismatch(
            f"no branching rule from {pi.group} to {target}; expected a "
            "symplectic or odd-orthogonal-to-even restriction"
        )
    if target.rank != pi.group.rank:
        raise RankMismatch(
            f"target rank {target.rank} != source rank parameter {pi.group.rank}"
        )
    catalog = (
        tuple(rho_catalog)
        if rho_catalog is not None
        else default_rho_catalog(target.rank)
    )
    rows = []
    for candidate in enumerate_labels(target, ctx.eps_minus_one, catalog):
        value = ggp_multiplicity(pi, candidate, case, ctx, regular=regular)
        if value.is_zero:
            continue
        rows.append((candidate, value))
    rows.sort(
        key=lambda row: (
            symbol_defect(row[0].lam),
            symbol_defect(row[0].lam_prime),
            row[0].lam.row_a,
            row[0].lam.row_b,
            row[0].lam_prime.row_a,
            row[0].lam_prime.row_b,
            row[0].rho.id,
            row[0].eps_flag or 0,
        )
    )
    return rows
