"""Representation labels for finite symplectic and orthogonal groups.

An irreducible representation in a quadratic Lusztig series is recorded here
as a *label*: the ambient group, an opaque descriptor for the product of
general-linear/unitary factors (only its rank and a regularity flag ever
enter a computation), a pair of symbols filling the two classical slots, and
a sign for odd orthogonal groups.  Validity rules:

* symplectic groups: first symbol has defect = 1 mod 4, second symbol has
  even defect;
* odd orthogonal groups: both defects = 1 mod 4, plus a +/- flag;
* even orthogonal groups: both defects even, and the product of the slot
  signs (-1)^(def/2) must equal eps_{-1} * eps of the group, where eps_{-1}
  is the square class of -1 (+ iff q = 1 mod 4).

The slot ranks plus the descriptor rank must add up to the group rank.

From the defects one reads off the pair (k, h) indexing the cuspidal
support: (|def|-1)/2 on defect = 1 mod 4 slots (always >= 0) and the signed
def/2 on even slots.  Parabolic induction preserves defects, so (k, h) of a
label and of its cuspidal support agree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, NamedTuple

from .core import (
    EMPTY_SYMBOL,
    ZERO_SYMBOL,
    Symbol,
    SymbolFamily,
    enumerate_symbols,
    format_symbol,
    parse_symbol,
    symbol_defect,
    symbol_rank,
    symbol_transpose,
    upsilon,
)
from .errors import (
    DefectClassMismatch,
    InapplicableTwist,
    ParseError,
    RankOverflow,
    SignMismatch,
)

Sign = int  # +1 or -1

PLUS: Sign = 1
MINUS: Sign = -1


def format_sign(s: Sign) -> str:
    return "+" if s > 0 else "-"


def parse_sign(text: str) -> Sign:
    if text == "+":
        return PLUS
    if text == "-":
        return MINUS
    raise ValueError(f"bad sign {text!r}")


def eps_minus_one_from_q(q: int) -> Sign:
    """Square class of -1 in F_q: + iff q = 1 mod 4."""
    if q % 2 == 0 or q < 3:
        raise ValueError(f"q must be an odd prime power > 2, got {q}")
    return PLUS if q % 4 == 1 else MINUS


def sign_pow(n: int) -> Sign:
    """(-1)**n as a Sign, safe for negative n."""
    return MINUS if n % 2 else PLUS


class GroupFamily(Enum):
    SP = "sp"
    O_EVEN = "o_even"
    O_ODD = "o_odd"


@dataclass(frozen=True, order=True)
class GroupTag:
    """Sp(2n), O^eps(2n) or O^eps(2n+1); ``rank`` is n throughout."""

    family: GroupFamily
    rank: int
    sign: Sign | None = None

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("group rank must be nonnegative")
        if self.family is GroupFamily.SP and self.sign is not None:
            raise ValueError("symplectic groups carry no sign")
        if self.family is not GroupFamily.SP and self.sign not in (PLUS, MINUS):
            raise ValueError("orthogonal groups need a sign")

    @property
    def dimension(self) -> int:
        if self.family is GroupFamily.O_ODD:
            return 2 * self.rank + 1
        return 2 * self.rank

    def __str__(self):
        if self.family is GroupFamily.SP:
            return f"sp({self.dimension})"
        return f"o{format_sign(self.sign)}({self.dimension})"


def sp(rank: int) -> GroupTag:
    return GroupTag(GroupFamily.SP, rank)


def o_even(rank: int, sign: Sign) -> GroupTag:
    return GroupTag(GroupFamily.O_EVEN, rank, sign)


def o_odd(rank: int, sign: Sign) -> GroupTag:
    return GroupTag(GroupFamily.O_ODD, rank, sign)


@dataclass(frozen=True, order=True)
class RhoDescriptor:
    """Opaque stand-in for the general-linear/unitary part of a label.

    Only ``glu_rank`` (the rank it consumes) and ``regular`` (whether the
    corresponding representation is regular) take part in computations; the
    id is for display and equality.  Rank 0 forces the trivial descriptor.
    """

    glu_rank: int = 0
    regular: bool = True
    id: str = "trivial"

    def __post_init__(self):
        if self.glu_rank < 0:
            raise ValueError("descriptor rank must be nonnegative")
        if self.glu_rank == 0 and (self.id != "trivial" or not self.regular):
            raise ValueError("rank-0 descriptor must be trivial and regular")
        if any(c in self.id for c in ":;|"):
            raise ValueError(f"descriptor id {self.id!r} contains reserved characters")

    @property
    def is_trivial(self) -> bool:
        return self.glu_rank == 0


TRIVIAL_RHO = RhoDescriptor()


class KH(NamedTuple):
    """Cuspidal-support coordinates read off the two slot defects."""

    k: int
    h: int


@dataclass(frozen=True)
class RepLabel:
    group: GroupTag
    rho: RhoDescriptor
    lam: Symbol
    lam_prime: Symbol
    eps_flag: Sign | None = None

    def __str__(self):
        return format_label(self)


def _slot_families(family: GroupFamily) -> tuple[int, int]:
    """Allowed defect residues (mod 4 for odd-type, mod 2 for even-type)."""
    if family is GroupFamily.SP:
        return (1, 0)  # def(lam) = 1 mod 4, def(lam') even
    if family is GroupFamily.O_ODD:
        return (1, 1)
    return (0, 0)  # even orthogonal: both even


def make_label(
    group: GroupTag,
    rho: RhoDescriptor,
    lam: Symbol,
    lam_prime: Symbol,
    eps_flag: Sign | None = None,
    eps_minus_one: Sign = PLUS,
) -> RepLabel:
    """Validate and build a label; see the module docstring for the rules."""
    kind, kind2 = _slot_families(group.family)
    d1, d2 = symbol_defect(lam), symbol_defect(lam_prime)
    if kind == 1 and d1 % 4 != 1:
        raise DefectClassMismatch(
            f"first symbol defect {d1} not = 1 mod 4 for {group}"
        )
    if kind == 0 and d1 % 2 != 0:
        raise DefectClassMismatch(f"first symbol defect {d1} must be even for {group}")
    if kind2 == 1 and d2 % 4 != 1:
        raise DefectClassMismatch(
            f"second symbol defect {d2} not = 1 mod 4 for {group}"
        )
    if kind2 == 0 and d2 % 2 != 0:
        raise DefectClassMismatch(f"second symbol defect {d2} must be even for {group}")
    total = rho.glu_rank + symbol_rank(lam) + symbol_rank(lam_prime)
    if total != group.rank:
        raise RankOverflow(
            f"component ranks {rho.glu_rank}+{symbol_rank(lam)}"
            f"+{symbol_rank(lam_prime)} != group rank {group.rank}"
        )
    if group.family is GroupFamily.O_ODD:
        if eps_flag not in (PLUS, MINUS):
            raise SignMismatch("odd orthogonal labels need an eps flag")
    else:
        if eps_flag is not None:
            raise SignMismatch(f"{group} carries no eps flag")
    if group.family is GroupFamily.O_EVEN:
        part_signs = sign_pow(d1 // 2) * sign_pow(d2 // 2)
        if part_signs != eps_minus_one * group.sign:
            raise SignMismatch(
                f"slot signs {format_sign(part_signs)} != "
                f"eps_minus_one*eps = {format_sign(eps_minus_one * group.sign)}"
            )
    return RepLabel(group, rho, lam, lam_prime, eps_flag)


def _slot_kh(defect: int) -> int:
    if defect % 2 == 1:
        return (abs(defect) - 1) // 2
    return defect // 2


def kh_of(label: RepLabel) -> KH:
    """(k, h) from the slot defects: (|d|-1)/2 on odd slots, signed d/2 on even."""
    return KH(_slot_kh(symbol_defect(label.lam)), _slot_kh(symbol_defect(label.lam_prime)))


def cuspidal_support_kh(label: RepLabel) -> KH:
    """(k, h) of the cuspidal support.

    Identical to :func:`kh_of` because parabolic induction preserves both
    defects; exposed separately so call sites say what they mean.
    """
    return kh_of(label)


# ---------------------------------------------------------------------------
# Cuspidal symbols
# ---------------------------------------------------------------------------


class CuspidalKind(Enum):
    SP = "sp"
    O_EVEN = "o_even"
    O_ODD = "o_odd"


def _staircase(top: int) -> tuple[int, ...]:
    return tuple(range(top, -1, -1)) if top >= 0 else ()


def cuspidal_symbol(kind: CuspidalKind, k: int) -> Symbol:
    """Staircase symbol of the unique unipotent cuspidal representation.

    Symplectic and odd orthogonal: rank k(k+1), staircase 2k..0 in the first
    row for even k and in the second row for odd k (defect (-1)^k(2k+1)).
    Even orthogonal: rank k^2, staircase 2k-1..0 in the first row (defect
    2k); its transpose carries the sign twist of the same group.
    """
    if k < 0:
        raise ValueError("cuspidal index must be nonnegative")
    if kind is CuspidalKind.O_EVEN:
        return Symbol(_staircase(2 * k - 1), ())
    rows = _staircase(2 * k)
    if k % 2 == 0:
        return Symbol(rows, ())
    return Symbol((), rows)


def cuspidal_symbol_with_defect(defect: int) -> Symbol:
    """The cuspidal staircase whose defect is exactly ``defect``.

    For defect = 1 mod 4 this is the symplectic-type staircase; for even
    defects the even-orthogonal staircase or its transpose, matching the
    sign of the defect.  The defect-0 slot has the empty symbol.
    """
    if defect % 2 == 1:
        if defect % 4 != 1:
            raise DefectClassMismatch(f"no cuspidal staircase of defect {defect}")
        k = (abs(defect) - 1) // 2
        return cuspidal_symbol(CuspidalKind.SP, k)
    if defect == 0:
        return EMPTY_SYMBOL
    s = cuspidal_symbol(CuspidalKind.O_EVEN, abs(defect) // 2)
    return s if defect > 0 else symbol_transpose(s)


def is_unipotent_cuspidal(s: Symbol, family: SymbolFamily) -> bool:
    """Whether the symbol is the cuspidal staircase of its defect.

    For even families the transpose of the staircase counts too (the two
    symbols are the sign-twisted pair on the same group).
    """
    d = symbol_defect(s)
    if not family.admits_defect(d):
        raise DefectClassMismatch(f"defect {d} not in class of {family}")
    if family in (SymbolFamily.SP_UNIPOTENT, SymbolFamily.O_ODD):
        k = (abs(d) - 1) // 2
        return s == cuspidal_symbol(CuspidalKind.SP, k)
    k = abs(d) // 2
    stair = cuspidal_symbol(CuspidalKind.O_EVEN, k)
    return s in (stair, symbol_transpose(stair))


# ---------------------------------------------------------------------------
# Twists
# ---------------------------------------------------------------------------


class Twist(Enum):
    SGN = "sgn"
    CHI = "chi"
    CONJ = "conj"


def twist_label(label: RepLabel, twist: Twist) -> RepLabel:
    """Sign, chi and conjugation twists acting on labels.

    * SGN transposes both symbols on even orthogonal groups, flips the eps
      flag on odd orthogonal groups, and is undefined on symplectic groups.
    * CHI swaps the two symbols (orthogonal groups only).
    * CONJ transposes the second symbol (symplectic and even orthogonal).
    All three are involutive.
    """
    fam = label.group.family
    if twist is Twist.SGN:
        if fam is GroupFamily.O_EVEN:
            return replace(
                label,
                lam=symbol_transpose(label.lam),
                lam_prime=symbol_transpose(label.lam_prime),
            )
        if fam is GroupFamily.O_ODD:
            return replace(label, eps_flag=-label.eps_flag)
        raise InapplicableTwist("sgn twist undefined on symplectic groups")
    if twist is Twist.CHI:
        if fam is GroupFamily.SP:
            raise InapplicableTwist("chi twist undefined on symplectic groups")
        return replace(label, lam=label.lam_prime, lam_prime=label.lam)
    if twist is Twist.CONJ:
        if fam is GroupFamily.O_ODD:
            raise InapplicableTwist("conjugation twist undefined on odd orthogonal groups")
        return replace(label, lam_prime=symbol_transpose(label.lam_prime))
    raise ValueError(f"unknown twist {twist}")


# ---------------------------------------------------------------------------
# Unipotent labels, regularity convention
# ---------------------------------------------------------------------------


def empty_second_slot(family: GroupFamily) -> Symbol:
    """The rank-0 symbol filling an unused second slot (defect class aware)."""
    return ZERO_SYMBOL if family is GroupFamily.O_ODD else EMPTY_SYMBOL


def unipotent_label(
    group: GroupTag,
    lam: Symbol,
    eps_flag: Sign | None = None,
    eps_minus_one: Sign = PLUS,
) -> RepLabel:
    """Label of a unipotent representation: trivial descriptor, empty second slot."""
    return make_label(
        group, TRIVIAL_RHO, lam, empty_second_slot(group.family), eps_flag, eps_minus_one
    )


def is_unipotent_label(label: RepLabel) -> bool:
    return (
        label.rho.is_trivial
        and label.lam_prime == empty_second_slot(label.group.family)
    )


def symbol_regular_by_convention(s: Symbol) -> bool:
    """Default regularity marker for unipotent symbols.

    Convention, not a computed fact: rank-0 symbols are regular, and so is
    the defect +-1 symbol whose staircase-free image is a column ([], [1^r])
    or its transpose ([1^r], []).  Callers with better knowledge should pass
    their own predicate to the multiplicity engine.
    """
    if symbol_rank(s) == 0:
        return True
    d = symbol_defect(s)
    if abs(d) != 1:
        return False
    up, lo = upsilon(s)
    if d == 1:
        return not up and all(x == 1 for x in lo)
    return not lo and all(x == 1 for x in up)


# ---------------------------------------------------------------------------
# Enumeration of labels
# ---------------------------------------------------------------------------


def _slot_symbols(kind: int, rank: int) -> list[Symbol]:
    if kind == 1:
        return enumerate_symbols(rank, SymbolFamily.SP_UNIPOTENT)
    return enumerate_symbols(rank, SymbolFamily.O_EVEN_PLUS) + enumerate_symbols(
        rank, SymbolFamily.O_EVEN_MINUS
    )


def enumerate_labels(
    group: GroupTag,
    eps_minus_one: Sign = PLUS,
    rho_catalog: tuple[RhoDescriptor, ...] = (TRIVIAL_RHO,),
) -> Iterator[RepLabel]:
    """All valid labels of the group with descriptors from the catalog.

    Deterministic order: descriptor, then first-slot defect/rows, then
    second-slot defect/rows, then the eps flag.
    """
    kind, kind2 = _slot_families(group.family)
    flags = (PLUS, MINUS) if group.family is GroupFamily.O_ODD else (None,)
    for rho in rho_catalog:
        residual = group.rank - rho.glu_rank
        if residual < 0:
            continue
        for r1 in range(residual + 1):
            for lam in _slot_symbols(kind, r1):
                for lam_prime in _slot_symbols(kind2, residual - r1):
                    for flag in flags:
                        try:
                            yield make_label(
                                group, rho, lam, lam_prime, flag, eps_minus_one
                            )
                        except SignMismatch:
                            continue


# ---------------------------------------------------------------------------
# Label text grammar
# ---------------------------------------------------------------------------


def format_rho(rho: RhoDescriptor) -> str:
    return f"{rho.id}:{rho.glu_rank}:{'reg' if rho.regular else 'irr'}"


def format_label(label: RepLabel) -> str:
    parts = [
        f"{label.group}: rho={format_rho(label.rho)}",
        f"L={format_symbol(label.lam)}",
        f"L'={format_symbol(label.lam_prime)}",
    ]
    if label.eps_flag is not None:
        parts.append(f"eps={format_sign(label.eps_flag)}")
    return " ; ".join(parts)


def _parse_group(token: str, offset: int) -> GroupTag:
    token = token.strip()
    if not token.endswith(")") or "(" not in token:
        raise ParseError(f"bad group token {token!r}", offset)
    name, _, dim_text = token[:-1].partition("(")
    try:
        dim = int(dim_text)
    except ValueError:
        raise ParseError(f"bad group dimension {dim_text!r}", offset) from None
    if name == "sp":
        if dim % 2 != 0:
            raise ParseError("symplectic dimension must be even", offset)
        return sp(dim // 2)
    if name in ("o+", "o-"):
        sign = PLUS if name == "o+" else MINUS
        if dim % 2 == 0:
            return o_even(dim // 2, sign)
        return o_odd(dim // 2, sign)
    raise ParseError(f"unknown group family {name!r}", offset)


def parse_group(text: str) -> GroupTag:
    """Parse a group token: ``sp(2n)``, ``o+(m)`` or ``o-(m)``."""
    return _parse_group(text, 0)


def parse_label(text: str, eps_minus_one: Sign = PLUS) -> RepLabel:
    """Parse the label grammar::

        sp(2n)|o+(2n)|o-(2n)|o+(2n+1)|o-(2n+1) : rho=<id:rank:reg|irr> ;
            L=[..|..] ; L'=[..|..] ; eps=+|-

    Whitespace around separators is ignored; output of :func:`format_label`
    always round-trips.
    """
    head, colon, rest = text.partition(":")
    if not colon:
        raise ParseError("label needs 'group: fields'", 0)
    group = _parse_group(head, 0)
    fields: dict[str, str] = {}
    offset = len(head) + 1
    for chunk in rest.split(";"):
        if not chunk.strip():
            offset += len(chunk) + 1
            continue
        key, eq, value = chunk.partition("=")
        if not eq:
            raise ParseError(f"bad label field {chunk.strip()!r}", offset)
        fields[key.strip()] = value.strip()
        offset += len(chunk) + 1
    try:
        rho_text = fields.pop("rho")
        lam_text = fields.pop("L")
        lam_prime_text = fields.pop("L'")
    except KeyError as missing:
        raise ParseError(f"label missing field {missing.args[0]!r}", 0) from None
    eps_text = fields.pop("eps", None)
    if fields:
        raise ParseError(f"unknown label fields {sorted(fields)}", 0)
    rho_bits = rho_text.split(":")
    if len(rho_bits) != 3 or rho_bits[2] not in ("reg", "irr"):
        raise ParseError(f"bad rho descriptor {rho_text!r}", 0)
    try:
        rho_rank = int(rho_bits[1])
    except ValueError:
        raise ParseError(f"bad rho rank {rho_bits[1]!r}", 0) from None
    rho = RhoDescriptor(rho_rank, rho_bits[2] == "reg", rho_bits[0])
    eps_flag = parse_sign(eps_text) if eps_text is not None else None
    return make_label(
        group,
        rho,
        parse_symbol(lam_text),
        parse_symbol(lam_prime_text),
        eps_flag,
        eps_minus_one,
    )
