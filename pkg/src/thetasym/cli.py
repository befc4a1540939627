"""Command line interface: deterministic tables from the library operations.

Verbs:

* ``symbols-enumerate`` - symbol tables by rank and family (disk cached);
* ``theta-fiber`` - pairing partners of a symbol at a target rank;
* ``theta-first`` - closed-form first occurrence of a unipotent symbol;
* ``theta-cuspidal`` - the cuspidal chain at a given index;
* ``ggp-mult`` - multiplicity of a label pair;
* ``ggp-branch`` - restriction decomposition of a unipotent label;
* ``verify`` - run a brute-force verification suite.

Output formats: ``pretty`` (aligned text), ``json`` (one object per row),
``csv``.  Identical inputs produce byte-identical output.  Exit codes:
0 success, 1 domain error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile

from . import __version__
from .catalog import (
    PLUS,
    Sign,
    eps_minus_one_from_q,
    format_label,
    format_sign,
    parse_group,
    parse_label,
    parse_sign,
)
from .core import (
    Symbol,
    SymbolFamily,
    enumerate_symbols,
    format_bipartition,
    format_symbol,
    parse_symbol,
    symbol_defect,
    symbol_rank,
    upsilon,
)
from .errors import ThetasymError
from .ggp import (
    BESSEL,
    FOURIER_JACOBI,
    branch_decomposition,
    ggp_multiplicity,
)
from .oracle import verify_counts, verify_f1, verify_variant_uniqueness
from .theta import (
    CuspidalThetaVariant,
    ThetaDirection,
    TowerContext,
    cuspidal_theta,
    first_occurrence_unipotent,
    theta_fiber,
)

CACHE_ENV_VAR = "THETASYM_CACHE_DIR"

_FAMILIES = {
    "sp": SymbolFamily.SP_UNIPOTENT,
    "o+": SymbolFamily.O_EVEN_PLUS,
    "o-": SymbolFamily.O_EVEN_MINUS,
    "o-odd": SymbolFamily.O_ODD,
}


# ---------------------------------------------------------------------------
# Output formatting
# ---------------------------------------------------------------------------


def _emit(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps({c: row[c] for c in columns}, sort_keys=True))
            out.write("\n")
        return
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
        out.write(buffer.getvalue())
        return
    widths = {
        c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c)
        for c in columns
    }
    out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
    for row in rows:
        out.write(
            "  ".join(str(row[c]).ljust(widths[c]) for c in columns).rstrip() + "\n"
        )


# ---------------------------------------------------------------------------
# Enumeration cache
# ---------------------------------------------------------------------------


def _payload_checksum(symbols: list[str]) -> str:
    return hashlib.sha256(json.dumps(symbols).encode()).hexdigest()


def cached_enumerate(rank: int, family: SymbolFamily, cache_dir: str | None) -> list[Symbol]:
    """Enumerate with a per-(family, rank) JSON cache, when a cache dir is set.

    Entries carry the library version and a payload checksum; stale or
    corrupt files are ignored and rewritten.  Writes go through a temporary
    file and an atomic rename.
    """
    if cache_dir is None:
        return enumerate_symbols(rank, family)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"{family.value.replace('+', 'p').replace('-', 'm')}-{rank}.json")
    if os.path.exists(path):
        try:
            with open(path) as handle:
                entry = json.load(handle)
            if (
                entry.get("version") == __version__
                and entry.get("checksum") == _payload_checksum(entry["symbols"])
            ):
                return [parse_symbol(text) for text in entry["symbols"]]
        except (ValueError, KeyError, OSError):
            pass
    symbols = enumerate_symbols(rank, family)
    texts = [format_symbol(s) for s in symbols]
    entry = {
        "family": family.value,
        "rank": rank,
        "version": __version__,
        "checksum": _payload_checksum(texts),
        "symbols": texts,
    }
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(entry, handle, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return symbols


# ---------------------------------------------------------------------------
# Shared option handling
# ---------------------------------------------------------------------------


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("pretty", "json", "csv"),
        default="pretty",
        help="output format (default: pretty)",
    )


def _add_eps(parser) -> None:
    parser.add_argument("--eps-minus-one", choices=("+", "-"), default=None)
    parser.add_argument("--q", type=int, default=None, help="odd prime power; sets eps-minus-one by q mod 4")


def _add_orientations(parser) -> None:
    for name in ("--orient-left", "--orient-right", "--orient-left-alt", "--orient-right-alt"):
        parser.add_argument(name, choices=("+", "-"), default=None)


def _resolve_eps(args) -> Sign:
    if (args.eps_minus_one is None) == (args.q is None):
        raise ThetasymError("exactly one of --eps-minus-one and --q is required")
    if args.q is not None:
        return eps_minus_one_from_q(args.q)
    return parse_sign(args.eps_minus_one)


def _context(args, eps: Sign) -> TowerContext:
    def get(name):
        value = getattr(args, name, None)
        return parse_sign(value) if value is not None else None

    return TowerContext(
        eps_minus_one=eps,
        orient_left=get("orient_left"),
        orient_right=get("orient_right"),
        orient_left_alt=get("orient_left_alt"),
        orient_right_alt=get("orient_right_alt"),
    )


def _mult_row(label_text: str, value) -> dict:
    return {
        "label": label_text,
        "multiplicity": str(value),
        "status": "undetermined" if value.is_undetermined else "ok",
    }


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def _cmd_symbols_enumerate(args, out) -> int:
    family = _FAMILIES[args.family]
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    symbols = cached_enumerate(args.rank, family, cache_dir)
    rows = [
        {
            "symbol": format_symbol(s),
            "rank": symbol_rank(s),
            "defect": symbol_defect(s),
            "upsilon": format_bipartition(upsilon(s)),
        }
        for s in symbols
    ]
    _emit(rows, ["symbol", "rank", "defect", "upsilon"], args.format, out)
    return 0


def _cmd_theta_fiber(args, out) -> int:
    lam = parse_symbol(args.symbol)
    fiber = theta_fiber(lam, parse_sign(args.sign), args.target_rank)
    rows = [
        {"symbol": format_symbol(s), "rank": symbol_rank(s), "defect": symbol_defect(s)}
        for s in fiber
    ]
    _emit(rows, ["symbol", "rank", "defect"], args.format, out)
    return 0


def _cmd_theta_first(args, out) -> int:
    lam = parse_symbol(args.symbol)
    direction = ThetaDirection(args.direction)
    occ = first_occurrence_unipotent(lam, parse_sign(args.sign), direction)
    rows = [
        {
            "symbol": format_symbol(lam),
            "sign": args.sign,
            "direction": args.direction,
            "index": occ.index,
            "lift": format_symbol(occ.lift),
        }
    ]
    _emit(rows, ["symbol", "sign", "direction", "index", "lift"], args.format, out)
    return 0


def _cmd_theta_cuspidal(args, out) -> int:
    variant = CuspidalThetaVariant(args.variant)
    sp_symbol, o_symbol, sign = cuspidal_theta(args.k, variant)
    rows = [
        {
            "k": args.k,
            "variant": args.variant,
            "sp_symbol": format_symbol(sp_symbol),
            "o_symbol": format_symbol(o_symbol),
            "tower_sign": format_sign(sign),
        }
    ]
    _emit(rows, ["k", "variant", "sp_symbol", "o_symbol", "tower_sign"], args.format, out)
    return 0


def _cmd_ggp_mult(args, out) -> int:
    eps = _resolve_eps(args)
    ctx = _context(args, eps)
    left = parse_label(args.left, eps)
    right = parse_label(args.right, eps)
    case = FOURIER_JACOBI if args.case == "fj" else BESSEL
    value = ggp_multiplicity(left, right, case, ctx)
    row = _mult_row(f"{format_label(left)} / {format_label(right)}", value)
    _emit([row], ["label", "multiplicity", "status"], args.format, out)
    return 0


def _cmd_ggp_branch(args, out) -> int:
    eps = _resolve_eps(args)
    ctx = _context(args, eps)
    pi = parse_label(args.pi, eps)
    target = parse_group(args.target)
    rows = [
        _mult_row(format_label(label), value)
        for label, value in branch_decomposition(pi, target, ctx)
    ]
    _emit(rows, ["label", "multiplicity", "status"], args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    if args.suite == "f1":
        report = verify_f1(args.max_rank)
    elif args.suite == "counts":
        report = verify_counts(args.max_rank)
    else:
        if args.eps_minus_one is None and args.q is None:
            eps = PLUS
        else:
            eps = _resolve_eps(args)
        report = verify_variant_uniqueness(args.max_rank, _context(args, eps))
    # elapsed time is deliberately omitted so output stays byte-identical
    out.write(f"suite {args.suite}: {'pass' if report.passed else 'FAIL'} "
              f"({report.checked} checks, {len(report.failures)} failures)\n")
    for failure in report.failures:
        out.write(f"  {failure['input']}: expected {failure['expected']}, "
                  f"got {failure['actual']}\n")
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetasym",
        description="symbol tables, theta first occurrences and branching multiplicities",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("symbols-enumerate", help="list symbols of a rank and family")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--cache-dir", default=None, help=f"cache directory (or ${CACHE_ENV_VAR})")
    _add_format(p)
    p.set_defaults(func=_cmd_symbols_enumerate)

    p = sub.add_parser("theta-fiber", help="pairing partners at a target rank")
    p.add_argument("--symbol", required=True)
    p.add_argument("--sign", choices=("+", "-"), required=True)
    p.add_argument("--target-rank", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_theta_fiber)

    p = sub.add_parser("theta-first", help="closed-form first occurrence")
    p.add_argument("--symbol", required=True)
    p.add_argument("--sign", choices=("+", "-"), required=True)
    p.add_argument("--direction", choices=[d.value for d in ThetaDirection], required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_theta_first)

    p = sub.add_parser("theta-cuspidal", help="cuspidal chain at index k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in CuspidalThetaVariant], required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_theta_cuspidal)

    p = sub.add_parser("ggp-mult", help="multiplicity of a label pair")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--case", choices=("fj", "bessel"), required=True)
    _add_eps(p)
    _add_orientations(p)
    _add_format(p)
    p.set_defaults(func=_cmd_ggp_mult)

    p = sub.add_parser("ggp-branch", help="restriction decomposition of a unipotent label")
    p.add_argument("--pi", required=True)
    p.add_argument("--target", required=True)
    _add_eps(p)
    _add_orientations(p)
    _add_format(p)
    p.set_defaults(func=_cmd_ggp_branch)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("f1", "counts", "variants"), required=True)
    p.add_argument("--max-rank", type=int, required=True)
    _add_eps(p)
    _add_orientations(p)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ThetasymError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
