"""Command-line interface.

Subcommands:
  zeta-plus ARGS...      renormalized value at non-positive integer arguments
  table                  depth-n table of renormalized values, optional check
  verify                 run the property suites
  shuffle U V            product of two words at a given lambda
  coproduct W            (reduced) coproduct at a given lambda
  phi W / psi W          regularized character expansions
  li / qz                one-variable polylogarithm / nested q-sum truncations
  birkhoff W             chi, chi_bar, chi_minus, chi_plus for one word

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
Output is deterministic byte-for-byte for a fixed command line.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from itertools import product

from .birkhoff import CharacterTable, zeta_plus
from .coproduct import coproduct_combinatorial, coproduct_recursive, reduced_coproduct
from .errors import (
    DepthOne,
    EvenWeight,
    LambdaZero,
    NonvanishingLowerTerm,
    NonzeroConstantTerm,
    NotAdmissible,
    PrecisionExceeded,
    TruncationMismatch,
)
from .rationals import rat_from_str, rat_to_str
from .realizations import li_J, phi, psi, qz_series
from .series import LaurentSeries, series_slice, series_to_json
from .shuffle import shuffle_lambda, shuffle_zero
from .verify import SUITES, run_suite
from .words import (
    parse_word,
    project_T,
    word_key,
    wordsum_to_json,
    tensorsum_to_json,
)

_DOMAIN_ERRORS = (
    NotAdmissible,
    LambdaZero,
    PrecisionExceeded,
    NonzeroConstantTerm,
    TruncationMismatch,
    EvenWeight,
    NonvanishingLowerTerm,
    DepthOne,
)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _pow_label(var: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return var
    return f"{var}^{n}"


def _format_terms(pairs) -> str:
    """Signed sum like `2*ydy - dyy` from [(label, Fraction), ...]."""
    if not pairs:
        return "0"
    parts = []
    for i, (label, c) in enumerate(pairs):
        mag = abs(c)
        if not label:
            body = rat_to_str(mag)
        elif mag == 1:
            body = label
        else:
            body = f"{rat_to_str(mag)}*{label}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts)


def _format_wordsum(s: dict) -> str:
    pairs = [(w or "e", c) for w, c in sorted(s.items(), key=lambda kv: word_key(kv[0]))]
    return _format_terms(pairs)


def _format_series(a: LaurentSeries, var: str = "z") -> str:
    pairs = [
        (_pow_label(var, n), a.coefficient(n))
        for n in range(a.ord, a.valid_through + 1)
        if a.coefficient(n) != 0
    ]
    head = _format_terms(pairs)
    return f"{head} + O({var}^{a.valid_through + 1})"


def _format_powerseries(coeffs, var: str) -> str:
    pairs = [
        (_pow_label(var, n), c) for n, c in enumerate(coeffs) if c != 0
    ]
    head = _format_terms(pairs)
    return f"{head} + O({var}^{len(coeffs)})"


def _powerseries_json(coeffs, var: str) -> dict:
    return {
        "var": var,
        "trunc": len(coeffs) - 1,
        "coeffs": [rat_to_str(c) for c in coeffs],
    }


def _print_tensorsum(t: dict) -> None:
    for (l, r), c in sorted(t.items(), key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1]))):
        print(f"{rat_to_str(c)}  {l or 'e'} (x) {r or 'e'}")


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SyntaxError(f"bad rational {text!r} for --lambda") from exc


def _parse_kvec(text: str) -> tuple[int, ...]:
    try:
        k = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise SyntaxError(f"bad index vector {text!r}; expected e.g. 1,0,2") from exc
    if not k:
        raise SyntaxError("index vector must be nonempty")
    return k


def _merge_value_flags(argv: list[str]) -> list[str]:
    """Turn `--k -1,2` into `--k=-1,2` so argparse survives leading dashes."""
    valued = {"--k", "--trunc", "--lambda", "--prec", "--max-k", "--depth"}
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in valued and i + 1 < len(argv):
            out.append(argv[i] + "=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_zeta_plus(args) -> int:
    k = tuple(-a for a in args.args)
    print(rat_to_str(zeta_plus(k).value))
    return 0


def _load_table_reference(path: str):
    if path == "":
        text = (
            resources.files("hopfmzv").joinpath("fixtures/table1.json").read_text()
        )
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    entries = json.loads(text)
    return {tuple(e["k"]): rat_from_str(e["value"]) for e in entries}


def _cmd_table(args) -> int:
    vectors = list(product(range(args.max_k + 1), repeat=args.depth))
    computed = [(k, zeta_plus(k).value) for k in vectors]
    if args.json:
        payload = {
            "depth": args.depth,
            "max_k": args.max_k,
            "entries": [
                {"k": list(k), "value": rat_to_str(v)} for k, v in computed
            ],
        }
        print(json.dumps(payload, indent=2))
    if args.check is None:
        if not args.json:
            for k, v in computed:
                print(f"k={k}  {rat_to_str(v)}")
        return 0
    reference = _load_table_reference(args.check)
    failures = 0
    for k, v in computed:
        ref = reference.get(k)
        if ref is None:
            failures += 1
            print(f"FAIL k={k}  computed {rat_to_str(v)}, missing from reference")
        elif ref != v:
            failures += 1
            print(f"FAIL k={k}  computed {rat_to_str(v)}, reference {rat_to_str(ref)}")
        else:
            print(f"PASS k={k}  {rat_to_str(v)}")
    total = len(computed)
    print(f"checked {total} entries: {total - failures} pass, {failures} fail")
    return 1 if failures else 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    total = 0
    for name in names:
        for res in run_suite(name):
            total += 1
            if res["ok"]:
                print(f"PASS [{name}] {res['name']}")
            else:
                failed += 1
                print(f"FAIL [{name}] {res['name']}: {res['detail']}")
    print(f"{total - failed}/{total} checks passed")
    return 1 if failed else 0


def _cmd_shuffle(args) -> int:
    u = parse_word(args.u)
    v = parse_word(args.v)
    lam = _parse_lambda(args.lam)
    if lam == 0:
        s = shuffle_zero(u, v)
    else:
        s = shuffle_lambda(u, v, lam)
    if not args.raw:
        s = project_T(s)
    if args.json:
        print(json.dumps(wordsum_to_json(s), indent=2))
    else:
        print(_format_wordsum(s))
    return 0


def _cmd_coproduct(args) -> int:
    w = parse_word(args.word)
    lam = _parse_lambda(args.lam)
    if args.reduced:
        t = reduced_coproduct(w, lam, method=args.method)
    elif args.method == "recursive":
        t = coproduct_recursive(w, lam)
    else:
        t = coproduct_combinatorial(w, lam)
    if args.json:
        print(json.dumps(tensorsum_to_json(t), indent=2))
    else:
        _print_tensorsum(t)
    return 0


def _character_command(char):
    def run(args) -> int:
        w = parse_word(args.word)
        s = series_slice(char(w, args.prec), args.prec)
        if args.json:
            print(json.dumps(series_to_json(s), indent=2))
        else:
            print(_format_series(s))
        return 0

    return run


def _cmd_li(args) -> int:
    coeffs = li_J(_parse_kvec(args.k), args.trunc)
    if args.json:
        print(json.dumps(_powerseries_json(coeffs, "t"), indent=2))
    else:
        print(_format_powerseries(coeffs, "t"))
    return 0


def _cmd_qz(args) -> int:
    k = _parse_kvec(args.k)
    if any(v < 0 for v in k):
        raise NotAdmissible("nested q-sums take k_i >= 0 (arguments -k_i <= 0)")
    coeffs = qz_series(k, args.trunc)
    if args.json:
        print(json.dumps(_powerseries_json(coeffs, "q"), indent=2))
    else:
        print(_format_powerseries(coeffs, "q"))
    return 0


def _cmd_birkhoff(args) -> int:
    w = parse_word(args.word)
    table = CharacterTable(args.kind, prec=args.prec)
    rows = [
        ("chi", table.chi(w)),
        ("chi_bar", table.chi_bar(w)),
        ("chi_minus", table.chi_minus(w)),
        ("chi_plus", table.chi_plus(w)),
    ]
    sliced = [(name, series_slice(s, args.prec)) for name, s in rows]
    if args.json:
        payload = {"word": w, "kind": args.kind}
        payload.update({name: series_to_json(s) for name, s in sliced})
        print(json.dumps(payload, indent=2))
    else:
        for name, s in sliced:
            print(f"{name:9s} = {_format_series(s)}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfmzv",
        description="Exact renormalized multiple zeta values at non-positive "
        "integers, their q-analogues, and the word-algebra machinery behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "zeta-plus", help="renormalized value at non-positive integer arguments"
    )
    p.add_argument(
        "args",
        type=int,
        nargs="+",
        metavar="N",
        help="arguments, all <= 0 (use `-- -1 -2` to stop flag parsing)",
    )
    p.set_defaults(func=_cmd_zeta_plus)

    p = sub.add_parser("table", help="tabulate renormalized values")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--check",
        nargs="?",
        const="",
        default=None,
        metavar="PATH",
        help="compare against a reference table (packaged fixture by default)",
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument(
        "--suite",
        choices=sorted(SUITES) + ["all"],
        default="all",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("shuffle", help="product of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--lambda", dest="lam", default="-1", metavar="Q")
    p.add_argument("--raw", action="store_true", help="keep words ending in d")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("coproduct", help="(reduced) coproduct of a word")
    p.add_argument("word")
    p.add_argument("--lambda", dest="lam", default="-1", metavar="Q")
    p.add_argument("--reduced", action="store_true")
    p.add_argument(
        "--method", choices=["recursive", "combinatorial"], default="recursive"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coproduct)

    p = sub.add_parser("phi", help="polylogarithm-limit character of a word")
    p.add_argument("word")
    p.add_argument("--prec", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_character_command(phi))

    p = sub.add_parser("psi", help="modified q-sum character of a word")
    p.add_argument("word")
    p.add_argument("--prec", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_character_command(psi))

    p = sub.add_parser("li", help="one-variable polylogarithm truncation")
    p.add_argument("--k", required=True, metavar="K1,K2,...")
    p.add_argument("--trunc", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_li)

    p = sub.add_parser("qz", help="nested q-sum truncation at arguments -k_i")
    p.add_argument("--k", required=True, metavar="K1,K2,...")
    p.add_argument("--trunc", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_qz)

    p = sub.add_parser("birkhoff", help="decomposition data for one word")
    p.add_argument("word")
    p.add_argument("--kind", choices=["phi", "psi"], default="phi")
    p.add_argument("--prec", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_birkhoff)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_merge_value_flags(list(argv)))
    if args.command == "zeta-plus" and any(a > 0 for a in args.args):
        parser.error("zeta-plus takes non-positive arguments")
    try:
        return args.func(args)
    except SyntaxError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
