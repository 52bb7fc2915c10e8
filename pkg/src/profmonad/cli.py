"""Command-line front-end.

Exit status: 0 on success, 1 when the bidirectional program fails on its
input (parse, lens or check failure, or a failed law suite), 2 when an
argument or file is syntactically malformed.
"""

from __future__ import annotations

import argparse
import sys
import threading
from pathlib import Path
from typing import List, Optional, TextIO

from . import bigen, biparser, lens, suites
from .tree import TreeSyntaxError, format_tree, parse_tree

OK, DOMAIN_FAILURE, BAD_INPUT = 0, 1, 2

# The combinators recurse once per printed or parsed element.
_STACK_BYTES = 512 * 1024 * 1024
_RECURSION_LIMIT = 1_000_000


class BadInput(Exception):
    pass


def _u64(text: str) -> int:
    try:
        n = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError(f"out of range for a 64-bit unsigned seed: {text}")
    return n


def _count(text: str) -> int:
    try:
        n = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _decimal(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def _tree(text: str):
    try:
        return parse_tree(text)
    except TreeSyntaxError as e:
        raise BadInput(f"malformed tree {text!r}: {e}")


def _ints(words: List[str]) -> List[int]:
    out = []
    for word in words:
        for tok in word.split():
            try:
                out.append(int(tok, 10))
            except ValueError:
                raise BadInput(f"not a decimal integer: {tok!r}")
    return out


def _read_kv(path: Path, missing_ok: bool) -> dict:
    if not path.exists():
        if missing_ok:
            return {}
        raise BadInput(f"no such file: {path}")
    try:
        return lens.parse_kv(path.read_text(encoding="utf-8"))
    except lens.KvSyntaxError as e:
        raise BadInput(f"{path}: {e}")


def _check_kv_text(items: List[str], what: str) -> None:
    for item in items:
        if "=" in item or "\n" in item or "\r" in item:
            raise BadInput(f"{what} must not contain '=' or newlines: {item!r}")


# ---------------------------------------------------------------------------
# Commands.  Each writes to ``out``/``err`` and returns an exit status.


def cmd_encode(args, out, err) -> int:
    _, text = biparser.print_(biparser.string(), args.payload)
    out.write(text + "\n")
    return OK


def cmd_decode(args, out, err) -> int:
    r = biparser.parse(biparser.string(), args.text)
    if r is None:
        err.write(f"decode: not a length-prefixed string: {args.text!r}\n")
        return DOMAIN_FAILURE
    payload, rest = r
    out.write(payload + "\n" + rest + "\n")
    return OK


def cmd_spine_get(args, out, err) -> int:
    spine = lens.spine_l().get(_tree(args.tree))
    if spine is None:
        err.write("spine-get: lens failed\n")
        return DOMAIN_FAILURE
    out.write(" ".join(map(str, spine)) + "\n")
    return OK


def cmd_spine_put(args, out, err) -> int:
    t = _tree(args.tree)
    r = lens.spine_l().put(_ints(args.spine), t)
    if r is None:
        err.write("spine-put: lens failed\n")
        return DOMAIN_FAILURE
    out.write(format_tree(r[0][1]) + "\n")
    return OK


def cmd_kv_get(args, out, err) -> int:
    m = _read_kv(Path(args.file), missing_ok=False)
    values = lens.at_keys(args.keys).get(m)
    if values is None:
        missing = [k for k in args.keys if k not in m]
        err.write(f"kv-get: missing key(s): {' '.join(missing)}\n")
        return DOMAIN_FAILURE
    out.write("".join(v + "\n" for v in values))
    return OK


def cmd_kv_put(args, out, err) -> int:
    _check_kv_text(args.keys, "keys")
    _check_kv_text(args.values, "values")
    path = Path(args.file)
    m = _read_kv(path, missing_ok=True)
    r = lens.at_keys(args.keys).put(args.values, m)
    if r is None:
        err.write(f"kv-put: {len(args.keys)} key(s) but only {len(args.values)} value(s)\n")
        return DOMAIN_FAILURE
    (views, m2), consistent = r
    if not consistent(m2):
        err.write("kv-put: conflicting values written to the same key\n")
        return DOMAIN_FAILURE
    path.write_text(lens.format_kv(m2), encoding="utf-8")
    out.write("".join(v + "\n" for v in views))
    return OK


def cmd_bst_sample(args, out, err) -> int:
    for t in bigen.sample(bigen.bst(args.lo, args.hi), args.seed, args.count):
        out.write(format_tree(t) + "\n")
    return OK


def cmd_bst_check(args, out, err) -> int:
    ok = bigen.to_predicate(bigen.bst(args.lo, args.hi), _tree(args.tree))
    out.write(("true" if ok else "false") + "\n")
    return OK if ok else DOMAIN_FAILURE


def cmd_laws(args, out, err) -> int:
    results = suites.run_all(args.seed, args.cases)
    out.write(suites.format_report(results))
    return OK if all(r.passed for r in results) else DOMAIN_FAILURE


# ---------------------------------------------------------------------------


def _add_bst_sample(p):
    p.add_argument("--lo", type=_decimal, required=True)
    p.add_argument("--hi", type=_decimal, required=True)
    p.add_argument("--count", type=_count, default=1)
    p.add_argument("--seed", type=_u64, default=42)
    p.set_defaults(func=cmd_bst_sample)


def _add_bst_check(p):
    p.add_argument("--lo", type=_decimal, required=True)
    p.add_argument("--hi", type=_decimal, required=True)
    p.add_argument("tree")
    p.set_defaults(func=cmd_bst_check)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="profmonad", description="Biparsers, monadic lenses and bigenerators.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("encode", help="print a payload in length-prefixed form")
    p.add_argument("payload")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="parse a length-prefixed payload")
    p.add_argument("text")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("spine-get", help="view the right spine of a tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_spine_get)

    p = sub.add_parser("spine-put", help="replace the right spine of a tree")
    p.add_argument("tree")
    p.add_argument("spine", nargs="*", help="labels, as separate or space-separated arguments")
    p.set_defaults(func=cmd_spine_put)

    p = sub.add_parser("kv-get", help="look up keys in a key=value file")
    p.add_argument("file")
    p.add_argument("keys", nargs="+")
    p.set_defaults(func=cmd_kv_get)

    p = sub.add_parser("kv-put", help="write values for keys into a key=value file")
    p.add_argument("file")
    p.add_argument("--keys", nargs="+", required=True)
    p.add_argument("--values", nargs="*", default=[])
    p.set_defaults(func=cmd_kv_put)

    _add_bst_sample(sub.add_parser("bst-sample", help="draw binary search trees"))
    _add_bst_check(sub.add_parser("bst-check", help="check a binary search tree"))

    p = sub.add_parser("bst", help="bst-sample / bst-check as subcommands")
    bst_sub = p.add_subparsers(dest="bst_command", required=True, metavar="{sample,check}")
    _add_bst_sample(bst_sub.add_parser("sample"))
    _add_bst_check(bst_sub.add_parser("check"))

    p = sub.add_parser("laws", help="run every law and round-trip suite")
    p.add_argument("--seed", type=_u64, default=42)
    p.add_argument("--cases", type=_count, default=1000)
    p.set_defaults(func=cmd_laws)

    return parser


def _run(args, out: TextIO, err: TextIO) -> int:
    try:
        return args.func(args, out, err)
    except BadInput as e:
        err.write(f"{args.command}: {e}\n")
        return BAD_INPUT


def _run_with_deep_stack(args, out, err) -> int:
    result = [BAD_INPUT]

    def target():
        result[0] = _run(args, out, err)

    old_limit, old_stack = sys.getrecursionlimit(), threading.stack_size()
    sys.setrecursionlimit(_RECURSION_LIMIT)
    threading.stack_size(_STACK_BYTES)
    try:
        worker = threading.Thread(target=target)
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    return result[0]


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    if out is None:
        sys.stdout.reconfigure(encoding="utf-8")
        out = sys.stdout
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    return _run_with_deep_stack(args, out, err)


def entry() -> None:
    sys.exit(main())
