"""Command-line front end.

Exit status: 0 on success, 1 when a word cannot be decoded or a
verification finds a counterexample, 2 on bad arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import codebook as cb
from .channel import DeletionPattern, delete_at, random_deletions
from .codeword import format_word, moment, parse_word
from .decoder import decode
from .errors import BudgetExceededError, HelbergError, InvalidParametersError, UndecodableError
from .oracle import brute_decode_deletions, verify_code
from .params import make_params, weight_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _n_range(text: str) -> list[int]:
    """``"7"`` or ``"1..16"``."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _params(args, n=None):
    return make_params(args.q, args.d, args.n if n is None else n, args.r, args.m)


def _word(args, text):
    return parse_word(text, args.q)


def cmd_weights(args):
    ws = weight_sequence(args.q, args.d, args.count)
    if args.format == "json":
        return json.dumps(ws)
    if args.format == "csv":
        return "\n".join(["i,w_i"] + [f"{i},{w}" for i, w in enumerate(ws, 1)])
    return "\n".join(map(str, ws))


def cmd_check(args):
    params = _params(args)
    x = _word(args, args.word)
    if len(x) != params.n:
        raise UsageError(f"word has length {len(x)}, expected n={params.n}")
    M = moment(params, x)
    member = M % params.m == params.r
    if args.format == "json":
        return json.dumps({"word": format_word(x, params.q), "member": member,
                           "moment": M, "residue": M % params.m, **params.summary()})
    return f"{'member' if member else 'non-member'}, M={M}, residue={M % params.m}"


def cmd_sizes(args):
    results = []
    for n in args.n:
        res = cb.max_size_search(args.q, args.d, n, histogram=args.histogram, budget=args.budget)
        results.append(res)
    if args.format == "json":
        return cb.results_to_json(results)
    if args.format == "csv":
        return cb.results_to_csv(results).rstrip("\n")
    lines = []
    for res in results:
        lines.append(f"{res.n}\t{res.max_size}\t{', '.join(map(str, res.argmax_residues))}")
    return "\n".join(lines)


def cmd_corrupt(args):
    x = _word(args, args.word)
    if args.n is not None and len(x) != args.n:
        raise UsageError(f"word has length {len(x)}, expected n={args.n}")
    if args.random is not None:
        received, pattern = random_deletions(x, args.random, args.seed)
    else:
        pattern = DeletionPattern.parse(args.pattern or "")
        received = delete_at(x, pattern)
    if args.format == "json":
        return json.dumps({"received": format_word(received, args.q), "pattern": list(pattern.positions)})
    out = format_word(received, args.q)
    if args.random is not None:
        out += f"\npattern {pattern}"
    return out


def cmd_decode(args):
    params = _params(args)
    xd = _word(args, args.word)
    if args.algorithm == "oracle":
        found = sorted(brute_decode_deletions(params, xd))
        if len(found) != 1:
            raise UndecodableError(f"oracle found {len(found)} preimages")
        out, trace = found[0], None
    else:
        out, trace = decode(params, xd, algorithm=args.algorithm)
    if args.format == "json":
        payload = {"decoded": format_word(out, params.q)}
        if trace is not None:
            payload["trace"] = [str(s) for s in trace]
        return json.dumps(payload)
    text = format_word(out, params.q)
    if args.trace and trace is not None:
        text += "\n" + trace.to_text()
    return text


def _roundtrip(params, budget):
    decoded = failures = 0
    for x in cb.codebook(params, budget):
        for c in range(1, params.d + 1):
            for D in combinations(range(1, params.n + 1), c):
                decoded += 1
                try:
                    ok = decode(params, delete_at(x, D))[0] == x
                except UndecodableError:
                    ok = False
                failures += not ok
    return {"decoded": decoded, "failures": failures}


def cmd_verify(args):
    reports = []
    for n in args.n:
        if args.r is not None:
            residues = [args.r]
        else:
            residues = cb.max_size_search(args.q, args.d, n, budget=args.budget).argmax_residues
        for r in residues:
            params = make_params(args.q, args.d, n, r, args.m)
            rep = verify_code(params, budget=args.budget).to_dict()
            if params.d >= 2 and params.n > params.d:
                rep["roundtrip"] = _roundtrip(params, args.budget)
            reports.append(rep)
    failed = any(not r["passed"] or r.get("roundtrip", {}).get("failures") for r in reports)
    if args.format == "json":
        text = json.dumps(reports, indent=2)
    else:
        lines = []
        for rep in reports:
            p = rep["params"]
            rt = rep.get("roundtrip")
            rt_text = f", roundtrip {rt['decoded'] - rt['failures']}/{rt['decoded']}" if rt else ""
            lines.append(
                f"q={p['q']} d={p['d']} n={p['n']} m={p['m']} r={p['r']}: "
                f"{'PASS' if rep['passed'] else 'FAIL'} |C|={rep['codebook_size']} "
                f"counterexamples={len(rep['counterexamples'])}{rt_text}")
        text = "\n".join(lines)
    return text, (EXIT_FAIL if failed else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helberg", description="q-ary Helberg insertion-deletion codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, code=True, n_range=False):
        p.add_argument("--q", type=int, required=True, help="alphabet size")
        p.add_argument("--d", type=int, required=code, default=2, help="deletions corrected")
        if n_range:
            p.add_argument("--n", type=_n_range, required=True, help="length N or range LO..HI")
        elif code:
            p.add_argument("--n", type=int, required=True, help="codeword length")
        if code:
            p.add_argument("--r", type=int, default=None if n_range else 0, help="residue")
            p.add_argument("--m", type=int, default=None, help="modulus (default w_{n+1})")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--budget", type=int, default=None, help="max words to enumerate")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("weights", help="print w_1..w_count")
    common(p, code=False)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("check", help="codebook membership of a word")
    common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sizes", help="largest codebook size per length")
    common(p, code=False, n_range=True)
    p.add_argument("--histogram", action="store_true", help="include per-residue sizes (json only)")
    p.set_defaults(func=cmd_sizes)

    p = sub.add_parser("corrupt", help="apply deletions to a word")
    common(p, code=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--word", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pattern", help="1-based positions, e.g. 3,5")
    g.add_argument("--random", type=int, metavar="C", help="delete C random positions")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="decode a word that suffered deletions")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--algorithm", choices=["auto", "d1", "d2", "dm", "oracle"], default="auto")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="brute-force check of the correction guarantee")
    common(p, n_range=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    status = EXIT_OK
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, status = result
    except UndecodableError as exc:
        print(f"undecodable: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, InvalidParametersError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HelbergError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(result + ("\n" if result else ""))
    elif result:
        print(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
