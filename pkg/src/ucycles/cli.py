"""Command-line front end.

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on usage
or input errors.
"""

import argparse
import json
import os
import sys
from math import factorial

from . import alphabet, debruijn, generator, structure, verifier
from .errors import InvalidInputError, UcycleError

MAX_N_ENV = "UCYCLE_MAX_N"

_perm = {"type": "array", "items": {"type": "integer"}}

JSON_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["gen", "verify", "props", "alphabet", "scan-starts", "debruijn"]},
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 2},
        "mode": {"enum": ["word", "cycle", "linear", "cyclic"]},
        "word": _perm,
        "verdict": {"type": "boolean"},
        "missing": {"type": "array", "items": _perm},
        "duplicated": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pattern", "positions"],
                "additionalProperties": False,
                "properties": {"pattern": _perm, "positions": _perm},
            },
        },
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["k", "sigma", "sigma_prime", "J", "i", "b"],
                "additionalProperties": False,
                "properties": {
                    "k": {"type": "integer"},
                    "sigma": {"anyOf": [_perm, {"type": "null"}]},
                    "sigma_prime": _perm,
                    "J": {"type": "integer"},
                    "i": {"type": "integer"},
                    "b": {"type": "integer"},
                },
            },
        },
        "height": {"type": "integer"},
        "heights": _perm,
        "lower_bound": {"type": "integer"},
        "properties": {
            "type": "object",
            "required": ["flags", "sigma_mid", "sigma_mid_plus_1", "sigma_mid_plus_2", "class_counts", "failures"],
            "properties": {
                "flags": {"type": "object", "additionalProperties": {"type": "boolean"}},
                "sigma_mid": _perm,
                "sigma_mid_plus_1": _perm,
                "sigma_mid_plus_2": {"anyOf": [_perm, {"type": "null"}]},
                "class_counts": {"type": "object", "additionalProperties": {"type": "integer"}},
                "failures": {"type": "object", "additionalProperties": {"type": "integer"}},
            },
        },
        "starts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["start", "word", "covered_count", "missing", "verdict"],
                "additionalProperties": False,
                "properties": {
                    "start": _perm,
                    "word": _perm,
                    "covered_count": {"type": "integer"},
                    "missing": {"type": "array", "items": _perm},
                    "verdict": {"type": "boolean"},
                },
            },
        },
    },
}


def format_word(w) -> str:
    return " ".join(map(str, w))


def parse_word(text: str) -> tuple[int, ...]:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InvalidInputError("empty word")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise InvalidInputError(f"malformed word text: {exc}") from None


def format_alpha(w, k: int) -> str:
    return "".join(map(str, w)) if k <= 10 else " ".join(map(str, w))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _max_n(args, default: int) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get(MAX_N_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"{MAX_N_ENV} must be an integer, got {env!r}") from None
    return default


def _coverage_json(rep) -> dict:
    return {
        "verdict": rep.verdict,
        "missing": [list(p) for p in rep.missing],
        "duplicated": [{"pattern": list(p), "positions": ps} for p, ps in rep.duplicated],
    }


def _word_source(args):
    """Word from --input, or the generated u-word for --n."""
    if args.input is not None:
        if args.n is None:
            raise InvalidInputError("--n is required")
        return parse_word(_read_input(args.input))
    if args.n is None:
        raise InvalidInputError("either --n or --input is required")
    return generator.generate_u_word(args.n, max_n=_max_n(args, generator.DEFAULT_MAX_N)).u_word


def cmd_gen(args):
    res = generator.generate_u_word(args.n, with_trace=args.trace, max_n=_max_n(args, generator.DEFAULT_MAX_N))
    word = res.u_cycle if args.cycle else res.u_word
    doc = {"command": "gen", "n": args.n, "mode": "cycle" if args.cycle else "word", "word": list(word)}
    if args.trace:
        doc["trace"] = [
            {
                "k": s.k,
                "sigma": list(s.sigma) if s.sigma is not None else None,
                "sigma_prime": list(s.sigma_prime),
                "J": s.J,
                "i": s.i,
                "b": s.b,
            }
            for s in res.trace
        ]
    if args.figure:
        from . import plotting

        plotting.plot_word(word, args.n, args.figure)
    text = format_word(word) + "\n"
    if args.trace and args.format == "plain":
        text += "".join(f"{s.k} {s.i} {s.b}\n" for s in res.trace)
    return 0, doc, text


def cmd_verify(args):
    w = parse_word(_read_input(args.input))
    if not args.relabeled and len(set(w)) != len(w):
        raise InvalidInputError("word has repeated letters; pass --relabeled to allow repeats across windows")
    check = verifier.check_u_cycle if args.cycle else verifier.check_u_word
    rep = check(w, args.n)
    doc = {"command": "verify", "n": args.n, "mode": "cycle" if args.cycle else "word", "word": list(w)}
    doc.update(_coverage_json(rep))
    lines = ["true" if rep.verdict else "false"]
    lines += ["missing " + format_word(p) for p in rep.missing]
    lines += [f"duplicated {format_word(p)} at {format_word(ps)}" for p, ps in rep.duplicated]
    return (0 if rep.verdict else 1), doc, "\n".join(lines) + "\n"


def cmd_props(args):
    w = _word_source(args)
    rep = structure.check_theorem3(w, args.n)
    doc = {
        "command": "props",
        "n": args.n,
        "word": list(w),
        "verdict": rep.all_ok,
        "properties": {
            "flags": rep.flags(),
            "sigma_mid": list(rep.sigma_mid),
            "sigma_mid_plus_1": list(rep.sigma_mid_plus_1),
            "sigma_mid_plus_2": list(rep.sigma_mid_plus_2) if rep.sigma_mid_plus_2 is not None else None,
            "class_counts": rep.class_counts,
            "failures": rep.failures,
        },
    }
    if args.figure:
        from . import plotting

        plotting.plot_half_split(w, args.n, args.figure)
    lines = [f"{k}: {'true' if v else 'false'}" for k, v in rep.flags().items()]
    return (0 if rep.all_ok else 1), doc, "\n".join(lines) + "\n"


def cmd_alphabet(args):
    w = _word_source(args)
    dag = alphabet.build_poset(w, args.n, cyclic=args.cyclic)
    doc = {
        "command": "alphabet",
        "n": args.n,
        "mode": "cyclic" if args.cyclic else "linear",
        "word": list(w),
        "height": dag.height,
        "heights": list(dag.heights),
    }
    if args.n >= 2:
        doc["lower_bound"] = alphabet.alphabet_lower_bound(args.n)
    if args.edges:
        with open(args.edges, "w") as fh:
            fh.write(dag.edge_list_text())
    if args.figure:
        from . import plotting

        plotting.plot_poset(w, dag, args.figure)
    text = format_word(dag.heights) + "\n" if args.relabel else f"{dag.height}\n"
    return 0, doc, text


def cmd_scan(args):
    results = generator.scan_starts(args.n, max_n=_max_n(args, generator.DEFAULT_SCAN_MAX_N))
    doc = {
        "command": "scan-starts",
        "n": args.n,
        "starts": [
            {
                "start": list(r.start),
                "word": list(r.terminal_word),
                "covered_count": r.covered_count,
                "missing": [list(p) for p in r.missing],
                "verdict": r.is_u_word,
            }
            for r in results
        ],
    }
    lines = [
        f"{format_word(r.start)}: {'u-word' if r.is_u_word else 'fail'} covered {r.covered_count}/{factorial(args.n)}"
        for r in results
    ]
    return 0, doc, "\n".join(lines) + "\n"


def cmd_debruijn(args):
    build = debruijn.lyndon_concat if args.lyndon else debruijn.martin
    w = build(args.k, args.len)
    rep = debruijn.is_de_bruijn(w, args.k, args.len)
    doc = {
        "command": "debruijn",
        "n": args.len,
        "k": args.k,
        "word": list(w),
        "verdict": rep.verdict,
        "missing": [list(p) for p in rep.missing],
        "duplicated": [{"pattern": list(p), "positions": ps} for p, ps in rep.duplicated],
    }
    return 0, doc, format_alpha(w, args.k) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ucycles", description="Greedy universal cycles for permutations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format):
        sp.add_argument("--format", choices=["plain", "json"], default=default_format)
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--max-n", type=int, help=f"size guard (overrides ${MAX_N_ENV})")

    def word_or_cycle(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--word", action="store_true", help="u-word (default)")
        g.add_argument("--cycle", action="store_true", help="u-cycle")

    g = sub.add_parser("gen", help="generate the greedy u-word or u-cycle")
    g.add_argument("--n", type=int, required=True)
    word_or_cycle(g)
    g.add_argument("--trace", action="store_true")
    g.add_argument("--figure", help="save a plot of the word")
    common(g, "plain")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="exact-cover check of a word")
    v.add_argument("--n", type=int, required=True)
    word_or_cycle(v)
    v.add_argument("--input", default="-", help="file with the word, '-' for stdin")
    v.add_argument("--relabeled", action="store_true", help="allow letters to repeat outside windows")
    common(v, "json")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("props", help="half-split properties of a u-word")
    pr.add_argument("--n", type=int)
    pr.add_argument("--input")
    pr.add_argument("--figure", help="save a plot of window classes")
    common(pr, "json")
    pr.set_defaults(func=cmd_props)

    a = sub.add_parser("alphabet", help="letter-reuse poset height and relabeling")
    a.add_argument("--n", type=int)
    a.add_argument("--input")
    a.add_argument("--cyclic", action="store_true")
    a.add_argument("--relabel", action="store_true", help="plain output is the relabeled word")
    a.add_argument("--edges", help="write generator edges as 'j k' lines")
    a.add_argument("--figure", help="save a plot of the poset")
    common(a, "json")
    a.set_defaults(func=cmd_alphabet)

    s = sub.add_parser("scan-starts", help="greedy runs from every starting permutation")
    s.add_argument("--n", type=int, required=True)
    common(s, "json")
    s.set_defaults(func=cmd_scan)

    d = sub.add_parser("debruijn", help="de Bruijn cycle B(k, len)")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--len", type=int, required=True)
    d.add_argument("--lyndon", action="store_true", help="Lyndon concatenation instead of the greedy")
    common(d, "plain")
    d.set_defaults(func=cmd_debruijn)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, doc, text = args.func(args)
        out = json.dumps(doc, separators=(",", ":")) + "\n" if args.format == "json" else text
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    except (UcycleError, OSError) as exc:
        print(f"ucycles: error: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
