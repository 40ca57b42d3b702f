"""Command-line front end: normalization, shuffle paths, tuples, verification."""

from __future__ import annotations

import argparse
import sys

from .chi import chi_general
from .errors import BarlaxError
from .shuffle import enumerate_paths, inversion_count, parse_shuffle, shuffle_to_text
from .simplicial import normalize_trace, parse_word, word_to_text
from .suites import SUITE_NAMES, SuiteConfig, run_suite

_RULE_TEXT = {
    "dd": "face past face",
    "ss": "degeneracy past degeneracy",
    "ds_lt": "face past degeneracy (left)",
    "ds_id": "face cancels degeneracy",
    "ds_gt": "face past degeneracy (right)",
}


def cmd_normalize(args) -> int:
    f = parse_word(args.word)
    nf, steps = normalize_trace(f)
    for pos, rule, state in steps:
        print(f"  [{rule:6s} @{pos}] {word_to_text(state)}   ({_RULE_TEXT[rule]})")
    print(word_to_text(nf))
    return 0


def cmd_paths(args) -> int:
    theta = parse_shuffle(args.shuffle)
    inv = inversion_count(theta)
    enum = enumerate_paths(theta, args.limit)
    print(f"shuffle: {shuffle_to_text(theta) or '(identities only)'}")
    print(f"inversions: {inv}")
    for i, path in enumerate(enum):
        states = " -> ".join(shuffle_to_text(s) or "()" for s in path.states())
        print(f"path {i}: swaps {list(path.swaps)}: {states}")
    if enum.truncated:
        print(f"(truncated at {args.limit} paths)")
    bad = [p for p in enum if p.length != inv]
    if bad:
        print("LENGTH MISMATCH", file=sys.stderr)
        return 1
    print(f"{len(enum)} path(s), all of length {inv}")
    return 0


def cmd_chi(args) -> int:
    f = parse_word(args.f)
    g = parse_word(args.g)
    if len(f.word) != 1 or len(g.word) != 1:
        raise BarlaxError("chi takes single generators")
    tup = chi_general(args.k, args.l, args.u, args.v, args.w, f.word[0], g.word[0])
    print(tup)
    return 0


def cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        r=args.r,
        model=args.model,
        split=args.split,
        max_dim=args.max_dim,
        max_size=args.max_size,
        max_len=args.max_len,
        seed=args.seed,
        trials=args.trials,
        limit=args.limit,
        out=args.out,
    )
    records = run_suite(config)
    lines = [rec.to_json() for rec in records]
    if args.out:
        with open(args.out, "w") as handle:
            handle.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    failures = [rec for rec in records if not rec.verdict]
    print(
        f"{len(records) - len(failures)}/{len(records)} instance groups passed",
        file=sys.stderr,
    )
    for rec in failures[:10]:
        print(f"FAIL {rec.suite} {rec.instance}: {rec.witness}", file=sys.stderr)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barlax",
        description="simplicial rewriting and exact verification of "
        "iterated monoidal structure",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("normalize", help="rewrite a word to normal form")
    p_norm.add_argument("word", help="e.g. 'd2_1 . d3_3'")
    p_norm.set_defaults(func=cmd_normalize)

    p_paths = sub.add_parser("paths", help="enumerate normalizing paths")
    p_paths.add_argument("shuffle", help="e.g. '(d3_2 @2) (d2_1 @1)'")
    p_paths.add_argument("--limit", type=int, default=None)
    p_paths.set_defaults(func=cmd_paths)

    p_chi = sub.add_parser("chi", help="print an interchange tuple")
    p_chi.add_argument("f")
    p_chi.add_argument("g")
    p_chi.add_argument("--k", type=int, default=1)
    p_chi.add_argument("--l", type=int, default=2)
    p_chi.add_argument("--u", type=int, default=1)
    p_chi.add_argument("--v", type=int, default=1)
    p_chi.add_argument("--w", type=int, default=1)
    p_chi.set_defaults(func=cmd_chi)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--model", default=None,
                          help="finset:r=3,split=1 | finset-corrupt:... | free:r=3")
    p_verify.add_argument("--r", type=int, default=3)
    p_verify.add_argument("--split", type=int, default=None,
                          help="pin the coproduct/product split (default: sweep or r//2)")
    p_verify.add_argument("--max-dim", type=int, default=3)
    p_verify.add_argument("--max-size", type=int, default=3)
    p_verify.add_argument("--max-len", type=int, default=3)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--limit", type=int, default=None)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BarlaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
