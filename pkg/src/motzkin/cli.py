"""Command-line surface.  Thin adapters only: parse arguments, call the
library, print.  Words go on the command line as plain arguments; quote
them, since shells treat parentheses specially."""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, oracle, pair_arith, sequences, weights, word_model
from .errors import MotzkinError

# Table cell for derivative orders a pair cannot reach (k <= s).
DASH = "–"

_SEQUENCES = {
    "motzkin": (0, sequences.motzkin_number),
    "unique": (1, sequences.unique_count),
    "delta": (1, sequences.delta),
    "delta-prime": (2, sequences.delta_prime),
}


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected open,close positions like 3,7 (got {text!r})")


def _cmd_rank(args) -> int:
    print(weights.rank(word_model.parse(args.word)))
    return 0


def _cmd_unrank(args) -> int:
    print(weights.unrank(args.index))
    return 0


def _cmd_decompose(args) -> int:
    d = weights.decompose(word_model.parse(args.word))
    if args.json:
        doc = {
            "length": d.word_length,
            "pairs": [{"n": e.n, "k": e.k, "depth": e.depth,
                       "contribution": e.contribution} for e in d.entries],
            "total": d.total,
        }
        print(json.dumps(doc))
    else:
        for e in d.entries:
            print(f"{e.n} {e.k} {e.depth} {e.contribution}")
        print(f"total {d.total}")
    return 0


def _cmd_compose(args) -> int:
    print(weights.compose(args.length, args.pair))
    return 0


def _cmd_add(args) -> int:
    print(pair_arith.padd(word_model.parse(args.x), word_model.parse(args.y)))
    return 0


def _cmd_sub(args) -> int:
    print(pair_arith.psub(word_model.parse(args.x), word_model.parse(args.y)))
    return 0


def _cmd_seq(args) -> int:
    first, fn = _SEQUENCES[args.name]
    for i in range(first, args.upto + 1):
        print(fn(i))
    return 0


def _cmd_enumerate(args) -> int:
    for w in oracle.enumerate_range(args.length):
        print(w)
    return 0


def _cmd_table(args) -> int:
    print("\t".join(["no", "n/k", "word", "M_k", "wt", "wt'", "wt''",
                     "wt'''", "wt^iv", "wt^v"]))
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            cells = [
                str(weights.pair_catalog_index(n, k)),
                f"{n}/{k}",
                str(weights.prime_pair_word(n, k)),
                str(sequences.motzkin_number(k)),
            ]
            cells += [str(weights.pair_nest_weight(n, k, s)) if s < k else DASH
                      for s in range(6)]
            print("\t".join(cells))
    return 0


def _cmd_verify(args) -> int:
    all_passed = True
    for result in checks.run_checks(args.max_len):
        status = "PASS" if result.passed else "FAIL"
        all_passed = all_passed and result.passed
        print(f"{status} {result.name} ({result.detail})")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin",
        description="Arithmetic of ordered Motzkin words: ranks, prime-pair "
                    "decomposition, nest-weights, and a brute-force verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="print the rank of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", help="print the word with the given rank")
    p.add_argument("index", type=int)
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("decompose", help="list the prime pairs of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("compose", help="rebuild a word from pair positions")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--pair", type=_parse_pair, action="append", default=[],
                   metavar="OPEN,CLOSE", help="may be repeated")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("add", help="partial addition of two words")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("sub", help="partial subtraction of two words")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_sub)

    p = sub.add_parser("seq", help="print an integer sequence, one value per line")
    p.add_argument("name", choices=sorted(_SEQUENCES))
    p.add_argument("--upto", type=int, required=True,
                   help="last index to print (inclusive)")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("enumerate", help="all canonical words of one length, in order")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("table", help="nest-weight table of all prime pairs up to a size")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check the formulas against brute force")
    p.add_argument("--max-len", type=int, required=True, dest="max_len")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MotzkinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
