"""
Command-line interface.

Words are whitespace-separated signed integers, e.g. ``"1 -2 1"``. Exit
status is 0 on success, 1 on domain errors (message on stderr) and 2 on usage
errors. Every command accepts ``--json``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import word_problem
from .blocks import block_linking, block_profile, block_twist, cable, parse_sizes
from .braid_core import BraidError, BraidWord, format_word, parse_word
from .certify import load_candidates, lower_bound_certificate
from .examples import Variant, build
from .pure_braid import linking_matrix

_WORD_ARG = re.compile(r"\s*-?\d+(\s+-?\d+)+\s*")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _nf_json(nf) -> dict:
    return {"n": nf.strand_count, "inf": nf.inf, "factors": [list(f.images) for f in nf.factors]}


def cmd_wp(args) -> None:
    engine = args.engine
    if args.wp_command == "is-trivial":
        u = parse_word(args.word, args.n)
        verdict = word_problem.is_identity(u, engine)
        _emit(args, {"trivial": verdict}, "trivial" if verdict else "nontrivial")
    elif args.wp_command == "equal":
        u, v = parse_word(args.word1, args.n), parse_word(args.word2, args.n)
        verdict = word_problem.equal(u, v, engine)
        _emit(args, {"equal": verdict}, "equal" if verdict else "not equal")
    elif args.wp_command == "commutes":
        u, v = parse_word(args.word1, args.n), parse_word(args.word2, args.n)
        verdict = word_problem.commutes(u, v, engine)
        _emit(args, {"commutes": verdict}, "commute" if verdict else "do not commute")
    else:
        nf = word_problem.normal_form(parse_word(args.word, args.n))
        _emit(args, _nf_json(nf), str(nf))


def cmd_lk(args) -> None:
    lk = linking_matrix(parse_word(args.word, args.n))
    _emit(
        args,
        {"n": lk.strand_count, "entries": [[i, j, v] for (i, j), v in lk.items()]},
        "\n".join(f"{i} {j} {v}" for (i, j), v in lk.items()),
    )


def _word_payload(u: BraidWord, **extra) -> dict:
    return {**extra, "n": u.strand_count, "word": list(u.letters)}


def cmd_cable(args) -> None:
    gamma = parse_word(args.word, args.n if args.n is not None else _guess_n(args.word))
    u = cable(gamma, args.size)
    _emit(args, _word_payload(u, size=args.size), format_word(u))


def _guess_n(text: str) -> int:
    try:
        return max((abs(int(t)) for t in text.split()), default=0) + 1
    except ValueError:
        raise BraidError(f"malformed word {text!r}") from None


def cmd_block_twist(args) -> None:
    structure = parse_sizes(args.sizes)
    u = block_twist(args.i, structure)
    _emit(args, _word_payload(u, sizes=list(structure.sizes)), format_word(u))


def cmd_block_linking(args) -> None:
    structure = parse_sizes(args.sizes)
    u = block_linking(args.j, args.k, structure)
    _emit(args, _word_payload(u, sizes=list(structure.sizes)), format_word(u))


def cmd_profile(args) -> None:
    structure = parse_sizes(args.sizes)
    prof = block_profile(parse_word(args.word, structure.strand_count), structure)
    cross = sorted(prof.cross.items())
    text = [f"internal {' '.join(map(str, prof.internal))}"]
    text += [f"cross {j} {k} {v}" for (j, k), v in cross]
    _emit(
        args,
        {"sizes": list(structure.sizes), "internal": list(prof.internal), "cross": [[j, k, v] for (j, k), v in cross]},
        "\n".join(text),
    )


def _instance(args):
    params = args.powers if args.variant == Variant.PSEUDO_ANOSOV.value else args.exps
    if params is None:
        params = list(range(1, args.m + 1))
    return build(args.variant, args.m, params)


def cmd_example(args) -> None:
    args.variant = args.example_command
    inst = _instance(args)
    text = f"n {inst.n}\nsizes {','.join(map(str, inst.structure.sizes))}\nbeta {format_word(inst.beta)}"
    _emit(args, inst.to_json(), text)


def cmd_certify(args) -> None:
    inst = _instance(args)
    candidates = load_candidates(args.candidates, inst.n) if args.candidates else None
    text = lower_bound_certificate(inst, candidates).dumps()
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    print(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="braidcent", description="Exact braid group computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    wp = sub.add_parser("wp", help="word problem")
    wp_sub = wp.add_subparsers(dest="wp_command", required=True)
    for name, nwords in [("is-trivial", 1), ("equal", 2), ("commutes", 2), ("nf", 1)]:
        p = wp_sub.add_parser(name, parents=[common])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--engine", choices=sorted(word_problem.ENGINES), default="dynnikov")
        if nwords == 1:
            p.add_argument("word")
        else:
            p.add_argument("word1")
            p.add_argument("word2")
        p.set_defaults(func=cmd_wp)

    p = sub.add_parser("lk", parents=[common], help="linking numbers of a pure braid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("cable", parents=[common], help="replace each strand by parallel strands")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--n", type=int, help="strands of the input braid (default: 1 + largest generator)")
    p.add_argument("word")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("block-twist", parents=[common])
    p.add_argument("--sizes", required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_block_twist)

    p = sub.add_parser("block-linking", parents=[common])
    p.add_argument("--sizes", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_block_linking)

    p = sub.add_parser("profile", parents=[common], help="block profile of a block-preserving braid")
    p.add_argument("--sizes", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_profile)

    def example_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--exps", type=_int_list, help="twist exponents (default 1..m)")
        p.add_argument("--powers", type=_int_list, help="pseudo-Anosov powers (default 1..m)")

    ex = sub.add_parser("example", help="build a counterexample braid")
    ex_sub = ex.add_subparsers(dest="example_command", required=True)
    for v in Variant:
        p = ex_sub.add_parser(v.value, parents=[common])
        example_args(p)
        p.set_defaults(func=cmd_example)

    p = sub.add_parser("certify", parents=[common], help="emit a generator lower-bound certificate (JSON)")
    p.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    example_args(p)
    p.add_argument("--candidates", help="JSON file of candidates overriding the defaults")
    p.add_argument("--out", help="also write the certificate to this file")
    p.set_defaults(func=cmd_certify)
    return parser


def _protect_words(argv: Sequence[str]) -> list[str]:
    # argparse would read "-1 2" as an option; a leading space makes it positional
    return [" " + a if a.startswith("-") and _WORD_ARG.fullmatch(a) else a for a in argv]


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_protect_words(argv))
    try:
        args.func(args)
    except (BraidError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
