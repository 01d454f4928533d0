"""Command-line interface.

Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 verification failure.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import oracle as brute
from .embedder import EmbeddingOracle, EnumerationLimit, SeedError, validate_seed
from .gf2core import BitWord, LengthMismatch, int_to_str
from .steiner import (
    TripleSystemError,
    embed_partial_sts,
    extract_sts,
    format_triples,
    parse_triples,
    verify_sts,
)

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class InputError(ValueError):
    pass


def parse_code(text: str) -> tuple[int, list[BitWord]]:
    """Code file: 'm=<int>' header, then one m-bit string per line; '#' comments."""
    m = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m is None:
            if not line.startswith("m="):
                raise InputError(f"line {lineno}: expected 'm=<int>' header")
            try:
                m = int(line[2:])
            except ValueError:
                raise InputError(f"line {lineno}: bad header {line!r}") from None
            continue
        try:
            w = BitWord.from_str(line)
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
        if w.length != m:
            raise InputError(f"line {lineno}: word {line} has length {w.length}, expected {m}")
        words.append(w)
    if m is None:
        raise InputError("missing 'm=<int>' header")
    return m, words


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def load_oracle(path: str) -> EmbeddingOracle:
    m, words = parse_code(_read(path))
    return EmbeddingOracle(validate_seed(m, words))


def _word_arg(oracle: EmbeddingOracle, s: str) -> BitWord:
    w = BitWord.from_str(s)
    if w.length != oracle.n:
        raise LengthMismatch(f"word has length {w.length}, expected n={oracle.n}")
    return w


# subcommands


def cmd_embed(args) -> int:
    oracle = load_oracle(args.code)
    s = oracle.summary()
    if oracle.m <= 4:
        size = sum(1 for _ in oracle.iter_ints())
        label = "enumerated"
    else:
        size, label = oracle.size, "formula 2^n/(n+1)"
    print(f"m={s['m']} |C|={s['codewords']} offset={s['offset']} n={s['n']} |P|={size} ({label})")
    if args.dump is not None:
        lines = (int_to_str(x, oracle.n) + "\n" for x in oracle.iter_ints(allow_m5=args.allow_m5))
        if args.dump == "-":
            sys.stdout.writelines(lines)
        else:
            with open(args.dump, "w") as fh:
                fh.writelines(lines)
    return EXIT_OK


def cmd_member(args) -> int:
    oracle = load_oracle(args.code)
    print("IN" if oracle.is_member(_word_arg(oracle, args.word)) else "OUT")
    return EXIT_OK


def cmd_decode(args) -> int:
    oracle = load_oracle(args.code)
    y = _word_arg(oracle, args.word)
    p = oracle.decode(y)
    flipped = (p + y).support()
    print(p)
    print(f"flipped position {flipped[0]}" if flipped else "flipped position none")
    return EXIT_OK


class Checks:
    """Collects named pass/fail lines for the verify subcommand."""

    def __init__(self) -> None:
        self.failed = 0

    def run(self, name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        t0 = time.perf_counter()
        ok, detail = fn()
        dt = time.perf_counter() - t0
        self.failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail} [{dt:.2f}s]")


def _decode_sample(oracle: EmbeddingOracle, count: int, rng: random.Random) -> tuple[bool, str]:
    bad = 0
    for _ in range(count):
        y = rng.getrandbits(oracle.n)
        p = oracle.decode_int(y)
        if (p ^ y).bit_count() > 1 or not oracle.contains_int(p):
            bad += 1
    return bad == 0, f"{count} random words, {bad} violations"


def _projection(oracle: EmbeddingOracle) -> tuple[bool, str]:
    got = {w.value for w in oracle.project()}
    ok = got == set(oracle.seed.original)
    return ok, f"{len(got)} words recovered" + ("" if ok else f", expected {len(oracle.seed.original)}")


def run_verification(oracle: EmbeddingOracle, level: str, seed: int = 0,
                     samples: int | None = None, full_coverage: bool = False) -> int:
    rng = random.Random(seed)
    checks = Checks()
    m, n = oracle.m, oracle.n
    checks.run("projection", lambda: _projection(oracle))
    if level == "fast":
        checks.run("decode-sample", lambda: _decode_sample(oracle, samples or 10_000, rng))
    elif level == "exhaustive":
        if m > 4:
            raise InputError("exhaustive verification requires m <= 4")
        explicit = brute.explicit_construction(oracle.seed)

        def agreement():
            bad = sum(1 for x in range(1 << n) if oracle.contains_int(x) != (x in explicit.words))
            return bad == 0, f"{1 << n} words, {bad} disagreements"

        def perfect():
            rep = brute.brute_force_perfect(explicit)
            return rep.perfect and len(explicit) == oracle.size, "; ".join(rep.lines()[:1])

        def decoder():
            bad = 0
            for y in range(1 << n):
                p = oracle.decode_int(y)
                if (p ^ y).bit_count() > 1 or p not in explicit.words:
                    bad += 1
            return bad == 0, f"{1 << n} words, {bad} violations"

        def lemmas():
            cmap = oracle.cmap
            nonzero = oracle.seed.nonzero
            zero = BitWord(n, 0)
            ok = all(brute.lemma1_check(BitWord(m, i), zero, cmap) for i in nonzero)
            pairs = [(i, k) for i in nonzero for k in nonzero if i < k]
            ok = ok and all(brute.lemma3_check(BitWord(m, i), BitWord(m, k), cmap) for i, k in pairs)
            return ok, f"lemma 1 on {len(nonzero)} components, lemma 3 on {len(pairs)} pairs"

        checks.run("oracle-agreement", agreement)
        checks.run("perfectness", perfect)
        checks.run("decoder-totality", decoder)
        checks.run("lemmas", lemmas)
    elif level == "m5-sweep":
        if m != 5:
            raise InputError("m5-sweep requires m = 5")
        checks.run("decode-sample", lambda: _decode_sample(oracle, samples or 1_000_000, rng))
        if full_coverage:
            def coverage():
                rep = brute.coverage_from_array(brute.explicit_array(oracle.seed), n)
                return rep.perfect, rep.lines()[0]
            checks.run("full-coverage", coverage)
    else:
        raise InputError(f"unknown level {level!r}")
    return EXIT_VERIFY if checks.failed else EXIT_OK


def verify_dump(text: str) -> int:
    words = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.append(BitWord.from_str(line))
    if not words:
        raise InputError("no codewords given")
    n = words[0].length
    code = brute.ExplicitCode.from_words(n, words)
    rep = brute.brute_force_perfect(code)
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.perfect else EXIT_VERIFY


def cmd_verify(args) -> int:
    if args.words is not None:
        return verify_dump(_read(args.words))
    if args.code is None:
        raise InputError("give a code file or --words")
    oracle = load_oracle(args.code)
    return run_verification(oracle, args.level, args.seed, args.samples, args.full_coverage)


def cmd_sts(args) -> int:
    if args.action == "extract":
        oracle = load_oracle(args.input)
        _write(args.output, format_triples(extract_sts(oracle)))
        return EXIT_OK
    ts = parse_triples(_read(args.input))
    if args.action == "check":
        report = verify_sts(ts, "partial" if args.partial else "complete")
        for line in report.lines():
            print(line)
        return EXIT_OK if report.valid else EXIT_VERIFY
    result, note = embed_partial_sts(ts)
    print(note, file=sys.stderr)
    _write(args.output, format_triples(result, head=ts.triples))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfembed",
        description="Embed binary 1-codes into 1-perfect codes by switching Hamming-code components",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="build P(C) and print a summary")
    p.add_argument("code")
    p.add_argument("--dump", metavar="FILE", help="write all codewords ('-' for stdout)")
    p.add_argument("--allow-m5", action="store_true", help="permit dumping at m = 5 (2^26 lines)")
    p.set_defaults(func=cmd_embed)

    for name, func in (("member", cmd_member), ("decode", cmd_decode)):
        p = sub.add_parser(name, help=f"{name} query for one word of length n")
        p.add_argument("code")
        p.add_argument("--word", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("code", nargs="?")
    p.add_argument("--level", choices=["fast", "exhaustive", "m5-sweep"], default="fast")
    p.add_argument("--words", metavar="FILE", help="check a codeword dump for perfectness ('-' for stdin)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.add_argument("--full-coverage", action="store_true", help="m5-sweep: also cover all 2^31 words")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sts", help="Steiner triple system tools")
    p.add_argument("action", choices=["embed", "extract", "check"])
    p.add_argument("input", help="triple file (embed, check) or code file (extract)")
    p.add_argument("-o", "--output")
    p.add_argument("--partial", action="store_true", help="check: allow uncovered pairs")
    p.set_defaults(func=cmd_sts)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InputError, SeedError, TripleSystemError, LengthMismatch,
            EnumerationLimit, brute.SizeLimit, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
