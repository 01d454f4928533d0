"""Steiner triple systems: to and from 1-codes and perfect codes.

Points are labelled 1..v.  A triple {a, b, c} becomes the m-word (m = v) with
ones at coordinates a, b, c, so after embedding it sits on positions a, b, c of
the perfect code, which is what keeps input triples verbatim in the output.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .embedder import EmbeddingOracle, SeedCode, SeedError, validate_seed

Triple = tuple[int, int, int]


class TripleSystemError(ValueError):
    pass


@dataclass(frozen=True)
class TripleSystem:
    v: int
    triples: tuple[Triple, ...]

    @classmethod
    def make(cls, v: int, triples: Iterable[Iterable[int]]) -> "TripleSystem":
        out = set()
        for t in triples:
            tt = tuple(sorted(t))
            if len(tt) != 3 or len(set(tt)) != 3:
                raise TripleSystemError(f"not a 3-subset: {tt}")
            if tt[0] < 1 or tt[2] > v:
                raise TripleSystemError(f"triple {tt} has points outside 1..{v}")
            out.add(tt)
        return cls(v, tuple(sorted(out)))

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, t) -> bool:
        return tuple(sorted(t)) in set(self.triples)


@dataclass
class StsReport:
    mode: str
    bad_pairs: list[tuple[tuple[int, int], int]]

    @property
    def valid(self) -> bool:
        return not self.bad_pairs

    def lines(self) -> list[str]:
        if self.valid:
            return [f"valid ({self.mode})"]
        out = [f"invalid ({self.mode}): {len(self.bad_pairs)} bad pairs"]
        out += [f"  pair {a} {b} covered {c} times" for (a, b), c in self.bad_pairs[:20]]
        return out


def verify_sts(ts: TripleSystem, mode: str = "complete") -> StsReport:
    if mode not in ("complete", "partial"):
        raise ValueError(f"mode must be 'complete' or 'partial', got {mode!r}")
    counts: dict[tuple[int, int], int] = {}
    for t in ts.triples:
        for pair in combinations(t, 2):
            counts[pair] = counts.get(pair, 0) + 1
    bad = []
    for pair in combinations(range(1, ts.v + 1), 2):
        c = counts.get(pair, 0)
        if c > 1 or (mode == "complete" and c == 0):
            bad.append((pair, c))
    return StsReport(mode, bad)


def triples_to_code(ts: TripleSystem) -> SeedCode:
    seen: dict[tuple[int, int], Triple] = {}
    for t in ts.triples:
        for pair in combinations(t, 2):
            if pair in seen:
                raise TripleSystemError(
                    f"triples {seen[pair]} and {t} share the pair {pair}"
                )
            seen[pair] = t
    words = [0] + [sum(1 << (p - 1) for p in t) for t in ts.triples]
    try:
        return validate_seed(ts.v, words)
    except SeedError as exc:
        raise TripleSystemError(str(exc)) from exc


def extract_sts(oracle: EmbeddingOracle) -> TripleSystem:
    """Triples of the weight-3 codewords, found by decoding e_a + e_b for every pair."""
    if oracle.seed.offset:
        raise ValueError("the code does not contain the zero word; no Steiner system is implied")
    n = oracle.n
    done = set()
    triples = []
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) in done:
                continue
            p = oracle.decode_int((1 << a) | (1 << b))
            assert p.bit_count() == 3 and p >> a & 1 and p >> b & 1, "pair not completed to a triple"
            c = (p ^ (1 << a) ^ (1 << b)).bit_length() - 1
            t = tuple(sorted((a, b, c)))
            done.update(combinations(t, 2))
            triples.append(tuple(x + 1 for x in t))
    return TripleSystem(n, tuple(sorted(triples)))


def extract_sts_exhaustive(oracle: EmbeddingOracle) -> TripleSystem:
    """Same triples by scanning every codeword (m <= 4)."""
    if oracle.seed.offset:
        raise ValueError("the code does not contain the zero word; no Steiner system is implied")
    triples = []
    for x in oracle.iter_ints():
        if x.bit_count() == 3:
            triples.append(tuple(i + 1 for i in range(oracle.n) if x >> i & 1))
    return TripleSystem(oracle.n, tuple(sorted(triples)))


def embed_partial_sts(ts: TripleSystem) -> tuple[TripleSystem, str]:
    if not 2 <= ts.v <= 16:
        raise TripleSystemError(f"v must lie in [2, 16], got {ts.v}")
    seed = triples_to_code(ts)
    result = extract_sts(EmbeddingOracle(seed))
    note = (
        f"embedded {len(ts)} triples on {ts.v} points into STS({result.v}) "
        f"with {len(result)} triples; points 1..{ts.v} kept"
    )
    return result, note


# triple file format: "v=<int>" then one ascending triple per line


def parse_triples(text: str) -> TripleSystem:
    v = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if v is None:
            if not line.startswith("v="):
                raise TripleSystemError(f"line {lineno}: expected 'v=<int>' header")
            try:
                v = int(line[2:])
            except ValueError:
                raise TripleSystemError(f"line {lineno}: bad header {line!r}") from None
            continue
        parts = line.split()
        try:
            t = [int(p) for p in parts]
        except ValueError:
            raise TripleSystemError(f"line {lineno}: not integers: {line!r}") from None
        if len(t) != 3:
            raise TripleSystemError(f"line {lineno}: expected 3 points, got {len(t)}")
        triples.append(t)
    if v is None:
        raise TripleSystemError("missing 'v=<int>' header")
    return TripleSystem.make(v, triples)


def format_triples(ts: TripleSystem, head: Iterable[Triple] = ()) -> str:
    """Render a triple file; triples listed in ``head`` come first, in that order."""
    first = [tuple(sorted(t)) for t in head]
    chosen = set(first)
    rest = [t for t in ts.triples if t not in chosen]
    lines = [f"v={ts.v}"] + [" ".join(map(str, t)) for t in first + rest]
    return "\n".join(lines) + "\n"
