"""Brute-force construction and checks, kept structurally apart from the embedder.

Everything here materializes sets of words and compares them; nothing calls the
embedder's branch logic.  Cosets are enumerated by spanning component bases
rather than by filtering H.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .components import ComponentSpec, component_words
from .embedder import SeedCode
from .gf2core import BitWord, CoordinateMap, coordinate_map, hamming_basis, int_to_str, span

EXPLICIT_LIMIT = 4
EXPLICIT_LIMIT_FLAGGED = 5
REPORT_LIMIT = 20


class SizeLimit(ValueError):
    pass


class LemmaHypothesis(ValueError):
    """Lemma preconditions are not met by the given index words."""


@dataclass(frozen=True)
class ExplicitCode:
    n: int
    words: frozenset[int]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, x: BitWord | int) -> bool:
        if isinstance(x, BitWord):
            return x.length == self.n and x.value in self.words
        return x in self.words

    def bitwords(self) -> list[BitWord]:
        return sorted((BitWord(self.n, w) for w in self.words), key=str)

    @classmethod
    def from_words(cls, n: int, words: Iterable[BitWord]) -> "ExplicitCode":
        values = set()
        for w in words:
            if w.length != n:
                raise ValueError(f"word {w} has length {w.length}, expected {n}")
            values.add(w.value)
        return cls(n, frozenset(values))


def _limit(m: int, allow_m5: bool) -> None:
    limit = EXPLICIT_LIMIT_FLAGGED if allow_m5 else EXPLICIT_LIMIT
    if m > limit:
        raise SizeLimit(f"m={m} exceeds the explicit-construction limit {limit}")


def hamming_words(cmap: CoordinateMap) -> set[int]:
    if cmap.m <= EXPLICIT_LIMIT:
        # straight from the definition: every word with zero syndrome
        return {x for x in range(1 << cmap.n) if cmap.syndrome_int(x) == 0}
    return set(span(hamming_basis(cmap)))


def explicit_construction(seed: SeedCode, allow_m5: bool = False) -> ExplicitCode:
    """P(C) as a literal set: H minus the removed cosets plus the switched-in ones."""
    _limit(seed.m, allow_m5)
    cmap = coordinate_map(seed.m)
    code = hamming_words(cmap)
    hamming = frozenset(code)
    added: set[int] = set()
    for iota in seed.nonzero:
        spec = ComponentSpec(iota, cmap)
        removed = set(component_words(spec, iota ^ cmap.unit(iota)))
        assert removed <= hamming, f"removed coset for {int_to_str(iota, seed.m)} leaves H"
        code -= removed
        added.update(component_words(spec, iota))
    code |= added
    if seed.offset:
        code = {w ^ seed.offset for w in code}
    return ExplicitCode(cmap.n, frozenset(code))


def _ball(words: Iterable[int], n: int) -> set[int]:
    out = set()
    flips = [1 << i for i in range(n)]
    for w in words:
        out.add(w)
        out.update(w ^ f for f in flips)
    return out


def neighborhood(code: ExplicitCode) -> set[BitWord]:
    return {BitWord(code.n, w) for w in _ball(code.words, code.n)}


@dataclass
class PerfectnessReport:
    n: int
    codewords: int
    words_checked: int
    violations: int
    examples: list[tuple[str, int]] = field(default_factory=list)

    @property
    def perfect(self) -> bool:
        return self.violations == 0 and self.words_checked == 1 << self.n

    def lines(self) -> list[str]:
        verdict = "perfect" if self.perfect else "NOT perfect"
        out = [
            f"n={self.n} codewords={self.codewords} coverage counts={self.words_checked} "
            f"violations={self.violations}: {verdict}"
        ]
        for word, count in self.examples:
            out.append(f"  {word} covered {count} times")
        return out


def brute_force_perfect(code: ExplicitCode, allow_m5: bool = False) -> PerfectnessReport:
    """Count, for every word of F^n, the codewords at distance <= 1."""
    n = code.n
    if n > (31 if allow_m5 else 15):
        raise SizeLimit(f"n={n} too large for exhaustive coverage counting")
    if n > 15:
        return _coverage_numpy(code)
    counts = bytearray(1 << n)
    flips = [1 << i for i in range(n)]
    for w in code.words:
        counts[w] += 1
        for f in flips:
            counts[w ^ f] += 1
    bad = [x for x, c in enumerate(counts) if c != 1]
    return PerfectnessReport(
        n=n,
        codewords=len(code),
        words_checked=len(counts),
        violations=len(bad),
        examples=[(int_to_str(x, n), counts[x]) for x in bad[:REPORT_LIMIT]],
    )


def _coverage_numpy(code: ExplicitCode) -> PerfectnessReport:
    import numpy as np

    words = np.fromiter(code.words, dtype=np.uint32, count=len(code.words))
    return coverage_from_array(words, code.n)


def coverage_from_array(words, n: int, chunk: int = 1 << 22) -> PerfectnessReport:
    """Coverage check for a large code held as a numpy uint32 array (n <= 31).

    Only a covered/uncovered bitmap is kept.  When the balls contribute exactly
    2^n marks, full coverage forces every count to be 1 (pigeonhole), so
    violations are reported as uncovered words plus any surplus marks.
    """
    import numpy as np

    covered = np.zeros(max((1 << n) >> 3, 1), dtype=np.uint8)
    for start in range(0, len(words), chunk):
        block = words[start:start + chunk].astype(np.uint32)
        for f in [0] + [1 << i for i in range(n)]:
            x = block ^ np.uint32(f)
            np.bitwise_or.at(covered, x >> 3, np.left_shift(1, x & 7).astype(np.uint8))
    bits = np.unpackbits(covered, bitorder="little")[: 1 << n]
    uncovered = np.flatnonzero(bits == 0)
    surplus = max(len(words) * (n + 1) - (1 << n), 0)
    return PerfectnessReport(
        n=n,
        codewords=len(words),
        words_checked=1 << n,
        violations=len(uncovered) + surplus,
        examples=[(int_to_str(int(x), n), 0) for x in uncovered[:REPORT_LIMIT]],
    )


def _component_set(spec: ComponentSpec, shift: int) -> set[int]:
    return set(component_words(spec, shift))


def lemma1_check(iota: BitWord, z: BitWord, cmap: CoordinateMap) -> bool:
    """Neighborhoods of R_iota + z and R_iota + z + e(iota) coincide."""
    if cmap.m > EXPLICIT_LIMIT:
        raise SizeLimit(f"m={cmap.m} exceeds {EXPLICIT_LIMIT}")
    if z.length != cmap.n or iota.length != cmap.m:
        raise ValueError("word lengths do not match the coordinate map")
    spec = ComponentSpec.of(iota, cmap)
    a = _ball(_component_set(spec, z.value), cmap.n)
    b = _ball(_component_set(spec, z.value ^ cmap.unit(iota.value)), cmap.n)
    return a == b


EXHAUSTIVE_COSET_LIMIT = 1 << 16


def lemma3_check(
    iota: BitWord,
    kappa: BitWord,
    cmap: CoordinateMap,
    samples: int = 100_000,
    rng: random.Random | None = None,
) -> bool:
    """The removed cosets for iota and kappa are disjoint and miss 0^n.

    The iota coset is enumerated in full when it has at most 2^16 words and
    sampled (``samples`` uniform draws) otherwise; each element is tested for
    membership in the kappa coset.
    """
    i, k = iota.value, kappa.value
    if iota.length != cmap.m or kappa.length != cmap.m:
        raise ValueError("index words must have length m")
    if i.bit_count() < 3 or k.bit_count() < 3 or (i ^ k).bit_count() < 3:
        raise LemmaHypothesis(
            f"need weight >= 3 and distance >= 3, got {iota} and {kappa} "
            f"at distance {(i ^ k).bit_count()}"
        )
    si, sk = ComponentSpec(i, cmap), ComponentSpec(k, cmap)
    shift_i = i ^ cmap.unit(i)
    shift_k = k ^ cmap.unit(k)
    if si.contains(shift_i) or sk.contains(shift_k):
        return False
    if si.dimension <= EXHAUSTIVE_COSET_LIMIT.bit_length() - 1:
        words: Iterable[int] = component_words(si, shift_i)
    else:
        rng = rng or random.Random(0)
        basis = si.basis()
        words = (_random_combination(basis, rng) ^ shift_i for _ in range(samples))
    return not any(sk.contains(w ^ shift_k) for w in words)


def _random_combination(basis: list[int], rng: random.Random) -> int:
    mask = rng.getrandbits(len(basis))
    out = 0
    for g in basis:
        if mask & 1:
            out ^= g
        mask >>= 1
    return out


def random_component_word(spec: ComponentSpec, rng: random.Random) -> int:
    return _random_combination(spec.basis(), rng)


def _span_array(basis: list[int], shift: int = 0):
    import numpy as np

    arr = np.array([shift], dtype=np.uint32)
    for g in basis:
        arr = np.concatenate([arr, arr ^ np.uint32(g)])
    return arr


def explicit_array(seed: SeedCode):
    """Same construction as explicit_construction, as a numpy uint32 array (m <= 5)."""
    import numpy as np

    _limit(seed.m, True)
    cmap = coordinate_map(seed.m)
    hamming = _span_array(hamming_basis(cmap))
    removed, added = [], []
    for iota in seed.nonzero:
        spec = ComponentSpec(iota, cmap)
        coset = _span_array(spec.basis(), iota ^ cmap.unit(iota))
        assert np.isin(coset, hamming).all(), "removed coset leaves H"
        removed.append(coset)
        added.append(_span_array(spec.basis(), iota))
    if removed:
        hamming = hamming[~np.isin(hamming, np.concatenate(removed))]
    code = np.concatenate([hamming, *added])
    if seed.offset:
        code ^= np.uint32(seed.offset)
    return code
