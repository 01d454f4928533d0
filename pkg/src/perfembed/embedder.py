"""Embedding a 1-code C of length m into a 1-perfect code P(C) of length 2^m - 1.

P(C) is the Hamming code with, for every nonzero codeword iota of C, the coset
R_iota + iota^ + e(iota) taken out and the coset R_iota + iota^ put in its place
(iota^ is iota padded with zeros to length n).  Seeds that do not contain the
zero word are translated first; every public operation translates back, so the
oracle always describes a perfect code that contains the original words.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .components import ComponentSpec
from .gf2core import (
    M_MAX,
    M_MIN,
    BitWord,
    CoordinateMap,
    LengthMismatch,
    ascending_affine,
    coordinate_map,
    hamming_basis,
    int_to_str,
    reverse_bits,
)

ENUMERATION_LIMIT = 4
ENUMERATION_LIMIT_FLAGGED = 5


class SeedError(ValueError):
    """The input words do not form a usable 1-code."""


class EnumerationLimit(ValueError):
    pass


@dataclass(frozen=True)
class SeedCode:
    m: int
    codewords: frozenset[int]
    offset: int = 0
    original: frozenset[int] = field(default=frozenset())

    @property
    def nonzero(self) -> list[int]:
        """The nonzero normalized codewords, ascending."""
        return sorted(c for c in self.codewords if c)

    def words(self) -> list[BitWord]:
        return [BitWord(self.m, c) for c in sorted(self.codewords)]

    def original_words(self) -> list[BitWord]:
        return [BitWord(self.m, c) for c in sorted(self.original, key=lambda c: int_to_str(c, self.m))]


def _as_ints(m: int, words: Iterable[BitWord | str | int]) -> list[int]:
    out = []
    for w in words:
        if isinstance(w, str):
            w = BitWord.from_str(w)
        if isinstance(w, BitWord):
            if w.length != m:
                raise SeedError(f"word {w} has length {w.length}, expected {m}")
            out.append(w.value)
        else:
            if not 0 <= w < (1 << m):
                raise SeedError(f"word {w} does not fit in {m} bits")
            out.append(int(w))
    return out


def validate_seed(m: int, words: Iterable[BitWord | str | int]) -> SeedCode:
    """Check that ``words`` is a 1-code of length m and normalize it to contain 0^m.

    Raises SeedError naming the first offending pair (in rendering order).
    """
    if not M_MIN <= m <= M_MAX:
        raise SeedError(f"m must lie in [{M_MIN}, {M_MAX}], got {m}")
    ints = _as_ints(m, words)
    if not ints:
        raise SeedError("seed code is empty")
    seen = set()
    for w in ints:
        if w in seen:
            raise SeedError(f"duplicate codeword {int_to_str(w, m)}")
        seen.add(w)
    ordered = sorted(ints, key=lambda w: int_to_str(w, m))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            d = (a ^ b).bit_count()
            if d < 3:
                raise SeedError(
                    f"pair ({int_to_str(a, m)},{int_to_str(b, m)}) at distance {d} < 3"
                )
    offset = 0 if 0 in seen else ordered[0]
    return SeedCode(
        m=m,
        codewords=frozenset(w ^ offset for w in ints),
        offset=offset,
        original=frozenset(ints),
    )


def normalize_seed(m: int, words: Iterable[BitWord | str | int]) -> SeedCode:
    """Translate a 1-code by its smallest word (rendering order) when 0^m is missing."""
    return validate_seed(m, words)


class EmbeddingOracle:
    """Immutable handle on P(C): membership, decoding, enumeration, projection."""

    def __init__(self, seed: SeedCode) -> None:
        self.seed = seed
        self.cmap: CoordinateMap = coordinate_map(seed.m)
        self.components: dict[int, ComponentSpec] = {
            iota: ComponentSpec(iota, self.cmap) for iota in seed.nonzero
        }
        # syndrome -> component whose switched-in coset has that syndrome
        self.syndrome_table = self.components
        # shifts of the removed cosets: iota^ + e(iota)
        self._removed = [
            (iota, spec, iota | self.cmap.unit(iota)) for iota, spec in self.components.items()
        ]
        self._offset = seed.offset
        self._frozen = True

    @classmethod
    def build(cls, m: int, words: Iterable[BitWord | str | int]) -> "EmbeddingOracle":
        return cls(validate_seed(m, words))

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("EmbeddingOracle is immutable")
        super().__setattr__(name, value)

    @property
    def m(self) -> int:
        return self.seed.m

    @property
    def n(self) -> int:
        return self.cmap.n

    @property
    def size(self) -> int:
        return 1 << (self.n - self.m)

    # int-level core; words here are already translated by the offset

    def _removed_by(self, h: int) -> int:
        """The iota whose removed coset holds the H-word ``h``, or 0."""
        hit = 0
        for iota, spec, shift in self._removed:
            if spec.contains(h ^ shift):
                if __debug__ and hit:
                    raise AssertionError(f"removed cosets {hit} and {iota} overlap")
                hit = iota
                if not __debug__:
                    break
        return hit

    def _member(self, x: int) -> bool:
        s = self.cmap.syndrome_int(x)
        if s == 0:
            return self._removed_by(x) == 0
        spec = self.components.get(s)
        return spec is not None and spec.contains(x ^ s)

    def _decode(self, y: int) -> int:
        cmap = self.cmap
        s = cmap.syndrome_int(y)
        if s == 0:
            iota = self._removed_by(y)
            return y if iota == 0 else y ^ cmap.unit(iota)
        spec = self.components.get(s)
        if spec is not None and spec.contains(y ^ s):
            return y
        h = y ^ cmap.unit(s)
        iota = self._removed_by(h)
        if iota == 0:
            return h
        # iota == s would have been caught above
        assert iota != s, "decoder reached an impossible case"
        return y ^ cmap.unit(s ^ iota)

    def contains_int(self, x: int) -> bool:
        return self._member(x ^ self._offset)

    def decode_int(self, y: int) -> int:
        return self._decode(y ^ self._offset) ^ self._offset

    # BitWord-level API

    def _check(self, x: BitWord) -> int:
        if x.length != self.n:
            raise LengthMismatch(f"expected a word of length {self.n}, got {x.length}")
        return x.value

    def is_member(self, x: BitWord) -> bool:
        return self.contains_int(self._check(x))

    def decode(self, y: BitWord) -> BitWord:
        return BitWord(self.n, self.decode_int(self._check(y)))

    def project(self) -> set[BitWord]:
        return {BitWord(self.m, k) for k in range(1 << self.m) if self.contains_int(k)}

    def iter_ints(self, allow_m5: bool = False) -> Iterator[int]:
        """Codewords as ints, ascending in rendering order."""
        limit = ENUMERATION_LIMIT_FLAGGED if allow_m5 else ENUMERATION_LIMIT
        if self.m > limit:
            raise EnumerationLimit(
                f"m={self.m} exceeds the enumeration limit {limit}; "
                "use membership/decoding queries instead"
            )
        n, off = self.n, self._offset
        h_basis = hamming_basis(self.cmap)

        def kept_hamming() -> Iterator[int]:
            for x in ascending_affine(h_basis, off, n):
                if self._removed_by(x ^ off) == 0:
                    yield x

        streams = [kept_hamming()]
        for iota, spec in self.components.items():
            streams.append(ascending_affine(spec.basis(), iota ^ off, n))
        return heapq.merge(*streams, key=lambda x: reverse_bits(x, n))

    def enumerate_codewords(self, allow_m5: bool = False) -> Iterator[BitWord]:
        for x in self.iter_ints(allow_m5):
            yield BitWord(self.n, x)

    def summary(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "codewords": len(self.seed.codewords),
            "offset": int_to_str(self._offset, self.m),
            "size": self.size,
        }


def build_oracle(seed: SeedCode) -> EmbeddingOracle:
    return EmbeddingOracle(seed)


def is_member(x: BitWord, oracle: EmbeddingOracle) -> bool:
    return oracle.is_member(x)


def decode(y: BitWord, oracle: EmbeddingOracle) -> BitWord:
    return oracle.decode(y)


def enumerate_codewords(oracle: EmbeddingOracle, allow_m5: bool = False) -> Iterator[BitWord]:
    return oracle.enumerate_codewords(allow_m5)


def project(oracle: EmbeddingOracle) -> set[BitWord]:
    return oracle.project()
