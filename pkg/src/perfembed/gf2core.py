"""Binary words, the coordinate indexing of F^n, syndromes and Hamming-code membership.

Words are stored as Python ints: coordinate ``i`` (1-based) is bit ``i - 1``.
For m-words this makes the integer value sum(alpha_i * 2**(i-1)), i.e. alpha_1
is the least significant bit.  The external rendering is a '0'/'1' string whose
leftmost character is coordinate 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

M_MIN = 2
M_MAX = 16


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True, order=False)
class BitWord:
    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError(f"word length must be positive, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, s: str) -> "BitWord":
        s = s.strip()
        if not s or any(ch not in "01" for ch in s):
            raise ValueError(f"not a bit string: {s!r}")
        value = 0
        for i, ch in enumerate(s):
            if ch == "1":
                value |= 1 << i
        return cls(len(s), value)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitWord":
        return cls.from_str("".join("1" if b else "0" for b in bits))

    @classmethod
    def zero(cls, length: int) -> "BitWord":
        return cls(length, 0)

    def __str__(self) -> str:
        return int_to_str(self.value, self.length)

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def __add__(self, other: "BitWord") -> "BitWord":
        return word_add(self, other)

    def __getitem__(self, pos: int) -> int:
        """Coordinate at 1-based position ``pos``."""
        if not 1 <= pos <= self.length:
            raise IndexError(pos)
        return (self.value >> (pos - 1)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> list[int]:
        """1-based positions holding a one."""
        return [i + 1 for i in range(self.length) if (self.value >> i) & 1]


def int_to_str(value: int, length: int) -> str:
    return "".join("1" if (value >> i) & 1 else "0" for i in range(length))


def _check_lengths(a: BitWord, b: BitWord) -> None:
    if a.length != b.length:
        raise LengthMismatch(f"length mismatch: {a.length} vs {b.length}")


def word_add(a: BitWord, b: BitWord) -> BitWord:
    _check_lengths(a, b)
    return BitWord(a.length, a.value ^ b.value)


def weight(w: BitWord) -> int:
    return w.weight


def distance(a: BitWord, b: BitWord) -> int:
    _check_lengths(a, b)
    return (a.value ^ b.value).bit_count()


class LinearMap:
    """A GF(2)-linear map from n-bit ints to ints, given by the image of each bit.

    For moderate n the image is computed from per-byte lookup tables, which
    keeps the hot loops (syndromes, component tests) at n/8 lookups per word.
    """

    TABLE_LIMIT = 256

    def __init__(self, images: Sequence[int]) -> None:
        self.images = tuple(images)
        self.n = len(self.images)
        self._tables: list[list[int]] | None = None
        if self.n <= self.TABLE_LIMIT:
            tables = []
            for start in range(0, self.n, 8):
                chunk = self.images[start:start + 8]
                table = [0] * (1 << len(chunk))
                for v in range(1, len(table)):
                    low = v & -v
                    table[v] = table[v ^ low] ^ chunk[low.bit_length() - 1]
                tables.append(table)
            self._tables = tables

    def __call__(self, x: int) -> int:
        out = 0
        if self._tables is not None:
            for table in self._tables:
                out ^= table[x & 0xFF]
                x >>= 8
            return out
        images = self.images
        while x:
            low = x & -x
            out ^= images[low.bit_length() - 1]
            x ^= low
        return out


@dataclass(frozen=True)
class CoordinateMap:
    """Bijection between positions 1..n and the nonzero m-words.

    Positions 1..m carry the natural basis words; positions m+1..n carry the
    remaining nonzero m-words in increasing integer value.
    """

    m: int
    pos_to_index: tuple[int, ...] = field(init=False, repr=False)
    index_to_pos: tuple[int, ...] = field(init=False, repr=False)
    _syndrome: LinearMap = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not M_MIN <= self.m <= M_MAX:
            raise ValueError(f"m must lie in [{M_MIN}, {M_MAX}], got {self.m}")
        basis = [1 << i for i in range(self.m)]
        rest = [a for a in range(1, 1 << self.m) if a.bit_count() >= 2]
        # index 0 of pos_to_index is unused so positions stay 1-based
        order = (0, *basis, *rest)
        inverse = [0] * (1 << self.m)
        for pos in range(1, len(order)):
            inverse[order[pos]] = pos
        object.__setattr__(self, "pos_to_index", order)
        object.__setattr__(self, "index_to_pos", tuple(inverse))
        object.__setattr__(self, "_syndrome", LinearMap(order[1:]))

    @property
    def n(self) -> int:
        return (1 << self.m) - 1

    def position(self, alpha: int) -> int:
        if not 0 < alpha < (1 << self.m):
            raise ValueError(f"no position for index word {alpha}")
        return self.index_to_pos[alpha]

    def index(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise ValueError(f"position {pos} outside 1..{self.n}")
        return self.pos_to_index[pos]

    # int-level primitives used by the hot paths

    def unit(self, alpha: int) -> int:
        return 1 << (self.index_to_pos[alpha] - 1)

    def syndrome_int(self, x: int) -> int:
        return self._syndrome(x)

    # BitWord-level operations

    def _m_word(self, alpha: BitWord) -> int:
        if alpha.length != self.m:
            raise LengthMismatch(f"expected an m-word of length {self.m}, got {alpha.length}")
        return alpha.value

    def _n_word(self, x: BitWord) -> int:
        if x.length != self.n:
            raise LengthMismatch(f"expected a word of length {self.n}, got {x.length}")
        return x.value

    def unit_word(self, alpha: BitWord) -> BitWord:
        a = self._m_word(alpha)
        if a == 0:
            raise ValueError("the zero m-word has no unit vector")
        return BitWord(self.n, self.unit(a))

    def zero_extend(self, alpha: BitWord) -> BitWord:
        return BitWord(self.n, self._m_word(alpha))

    def syndrome(self, x: BitWord) -> BitWord:
        return BitWord(self.m, self._syndrome(self._n_word(x)))

    def is_hamming_member(self, x: BitWord) -> bool:
        return self._syndrome(self._n_word(x)) == 0


@lru_cache(maxsize=None)
def coordinate_map(m: int) -> CoordinateMap:
    return CoordinateMap(m)


def unit_word(alpha: BitWord, cmap: CoordinateMap) -> BitWord:
    return cmap.unit_word(alpha)


def zero_extend(alpha: BitWord, cmap: CoordinateMap) -> BitWord:
    return cmap.zero_extend(alpha)


def syndrome(x: BitWord, cmap: CoordinateMap) -> BitWord:
    return cmap.syndrome(x)


def is_hamming_member(x: BitWord, cmap: CoordinateMap) -> bool:
    return cmap.is_hamming_member(x)


def hamming_basis(cmap: CoordinateMap) -> list[int]:
    """Systematic basis of H: one word per free position m+1..n.

    The free position carries a one; the basis positions 1..m are set to
    cancel its syndrome (its index word, read as a zero-extension).
    """
    return [(1 << (pos - 1)) | cmap.pos_to_index[pos] for pos in range(cmap.m + 1, cmap.n + 1)]


def span(basis: Sequence[int], offset: int = 0) -> Iterable[int]:
    """All offset + combinations of ``basis``, in Gray-code order."""
    word = offset
    yield word
    for k in range(1, 1 << len(basis)):
        word ^= basis[(k & -k).bit_length() - 1]
        yield word


def reverse_bits(x: int, n: int) -> int:
    """Mirror an n-bit int; integer order of the result is rendering order of ``x``."""
    return int(format(x, f"0{n}b")[::-1], 2) if n else 0


def ascending_affine(basis: Sequence[int], offset: int, n: int) -> Iterable[int]:
    """Yield offset + span(basis) in ascending rendering order.

    Works on mirrored words, where the first coordinate is the most significant
    bit: a fully reduced xor basis sorted by leading bit makes binary counting
    over the coefficients monotone.
    """
    pivots: dict[int, int] = {}
    for b in basis:
        v = reverse_bits(b, n)
        for top, vec in pivots.items():
            if (v >> top) & 1:
                v ^= vec
        if v == 0:
            continue
        top = v.bit_length() - 1
        for t in pivots:
            if (pivots[t] >> top) & 1:
                pivots[t] ^= v
        pivots[top] = v
    off = reverse_bits(offset, n)
    for top, vec in pivots.items():
        if (off >> top) & 1:
            off ^= vec
    ordered = [pivots[t] for t in sorted(pivots)]
    cum = []
    acc = 0
    for vec in ordered:
        acc ^= vec
        cum.append(acc)
    word = off
    yield reverse_bits(word, n)
    for k in range(1, 1 << len(ordered)):
        # k-1 -> k flips the trailing ones of k-1 and the bit above them
        word ^= cum[(k & -k).bit_length() - 1]
        yield reverse_bits(word, n)
