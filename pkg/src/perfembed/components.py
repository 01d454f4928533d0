"""Linear components of the Hamming code.

The component for a nonzero m-word ``iota`` is the subcode of H whose words
agree on every coordinate pair {alpha, alpha + iota}; the coordinate indexed by
``iota`` itself is unconstrained apart from the syndrome equation.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .gf2core import BitWord, CoordinateMap, LengthMismatch, LinearMap, span


@dataclass(frozen=True)
class ComponentSpec:
    iota: int
    cmap: CoordinateMap
    pairs: tuple[tuple[int, int], ...] = field(init=False)
    _check: LinearMap = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 < self.iota < (1 << self.cmap.m):
            raise ValueError(f"component index must be a nonzero {self.cmap.m}-word")
        pairs = tuple(
            (a, a ^ self.iota)
            for a in range(1, 1 << self.cmap.m)
            if a != self.iota and a < a ^ self.iota
        )
        object.__setattr__(self, "pairs", pairs)
        # one linear map tests both conditions: low m bits give the syndrome,
        # bit m + k flags a mismatch on pair k
        m = self.cmap.m
        images = list(self.cmap.pos_to_index[1:])
        for k, (a, b) in enumerate(pairs):
            images[self.cmap.index_to_pos[a] - 1] |= 1 << (m + k)
            images[self.cmap.index_to_pos[b] - 1] |= 1 << (m + k)
        object.__setattr__(self, "_check", LinearMap(images))

    @classmethod
    def of(cls, iota: BitWord, cmap: CoordinateMap) -> "ComponentSpec":
        if iota.length != cmap.m:
            raise LengthMismatch(f"expected an m-word of length {cmap.m}, got {iota.length}")
        return cls(iota.value, cmap)

    @property
    def dimension(self) -> int:
        return len(self.pairs)

    def contains(self, c: int) -> bool:
        """``c`` lies in the component itself (int-level)."""
        return self._check(c) == 0

    def basis(self) -> list[int]:
        cmap = self.cmap
        e_iota = cmap.unit(self.iota)
        return [cmap.unit(a) | cmap.unit(b) | e_iota for a, b in self.pairs]


def in_component_coset(x: BitWord, spec: ComponentSpec, z: BitWord) -> bool:
    """Whether ``x`` lies in the coset R_iota + z."""
    n = spec.cmap.n
    if x.length != n or z.length != n:
        raise LengthMismatch(f"expected words of length {n}, got {x.length} and {z.length}")
    return spec.contains(x.value ^ z.value)


def component_basis(spec: ComponentSpec) -> list[BitWord]:
    """Generators e(alpha) + e(alpha + iota) + e(iota), ordered by the smaller pair member."""
    return [BitWord(spec.cmap.n, g) for g in spec.basis()]


def component_words(spec: ComponentSpec, shift: int = 0):
    return span(spec.basis(), shift)


def quad_condition(c: BitWord, iota: BitWord, kappa: BitWord, cmap: CoordinateMap) -> bool:
    """c_a + c_(a+iota) + c_(a+kappa) + c_(a+iota+kappa) = 0 for every a outside <iota, kappa>."""
    if c.length != cmap.n:
        raise LengthMismatch(f"expected a word of length {cmap.n}, got {c.length}")
    if iota.length != cmap.m or kappa.length != cmap.m:
        raise LengthMismatch(f"expected m-words of length {cmap.m}")
    i, k = iota.value, kappa.value
    if i == 0 or k == 0 or i == k:
        raise ValueError("iota and kappa must be distinct and nonzero")
    return _quad_ok(c.value, i, k, cmap)


def _quad_ok(c: int, i: int, k: int, cmap: CoordinateMap) -> bool:
    inside = {0, i, k, i ^ k}
    pos = cmap.index_to_pos
    for a in range(1, 1 << cmap.m):
        orbit = (a, a ^ i, a ^ k, a ^ i ^ k)
        if a in inside or a != min(orbit):
            continue
        total = 0
        for b in orbit:
            total ^= (c >> (pos[b] - 1)) & 1
        if total:
            return False
    return True
