"""Embedding binary 1-codes into 1-perfect codes by switching Hamming-code components."""
from .components import ComponentSpec, component_basis, in_component_coset, quad_condition
from .embedder import (
    EmbeddingOracle,
    SeedCode,
    SeedError,
    decode,
    enumerate_codewords,
    is_member,
    normalize_seed,
    project,
    validate_seed,
)
from .gf2core import (
    BitWord,
    CoordinateMap,
    coordinate_map,
    distance,
    is_hamming_member,
    syndrome,
    unit_word,
    weight,
    word_add,
    zero_extend,
)
from .steiner import TripleSystem, embed_partial_sts, extract_sts, triples_to_code, verify_sts

__all__ = [
    "BitWord", "CoordinateMap", "coordinate_map", "word_add", "weight", "distance",
    "unit_word", "zero_extend", "syndrome", "is_hamming_member",
    "ComponentSpec", "component_basis", "in_component_coset", "quad_condition",
    "SeedCode", "SeedError", "EmbeddingOracle", "validate_seed", "normalize_seed",
    "is_member", "decode", "enumerate_codewords", "project",
    "TripleSystem", "triples_to_code", "extract_sts", "verify_sts", "embed_partial_sts",
]
