"""Double-exact categories: complexes, homology and snake constructions.

The library models categories with two morphism classes — horizontal
(mono-like) and vertical (epi-like) — linked by inverse complement
operations and mixed pullbacks.  Two instances ship with it: finite sets
with injections, and finite-dimensional prime-field spaces.  On top of
either instance it builds chain complexes presented by transition
objects, homology by double complement, snake zigzags, long exact
sequences, induced homology spans and quasi-isomorphism detection,
cross-checked by an independent rank oracle.
"""

from .chains import (
    ChainComplex,
    ChainMap,
    ChainSES,
    HorChainMor,
    Transition,
    VerChainMor,
    chain_map_of_hor,
    chain_map_of_ver,
    coker_hor,
    compose_chain_maps,
    id_chain_map,
    id_hor_chain,
    id_ver_chain,
    is_inclusion_mor,
    ker_ver,
    ses_from_injection,
    ses_from_projection,
    validate_chain_map,
    validate_chain_ses,
    validate_complex,
    validate_hor_chain_mor,
    validate_ver_chain_mor,
)
from .core import (
    AcgwError,
    AcgwInstance,
    CapabilityError,
    CompositionError,
    FactorizationError,
    FlatMor,
    HorMor,
    PullbackSquare,
    SquareClass,
    ValidationError,
    VerMor,
    compose_flat,
    flat_is_iso,
    flat_is_zero,
    flat_of_hor,
    flat_of_ver,
    id_flat,
    span_equiv,
    validate_flat,
    zero_flat,
)
from .documents import Document, ParseError, parse, serialize, validate_document
from .finset import FinSetInstance, finset_obj
from .homology import (
    HomologyGrid,
    check_functoriality,
    h_on_map,
    homology,
    homology_complex,
    homology_obj,
    homology_size,
    is_exact,
    is_quasi_iso,
    qiso_iff_complement_exact,
)
from .linear import LinearInstance, VectObj
from .oracle import (
    GenConfig,
    free_complex,
    gen_chain_map,
    gen_complex,
    gen_composable_chain_maps,
    gen_exact_complex,
    gen_hor_mor,
    gen_linear_complex,
    gen_ses,
    gen_snake_strong,
    gen_snake_weak,
    gen_ver_mor,
    rank_homology_dims,
)
from .snake import (
    ExactZigzag,
    SnakeInputStrong,
    SnakeInputWeak,
    flat_morphism,
    les_of_ses,
    snake_strong,
    snake_weak,
    validate_snake_strong,
    validate_snake_weak,
    validate_zigzag,
    zigzag_exactness,
    zigzag_is_exact,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "AcgwError",
    "AcgwInstance",
    "CapabilityError",
    "CompositionError",
    "FactorizationError",
    "FlatMor",
    "HorMor",
    "PullbackSquare",
    "SquareClass",
    "ValidationError",
    "VerMor",
    "compose_flat",
    "flat_is_iso",
    "flat_is_zero",
    "flat_of_hor",
    "flat_of_ver",
    "id_flat",
    "span_equiv",
    "validate_flat",
    "zero_flat",
    # instances
    "FinSetInstance",
    "finset_obj",
    "LinearInstance",
    "VectObj",
    # chains
    "ChainComplex",
    "ChainMap",
    "ChainSES",
    "HorChainMor",
    "Transition",
    "VerChainMor",
    "chain_map_of_hor",
    "chain_map_of_ver",
    "coker_hor",
    "compose_chain_maps",
    "id_chain_map",
    "id_hor_chain",
    "id_ver_chain",
    "is_inclusion_mor",
    "ker_ver",
    "ses_from_injection",
    "ses_from_projection",
    "validate_chain_map",
    "validate_chain_ses",
    "validate_complex",
    "validate_hor_chain_mor",
    "validate_ver_chain_mor",
    # homology
    "HomologyGrid",
    "check_functoriality",
    "h_on_map",
    "homology",
    "homology_complex",
    "homology_obj",
    "homology_size",
    "is_exact",
    "is_quasi_iso",
    "qiso_iff_complement_exact",
    # snake
    "ExactZigzag",
    "SnakeInputStrong",
    "SnakeInputWeak",
    "flat_morphism",
    "les_of_ses",
    "snake_strong",
    "snake_weak",
    "validate_snake_strong",
    "validate_snake_weak",
    "validate_zigzag",
    "zigzag_exactness",
    "zigzag_is_exact",
    # oracle and generators
    "GenConfig",
    "free_complex",
    "gen_chain_map",
    "gen_complex",
    "gen_composable_chain_maps",
    "gen_exact_complex",
    "gen_hor_mor",
    "gen_linear_complex",
    "gen_ses",
    "gen_snake_strong",
    "gen_snake_weak",
    "gen_ver_mor",
    "rank_homology_dims",
    # documents
    "Document",
    "ParseError",
    "parse",
    "serialize",
    "validate_document",
]
