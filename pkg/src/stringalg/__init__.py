"""Combinatorics of string algebras.

Strings, bands and prime bands, the (extended) bridge quiver, hammock
orders with their neighbour operators, rank classification of graph maps,
and the stable-rank estimate.
"""

from .algebra import StringAlgebra, load_algebra
from .bands import (
    Band,
    BandFreeCatalog,
    band_free_catalog,
    canonical_band,
    contains_band_rotation,
    enumerate_bands,
    enumerate_prime_bands,
    is_band,
    is_band_free,
    is_prime_band,
)
from .bridges import (
    BridgeArrow,
    ExtendedBridgeQuiver,
    PathSpec,
    build_extended_bridge_quiver,
    classify_algebra,
    find_generating_path,
    generate_string,
    is_extendable,
    weak_bridges,
)
from .fixtures import FIXTURES, fixture_text, load_fixture
from .hammocks import (
    ExpansionResult,
    HammockRef,
    compare,
    interval_is_finite,
    is_torsion_free,
    one_sided_expansion,
    op_l,
    op_l_graded,
    op_lbar,
    op_r,
    op_rbar,
    predecessor,
    successor,
)
from .presentation import (
    QuiverPresentation,
    SignAssignment,
    ValidationReport,
    derive_signs,
    parse_presentation,
    serialize_presentation,
    validate_string_algebra,
)
from .ranks import (
    BBMap,
    BSMap,
    ComplexTerm,
    RankClass,
    SBMap,
    SSMap,
    StableRankEstimate,
    dichotomy_audit,
    find_recursive_system,
    inclusion_terms,
    rank_bb,
    rank_bs,
    rank_sb,
    rank_ss,
    stable_rank_estimate,
)
from .words import Syllable, Word, invert_word, parse_word, word_to_json

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
