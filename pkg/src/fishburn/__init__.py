"""Ascent sequences, Fishburn matrices, (2+2)-free posets and
2|3-1bar-avoiding permutations: the bijections between them, their
restricted and Catalan sub-families, and duality."""
from .bijections import (
    BijectionTrace,
    TraceStep,
    asc_to_matrix,
    asc_to_perm,
    asc_to_poset,
    matrix_to_asc,
    matrix_to_perm,
    matrix_to_poset,
    perm_to_asc,
    perm_to_matrix,
    perm_to_poset,
    poset_to_asc,
    poset_to_matrix,
    poset_to_perm,
    rasc_to_perm_direct,
    rmatrix_to_asc_direct,
)
from .core import (
    AscentSequence,
    FishburnError,
    FishburnMatrix,
    IntervalOrderPoset,
    PatternPermutation,
    Poset,
    active_sites,
    antichain_poset,
    chain_poset,
    format_matrix,
    format_poset,
    format_seq,
    parse_asc,
    parse_matrix,
    parse_perm,
    parse_poset,
    poset_structure,
)
from .duality import asc_dual, matrix_flip, panorama, perm_dual, poset_dual, views
from .enumeration import count_table, gen_asc, gen_matrices, gen_perms, gen_posets
from .families import (
    classify_asc,
    classify_matrix,
    classify_perm,
    classify_poset,
    is_casc,
    is_rasc,
    is_rmatrix,
    is_rposet,
    is_rperm,
    is_se_free,
    is_series_parallel,
)
from .isomorphism import canonical_form, contains_induced, poset_isomorphic
from .oracle import verify_sweep

__version__ = "0.1.0"
