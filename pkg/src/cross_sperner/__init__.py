"""Exact extremal analysis of cross-Sperner pairs of set families.

A pair of families (F, G) over {1, ..., n} is cross-Sperner when no
member of F is contained in or contains a member of G. The package
builds the extremal construction pairs, searches the exact maximum
size of the pairwise-intersection family, audits the structural claims
behind that maximum on finite instances, and ships a CLI with a stable
JSON report envelope.
"""

from .audits import (
    CLAIM_IDS,
    DEFAULT_SEED,
    AuditFinding,
    InequalityParams,
    audit_cor22,
    audit_lemma21,
    audit_lemma23,
    audit_lemma24_inequality,
    audit_lemma24_structure,
    audit_monotone_m,
    audit_seymour,
    audit_sperner,
    audit_theorem12_uniqueness,
    padding_inequality_sides,
    run_claim,
)
from .constructions import (
    TypeSplit,
    balanced_split,
    classify_type_xy,
    construction_intersection_size,
    m_formula,
    optimal_split,
    proper_submasks,
    split_of,
    type_xy,
)
from .families import (
    MAX_GROUND,
    Family,
    FamilyPair,
    GroundSet,
    SubsetMask,
    canonicalize_pair,
    find_violation,
    incomparable,
    intersection_family,
    is_cross_sperner,
    masks_incomparable,
    maximal_partner,
    pair_key,
    permute_family,
    permute_mask,
    permute_pair,
    subset_leq,
)
from .pairfile import ParseError, format_family_file, parse_family_file
from .reporting import ENVELOPE_KEYS, envelope, render_json, search_envelope
from .search import (
    ExtremalWitness,
    Pruning,
    SearchReport,
    cross_validate,
    default_worker_count,
    search_m,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFinding",
    "CLAIM_IDS",
    "DEFAULT_SEED",
    "ENVELOPE_KEYS",
    "ExtremalWitness",
    "Family",
    "FamilyPair",
    "GroundSet",
    "InequalityParams",
    "MAX_GROUND",
    "ParseError",
    "Pruning",
    "SearchReport",
    "SubsetMask",
    "TypeSplit",
    "audit_cor22",
    "audit_lemma21",
    "audit_lemma23",
    "audit_lemma24_inequality",
    "audit_lemma24_structure",
    "audit_monotone_m",
    "audit_seymour",
    "audit_sperner",
    "audit_theorem12_uniqueness",
    "balanced_split",
    "canonicalize_pair",
    "classify_type_xy",
    "construction_intersection_size",
    "cross_validate",
    "default_worker_count",
    "envelope",
    "find_violation",
    "format_family_file",
    "incomparable",
    "intersection_family",
    "is_cross_sperner",
    "m_formula",
    "masks_incomparable",
    "maximal_partner",
    "optimal_split",
    "padding_inequality_sides",
    "pair_key",
    "parse_family_file",
    "permute_family",
    "permute_mask",
    "permute_pair",
    "proper_submasks",
    "render_json",
    "run_claim",
    "search_envelope",
    "search_m",
    "split_of",
    "subset_leq",
    "type_xy",
]
