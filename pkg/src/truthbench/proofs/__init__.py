"""One-sided sequent calculus: checking, search, cut elimination."""
from .cutelim import BlowupStats, eliminate_cuts, eliminate_cuts_with_stats, identity, supexp, tower
from .fixtures import Fixture, corpus, excluded_middle
from .io import decode_proof_code, load_proof, node_from_plain, node_to_plain, proof_code, proof_from_payload, proof_payload, save_proof
from .search import SIZE_CEILING, bounded_search, search_sequent
from .tree import (
    ALL, AND, AX, CUT, DNEG, EX, LEAF, OR, ProofTree, audit_proof, check_proof, foreign_formulas,
    has_subformula_property, make, max_cut_rank, root_ok,
)

__all__ = [
    "ALL", "AND", "AX", "CUT", "DNEG", "EX", "LEAF", "OR", "BlowupStats", "Fixture", "ProofTree",
    "SIZE_CEILING", "audit_proof", "bounded_search", "check_proof", "corpus", "eliminate_cuts",
    "eliminate_cuts_with_stats", "excluded_middle", "foreign_formulas", "has_subformula_property",
    "identity", "load_proof", "make", "max_cut_rank", "node_from_plain", "node_to_plain", "proof_code",
    "proof_from_payload", "proof_payload", "decode_proof_code", "root_ok", "save_proof", "search_sequent", "supexp", "tower",
]
