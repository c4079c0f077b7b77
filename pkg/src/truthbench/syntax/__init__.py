from .ast import (
    ARITH, SET, Add, And, Const, Eq, Exists, Forall, Formula, Iff, Implies, In, Mul, Not, Or,
    Pred, Succ, Term, Var, ZERO, Zero, atom_terms, balanced_disj, check_signature, conj,
    constants_of, depth, disj, disjuncts, exists_bounded, forall_bounded, free_vars,
    immediate_subformulas, instantiate, is_atomic, is_literal, is_sentence, neg, numeral,
    numeral_value, rename_bound, signature_of, size, subformulas, substitute, subterms, terms_of,
    var_indices,
)
from .coding import decode, decode_term, godel_code, pair, term_code, unpair
from .families import depth_family, is_fsent
from .generate import SentenceSpace, enumerate_sentences, random_formula, random_sentence
from .sexpr import parse, parse_set_literal, parse_term, term_str, to_pretty, to_sexpr

__all__ = [name for name in dir() if not name.startswith("_")]
