import random
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from truthbench.errors import ParseError, SignatureError, SubstitutionError
from truthbench.syntax import (
    Add, And, Const, Eq, Exists, Forall, Iff, Implies, In, Mul, Not, Or, Pred, Succ, Var, ZERO,
    SentenceSpace, decode, decode_term, depth_family, enumerate_sentences, godel_code, instantiate,
    is_fsent, neg, numeral, numeral_value, pair, parse, parse_set_literal, parse_term,
    random_sentence, rename_bound, signature_of, subformulas, substitute, term_code, to_pretty,
    to_sexpr, unpair,
)

variables = st.integers(0, 4).map(Var)
set_terms = st.one_of(variables, st.integers(0, 20).map(Const))
arith_terms = st.recursive(
    st.one_of(variables, st.just(ZERO)),
    lambda sub: st.one_of(
        sub.map(Succ),
        st.tuples(sub, sub).map(lambda p: Add(*p)),
        st.tuples(sub, sub).map(lambda p: Mul(*p)),
    ),
    max_leaves=4,
)


def formulas(terms, atoms):
    base = st.tuples(st.sampled_from(atoms), terms, terms).map(lambda p: p[0](p[1], p[2]))
    return st.recursive(
        base,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda p: Or(*p)),
            st.tuples(st.integers(0, 4), sub).map(lambda p: Exists(*p)),
        ),
        max_leaves=8,
    )


set_formulas = formulas(set_terms, [Eq, In])
arith_formulas = formulas(arith_terms, [Eq])
any_formula = st.one_of(set_formulas, arith_formulas)


@given(any_formula)
def test_sexpr_round_trip(phi):
    assert parse(to_sexpr(phi)) == phi


@given(any_formula)
def test_godel_code_round_trip(phi):
    assert decode(godel_code(phi)) == phi


@given(any_formula)
def test_code_exceeds_subformula_codes_and_depth(phi):
    c = godel_code(phi)
    assert c >= phi.depth
    for sub in subformulas(phi):
        if sub is not phi:
            assert godel_code(sub) < c


@given(st.integers(0, 5000))
def test_decode_is_partial_inverse(c):
    phi = decode(c)
    if phi is not None:
        assert godel_code(phi) == c


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_pairing_round_trip(x, y):
    assert unpair(pair(x, y)) == (x, y)


@given(arith_terms)
def test_term_code_round_trip(t):
    assert decode_term(term_code(t)) == t


def test_abbreviations_unfold():
    a, b = In(Const(0), Const(1)), Eq(Const(1), Const(1))
    assert parse("(and (in (c 0) (c 1)) (= (c 1) (c 1)))") == And(a, b) == Not(Or(Not(a), Not(b)))
    assert parse("(imp (in (c 0) (c 1)) (= (c 1) (c 1)))") == Implies(a, b) == Or(Not(a), b)
    assert parse("(iff (in (c 0) (c 1)) (= (c 1) (c 1)))") == Iff(a, b)
    assert parse("(forall v0 (in v0 (c 1)))") == Forall(0, In(Var(0), Const(1)))


def test_numerals_and_predicates():
    assert parse_term("(num 3)") == numeral(3)
    assert numeral_value(parse_term("(S (S (num 0)))")) == 2
    phi = parse("(pred prov_T_5 v0)")
    assert phi == Pred("prov_T_5", (Var(0),))
    assert to_sexpr(phi) == "(pred prov_T_5 v0)"


@pytest.mark.parametrize("text", ["(in (c 0)", "(in (c 0) (c 1)) extra", "(frob v0)", "(in v0)", "(c -1)", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_signatures():
    assert signature_of(parse("(in v0 v1)")) == "set"
    assert signature_of(parse("(= (S v0) (num 0))")) == "arith"
    assert signature_of(parse("(= v0 v1)")) is None
    with pytest.raises(SignatureError):
        parse("(in (num 0) v0)")
    with pytest.raises(SignatureError):
        parse("(in v0 v1)", "arith")


def test_substitution_refuses_capture():
    phi = parse("(exists v1 (in v0 v1))")
    assert substitute(phi, 0, Const(3)) == parse("(exists v1 (in (c 3) v1))")
    with pytest.raises(SubstitutionError):
        instantiate(phi, {0: Var(1)})
    with pytest.raises(SubstitutionError):
        substitute(phi, 0, Var(2))
    # bound occurrences stay put
    assert substitute(parse("(exists v0 (in v0 v0))"), 0, Const(1)) == parse("(exists v0 (in v0 v0))")


@given(set_formulas)
def test_rename_bound_preserves_free_variables_and_shape(phi):
    renamed = rename_bound(phi, iter(range(100, 200)))
    assert renamed.fv == phi.fv
    assert renamed.depth == phi.depth and renamed.size == phi.size


def test_neg_is_an_involution_on_one_layer():
    a = In(Const(0), Const(1))
    assert neg(a) == Not(a)
    assert neg(Not(a)) == a
    assert neg(neg(a)) == a


def test_pretty_printing():
    assert to_pretty(parse("(forall v0 (in v0 (c 1)))")) == "∀v0 v0 ∈ c1"
    assert to_pretty(parse("(not (= (num 1) (S v0)))")) == "1 ≠ S(v0)"


def test_set_literals():
    assert parse_set_literal("{}") == 0
    assert parse_set_literal("{{}}") == 1
    assert parse_set_literal("{0,1}") == 3
    assert parse_set_literal("{ {}, {{}} , 3 }") == 11
    with pytest.raises(ParseError):
        parse_set_literal("{0,")


@lru_cache(maxsize=None)
def _count(n, scope, consts):
    """Number of formulas of exactly n nodes, counted from the grammar."""
    if n < 3:
        return 0
    total = 2 * (consts + scope) ** 2 if n == 3 else 0
    if n >= 4:
        total += _count(n - 1, scope, consts) + _count(n - 1, scope + 1, consts)
    total += sum(_count(k, scope, consts) * _count(n - 1 - k, scope, consts) for k in range(3, n - 3))
    return total


def test_enumeration_matches_grammar_count_and_is_duplicate_free():
    sentences = list(enumerate_sentences(range(3), 7))
    assert len(sentences) == sum(_count(n, 0, 3) for n in range(3, 8))
    assert len(set(sentences)) == len(sentences)
    assert all(not s.fv and s.size <= 7 for s in sentences)


def test_enumeration_depth_cap():
    space = SentenceSpace(range(2), max_depth=2)
    assert all(f.depth <= 2 for f in space.sentences(8))


def test_random_sentences_are_closed_and_reproducible():
    a = [random_sentence(random.Random(5), range(16), 6) for _ in range(50)]
    b = [random_sentence(random.Random(5), range(16), 6) for _ in range(50)]
    assert a == b
    assert all(not s.fv and 1 <= s.depth <= 6 for s in a)


def test_depth_family_membership():
    fam = depth_family(2)
    assert is_fsent(parse("(not (in (c 0) (c 1)))"), fam)
    assert not is_fsent(parse("(not (not (in (c 0) (c 1))))"), fam)
    assert not is_fsent(parse("(not (in v0 (c 1)))"), fam)


def test_fsent_abstracts_closed_terms():
    # a family given extensionally: the one formula (in v9 v9)
    fam = lambda phi: phi == In(Var(9), Var(9))  # noqa: E731
    assert not is_fsent(parse("(in (c 2) (c 2))"), fam)
    fam2 = lambda phi: isinstance(phi, In) and phi.left == phi.right and phi.left.fv  # noqa: E731
    assert is_fsent(parse("(in (c 2) (c 2))"), fam2)
