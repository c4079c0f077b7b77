import random

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from truthbench.errors import DomainError, FragmentError
from truthbench.hf import ack_decode
from truthbench.semantics import (
    FiniteStructure, definable_in, eval_arith, eval_delta0, eval_sentence, eval_term, find_witness,
)
from truthbench.syntax import (
    Const, Exists, In, Var, exists_bounded, forall_bounded, parse, parse_term, random_sentence,
)
from test_syntax import arith_formulas, arith_terms

V4 = oracle.V(4)


def test_random_sentences_agree_with_reference(v4):
    rng = random.Random(11)
    for _ in range(1500):
        phi = random_sentence(rng, v4.elements, 5)
        assert eval_sentence(phi, v4) == oracle.holds(phi, V4), phi


def test_memoized_evaluation_agrees(v4):
    rng = random.Random(12)
    for _ in range(300):
        phi = random_sentence(rng, v4.elements, 6)
        assert eval_sentence(phi, v4, memo=True) == eval_sentence(phi, v4)


def test_hf_structure_agrees_with_code_structure(v4):
    hf4 = FiniteStructure.from_sets([ack_decode(n) for n in range(16)])
    assert len(hf4) == 16
    rng = random.Random(13)
    for _ in range(300):
        phi = random_sentence(rng, v4.elements, 4)
        assert eval_sentence(phi, hf4) == eval_sentence(phi, v4)


def test_code_cap_domain():
    s = FiniteStructure.code_cap(6)
    assert s.elements == tuple(range(6))
    # code 5 = {0, 2} and 2 = {1} is outside; the domain is not transitive but evaluation still works
    assert eval_sentence(parse("(exists v0 (in v0 (c 5)))"), s)


def test_constant_outside_domain(v4):
    with pytest.raises(DomainError):
        eval_sentence(parse("(in (c 0) (c 16))"), v4)


def test_extensionality_holds_in_v4(v4):
    ext = parse("(forall v0 (forall v1 (imp (forall v2 (iff (in v2 v0) (in v2 v1))) (= v0 v1))))")
    assert eval_sentence(ext, v4)
    assert not eval_sentence(parse("(exists v0 (forall v1 (in v1 v0)))"), v4)


def test_env_binds_free_variables(v4):
    phi = parse("(in v0 v1)")
    assert eval_sentence(phi, v4, env={0: 0, 1: 1})
    assert not eval_sentence(phi, v4, env={0: 1, 1: 0})


@given(st.integers(0, 200), st.integers(0, 200))
def test_bounded_sentences_over_v_omega(a, b):
    # exists x in c_b (x = c_a)  <=>  a in b
    phi = exists_bounded(0, Const(b), parse(f"(= v0 (c {a}))"))
    assert eval_delta0(phi) == (oracle.decode(a) in oracle.decode(b))


def test_bounded_universal_over_v_omega():
    # every member of c_11 = {0, 1, 3} is a member of c_15 = {0, 1, 2, 3}
    sub = forall_bounded(0, Const(11), In(Var(0), Const(15)))
    assert eval_delta0(sub)
    assert not eval_delta0(forall_bounded(0, Const(15), In(Var(0), Const(11))))


def test_unbounded_quantifier_is_rejected():
    with pytest.raises(FragmentError):
        eval_delta0(parse("(exists v0 (in v0 (c 1)))"))


@given(arith_terms.filter(lambda t: t.closed))
def test_eval_term_matches_reference(t):
    assert eval_term(t) == oracle._num(t, {})


@settings(max_examples=60)
@given(arith_formulas.filter(lambda f: not f.fv and f.size < 25))
def test_eval_arith_matches_reference(phi):
    assert eval_arith(phi, 4) == oracle.arith_holds(phi, 4)


def test_arith_examples():
    assert eval_term(parse_term("(* (S (S (num 0))) (+ (num 3) (num 1)))")) == 8
    assert eval_arith(parse("(forall v0 (not (= (S v0) (num 0))))"), 20)
    assert not eval_arith(parse("(forall v0 (exists v1 (= v1 (S v0))))"), 10)


def test_witness_and_definable_sets(v4):
    phi = parse("(exists v0 (in (c 1) v0))")
    assert find_witness(phi, v4) == 2
    assert definable_in(parse("(in (c 1) v0)"), 0, v4) == [a for a in range(16) if (a >> 1) & 1]
    assert find_witness(parse("(exists v0 (in v0 v0))"), v4) is None
    with pytest.raises(TypeError):
        find_witness(In(Const(0), Const(1)), v4)


def test_quantifier_shadowing(v4):
    # inner v0 rebinds; outer v0 is not captured
    phi = Exists(0, Exists(0, In(Var(0), Const(1))))
    assert eval_sentence(phi, v4) == oracle.holds(phi, V4) is True
