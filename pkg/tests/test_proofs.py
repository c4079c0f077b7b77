import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from truthbench.errors import ProofStructureError, ResourceError
from truthbench.proofs import (
    AND, AX, CUT, EX, LEAF, OR, audit_proof, bounded_search, check_proof, corpus, decode_proof_code,
    eliminate_cuts, eliminate_cuts_with_stats, excluded_middle, foreign_formulas,
    has_subformula_property, identity, load_proof, make, max_cut_rank, node_from_plain,
    node_to_plain, proof_code, save_proof, supexp, tower,
)
from truthbench.proofs.fixtures import A, B, C, by_name
from truthbench.proofs.io import decode_naturals, encode_naturals
from truthbench.proofs.tree import match
from truthbench.syntax import Const, Exists, In, Not, Or, Var, godel_code, neg, parse, subformulas

V4 = oracle.V(4)
FIXTURES = corpus()
NAMES = [f.name for f in FIXTURES]


def every_node_sound(proof):
    return all(oracle.sequent_valid(node.conclusion, V4) for _, node in proof.walk())


def test_corpus_size_and_names():
    assert len(FIXTURES) >= 10
    assert len(set(NAMES)) == len(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_fixture_checks_and_has_cuts(name):
    fx = by_name(name)
    assert check_proof(fx.proof, fx.assumptions, fx.goal)
    assert fx.proof.cut_count >= 1
    assert all(oracle.holds(a, V4) for a in fx.assumptions)


@pytest.mark.parametrize("name", NAMES)
def test_cut_elimination(name):
    fx = by_name(name)
    out, stats = eliminate_cuts_with_stats(fx.proof)
    assert out.is_cut_free
    assert check_proof(out, fx.assumptions, fx.goal)
    assert has_subformula_property(out, fx.assumptions, fx.goal)
    assert every_node_sound(out)
    assert stats.cuts_eliminated == fx.proof.cut_count
    assert stats.input_nodes == fx.proof.nodes and stats.output_nodes == out.nodes
    assert stats.within_reference


def test_cut_free_input_is_unchanged():
    d = excluded_middle()
    assert eliminate_cuts(d) is d


def test_cut_formulas_can_be_foreign():
    fx = by_name("conjunction-swap")
    assert not has_subformula_property(fx.proof, fx.assumptions, fx.goal)
    assert foreign_formulas(fx.proof, fx.assumptions, fx.goal)


def test_excluded_middle():
    d = excluded_middle()
    assert d.nodes == 2
    goal = Or(Not(A), A)
    assert check_proof(d, [], goal)
    assert not check_proof(d, [], A)


def test_identity_proofs():
    for phi in [A, Or(A, B), Exists(0, In(Var(0), Const(1))), parse("(forall v0 (imp (in v0 (c 1)) (in v0 (c 3))))")]:
        d = identity(phi, itertools.count(40))
        assert d.is_cut_free
        assert d.conclusion <= {phi, neg(phi)}
        assert audit_proof(d) == []


def _corrupt(proof, rng):
    """Swap one node's principal formula for an unrelated one."""
    nodes = [p for p, _ in proof.walk()]
    path = rng.choice(nodes)
    plain = node_to_plain(proof)
    target = plain
    for i in path:
        target = target["children"][i]
    target["principal"] = "(in (c 3) (c 0))"
    return plain


@pytest.mark.parametrize("name", NAMES)
def test_corrupted_proofs_are_rejected(name):
    fx = by_name(name)
    rng = random.Random(name)
    for _ in range(5):
        plain = _corrupt(fx.proof, rng)
        try:
            bad = node_from_plain(plain)
        except ProofStructureError:
            continue
        assert not check_proof(bad, fx.assumptions, fx.goal)


def test_audit_locates_the_bad_node():
    fx = by_name("three-cut-chain")
    # drop the assumption the first leaf relies on
    problems = audit_proof(fx.proof, fx.assumptions[1:])
    assert problems
    assert all(isinstance(path, tuple) for path, _ in problems)


def test_malformed_trees():
    with pytest.raises(ProofStructureError):
        node_from_plain({"rule": "Magic", "principal": "(in (c 0) (c 1))", "children": []})
    with pytest.raises(ProofStructureError):
        node_from_plain({"rule": "Cut", "principal": "(in (c 0) (c 1))", "children": []})
    with pytest.raises(ProofStructureError):
        node_from_plain({"rule": "Ax", "principal": "(in (c 0)", "children": []})


def test_wrong_witness_term_is_rejected():
    e = Exists(0, In(Var(0), Const(1)))
    good = make(EX, e, [make(LEAF, A)], term=Const(0))
    assert check_proof(good, [A], e)
    bad = node_from_plain({**node_to_plain(good), "term": "(c 2)"})
    assert not check_proof(bad, [A], e)


def test_eigenvariable_condition():
    # "for all x, x in c1" from "0 in 1" would need x to be free in the premise
    phi = parse("(forall v0 (in v0 (c 1)))")
    from truthbench.proofs import ALL

    bogus = node_from_plain({
        "rule": ALL, "principal": "(not (exists v0 (not (in v0 (c 1)))))", "eigen": 0,
        "children": [{"rule": LEAF, "principal": "(in v0 (c 1))", "children": []}],
    })
    assert not check_proof(bogus, [parse("(in v0 (c 1))")], phi)


@pytest.mark.parametrize("name", NAMES)
def test_json_and_code_round_trips(name, tmp_path):
    fx = by_name(name)
    path = tmp_path / "p.json"
    save_proof(path, fx.proof, fx.assumptions, fx.goal)
    proof, assumptions, goal = load_proof(path)
    assert proof == fx.proof and list(assumptions) == list(fx.assumptions) and goal == fx.goal
    code = proof_code(fx.proof)
    assert decode_proof_code(code) == fx.proof
    for phi in fx.proof.formulas():
        assert code > godel_code(phi)


@given(st.lists(st.integers(0, 10**6), max_size=20))
def test_gamma_coding_round_trip(xs):
    assert decode_naturals(encode_naturals(xs)) == xs


def test_supexp_reference_values():
    assert [supexp(n) for n in range(5)] == [1, 2, 4, 16, 65536]
    assert supexp(5).bit_length() == 65537
    with pytest.raises(ResourceError):
        supexp(6)
    assert tower(0, 5) == 5 and tower(1, 5) == 32 and tower(2, 3) == 256
    assert tower(5, 5) is None


def test_max_cut_rank():
    assert max_cut_rank(by_name("atomic-cut").proof) == 1
    assert max_cut_rank(excluded_middle()) == 0


def test_match_binds_free_variables_consistently():
    pat = parse("(in v0 v0)")
    assert match(pat, parse("(in (c 2) (c 2))")) == {0: Const(2)}
    assert match(pat, parse("(in (c 2) (c 3))")) is None


# -- bounded search ---------------------------------------------------------------


def test_search_finds_smallest_proofs():
    goal = Or(Not(A), A)
    d = bounded_search([], goal, 4)
    assert d is not None and d.nodes == 2 and check_proof(d, [], goal)
    assert bounded_search([], goal, 1) is None
    mp = bounded_search([A, Or(Not(A), B)], B, 8)
    assert mp is not None and mp.nodes == 3
    assert bounded_search([A, Or(Not(A), B)], B, 2) is None


def test_search_is_sound_on_non_consequences():
    assert bounded_search([A], B, 12) is None
    assert bounded_search([Or(A, B)], A, 12) is None


def test_search_ceiling():
    with pytest.raises(ResourceError):
        bounded_search([], A, 65)


@pytest.mark.parametrize("name", NAMES)
def test_search_reproves_fixture_goals(name):
    fx = by_name(name)
    d = bounded_search(fx.assumptions, fx.goal, 20)
    assert d is not None and d.is_cut_free
    assert check_proof(d, fx.assumptions, fx.goal)
    assert d.nodes <= eliminate_cuts(fx.proof).nodes


LETTERS = [A, B, C]
props = st.recursive(
    st.sampled_from(LETTERS),
    lambda sub: st.one_of(sub.map(Not), st.tuples(sub, sub).map(lambda p: Or(*p))),
    max_leaves=4,
)


@settings(max_examples=80, deadline=None)
@given(props)
def test_search_decides_small_propositional_validity(phi):
    d = bounded_search([], phi, 30)
    assert (d is not None) == oracle.tautology(phi, LETTERS)
    if d is not None:
        assert check_proof(d, [], phi)
        assert all(f in set(subformulas(phi)) | {Not(g) for g in subformulas(phi)} for f in d.formulas())


def test_first_order_search():
    # exists x (x in c1) from 0 in 1; and a valid quantifier shift
    assert bounded_search([A], parse("(exists v0 (in v0 (c 1)))"), 6) is not None
    shift = parse("(imp (exists v0 (forall v1 (in v0 v1))) (forall v1 (exists v0 (in v0 v1))))")
    d = bounded_search([], shift, 20)
    assert d is not None and check_proof(d, [], shift)
    converse = parse("(imp (forall v1 (exists v0 (in v0 v1))) (exists v0 (forall v1 (in v0 v1))))")
    assert bounded_search([], converse, 12) is None


def test_proof_payload_is_plain_json():
    fx = by_name("exists-cut")
    text = json.dumps(node_to_plain(fx.proof))
    assert node_from_plain(json.loads(text)) == fx.proof


def test_cut_rule_uses_both_premises():
    cut = make(CUT, A, [make(LEAF, A), make(OR, Or(Not(A), A), [make(AX, A)])])
    assert cut.rule == CUT and len(cut.children) == 2
    assert AND != OR
