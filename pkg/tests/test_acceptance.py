"""Desk-scale acceptance criteria, one test per criterion.

Each test records a verdict row in ``conftest.ACCEPTANCE`` and prints a
pass/fail line; the rows are summarised again at the end of the run.
"""
import random
import re
import time
from contextlib import contextmanager

import pytest

import oracle
from conftest import ACCEPTANCE
from truthbench.bridge import delta0_corpus, ordinal_domain, pa_to_zf, pa_transport, zf_to_pa, zf_transport
from truthbench.hf import ack_decode, ack_encode, ack_mem
from truthbench.proofs import (
    check_proof, corpus, eliminate_cuts_with_stats, has_subformula_property, supexp,
)
from truthbench.schemes import (
    EIND_BATTERY, REPL_BATTERY, SAMPLE_ARITH, SAMPLE_BATTERY, UNSOUND, audit_internal, consistency_probe,
    reflection_instances, replacement_instance,
)
from truthbench.semantics import eval_sentence
from truthbench.syntax import (
    Const, In, Not, SentenceSpace, balanced_disj, decode, random_sentence, to_sexpr,
)
from truthbench.truth import TruthTower, check_agreement, faces_audit, piecewise_code, verify_ct

SEED = 20240611

LIMITS = {1: 10, 2: 30, 3: 120, 4: 120, 10: 300}


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(n, title):
        limit = LIMITS.get(n)
        start = time.perf_counter()
        verdict = "FAIL"
        try:
            yield
            verdict = "pass"
        finally:
            seconds = time.perf_counter() - start
            if limit and seconds > limit:
                verdict = "FAIL"
            ACCEPTANCE.append((n, title, verdict, seconds, limit))
            with capsys.disabled():
                budget = f" (limit {limit}s)" if limit else ""
                print(f"\ncriterion {n:2}: {verdict}  {title}  {seconds:.1f}s{budget}")
        if limit:
            assert seconds < limit, f"criterion {n} took {seconds:.1f}s, limit {limit}s"

    return run


def test_c01_ackermann_bijection(criterion):
    with criterion(1, "Ackermann bijection"):
        assert all(ack_encode(ack_decode(c)) == c for c in range(1 << 16))
        v5 = oracle.V(5)
        assert len(v5) == 1 << 16
        for s in v5:
            assert ack_decode(ack_encode(s)) == s
            assert ack_encode(s) == oracle.encode(s)


def test_c02_membership_transport(criterion):
    with criterion(2, "membership transport"):
        sets = [oracle.decode(c) for c in range(1 << 12)]
        bad = sum(1 for a in range(1 << 12) for b in range(1 << 12) if (sets[a] in sets[b]) != ack_mem(a, b))
        assert bad == 0


def test_c03_tarski_biconditional(criterion):
    with criterion(3, "Tarski biconditional"):
        tower = TruthTower.build("rank:4", 6)
        v4 = tower.structure
        space = SentenceSpace(v4.elements, max_depth=6)
        bad = [phi for phi in space.sentences(7) if tower.member(phi) != eval_sentence(phi, v4)]
        assert bad == []
        rng = random.Random(SEED)
        sample = [random_sentence(rng, v4.elements, 6) for _ in range(10_000)]
        assert all(tower.member(phi) == eval_sentence(phi, v4) for phi in sample)
        # an independent evaluator on a slice of the sample
        universe = oracle.V(4)
        assert all(tower.member(phi) == oracle.holds(phi, universe) for phi in sample[:2000])


def test_c04_ct_verification(criterion, tower6):
    with criterion(4, "CT- verification"):
        report = verify_ct(tower6, budget_nodes=7)
        assert report.ok, report.render_text()
        assert sum(report.checked.values()) > 0


def test_c05_agreement(criterion):
    with criterion(5, "agreement of independent levels"):
        low = TruthTower.build("rank:4", 3)
        high = TruthTower.build("rank:4", 6)
        report = check_agreement(low.level(3), high.level(6), budget_nodes=7)
        assert report.ok, report.render_text()


def test_c06_negation_totality(criterion, tower6):
    with criterion(6, "negation totality"):
        space = SentenceSpace(tower6.structure.elements, max_depth=tower6.reach - 1)
        exceptions = [phi for phi in space.sentences(7) if tower6.member(phi) == tower6.member(Not(phi))]
        assert exceptions == []


def test_c07_faces(criterion, tower6):
    with criterion(7, "faces: DC and sentential closure"):
        report = faces_audit(tower6, seed=SEED, dc_trials=400, max_width=32, mp_samples=500)
        assert report.ok, report.render_text()
        rows = {r.face: r for r in report.rows}
        assert rows["sentential closure"].trials == 500
        # every width up to 32, against an independent any-disjunct check
        universe = oracle.V(4)
        rng = random.Random(SEED)
        for width in range(1, 33):
            for _ in range(5):
                parts = [In(Const(rng.randrange(16)), Const(rng.randrange(16))) for _ in range(width)]
                whole = balanced_disj(parts)
                assert tower6.member(whole) == any(oracle.holds(p, universe) for p in parts)


def test_c08_piecewise_coding(criterion, tower6):
    with criterion(8, "piecewise coding"):
        m = 1 << 14
        code = piecewise_code(tower6, m)
        universe = oracle.V(4)
        decidable = 0
        for x in range(m):
            phi = decode(x)
            in_language = phi is not None and oracle.is_set_sentence(phi, 16) and phi.depth <= tower6.reach
            decidable += in_language
            want = in_language and oracle.holds(phi, universe)
            assert bool(code >> x & 1) == want, x
        assert decidable > 0


def test_c09_proof_pipeline(criterion, tower30):
    with criterion(9, "proof pipeline"):
        fixtures = corpus()
        assert len(fixtures) >= 10
        rows = []
        for fx in fixtures:
            assert all(tower30.member(a) for a in fx.assumptions), fx.name
            out, stats = eliminate_cuts_with_stats(fx.proof)
            assert check_proof(out, fx.assumptions, fx.goal), fx.name
            assert out.is_cut_free
            assert has_subformula_property(out, fx.assumptions, fx.goal)
            assert tower30.member(fx.goal)
            assert stats.within_reference
            rows.append((fx.name, stats.input_nodes, stats.output_nodes, stats.max_cut_rank))
        print("\n  blow-up (name, nodes in, nodes out, cut rank, supexp(rank)):")
        for name, n_in, n_out, r in rows:
            print(f"    {name:22} {n_in:4} -> {n_out:5}  rank {r}  supexp {supexp(min(r, 4))}")


def test_c10_consistency_probe(criterion):
    with criterion(10, "consistency probe"):
        report = consistency_probe(size=20)
        assert not report.found
        assert report.size == 20


def test_c11_bridge_transport(criterion):
    with criterion(11, "bridge transport"):
        arith = pa_transport(delta0_corpus(50, seed=SEED, max_value=8), 8)
        assert arith.ok and arith.checked == 50, arith.render_text()
        sets = zf_transport(16, budget_nodes=6)
        assert sets.ok and sets.checked > 0, sets.render_text()
        # sampled cross-check with the independent evaluators
        rng = random.Random(SEED)
        universe = oracle.V(4)
        for _ in range(200):
            phi = random_sentence(rng, range(16), 4)
            assert oracle.arith_holds(zf_to_pa(phi), 16) == oracle.holds(phi, universe)
        # the domain carries the auxiliary sets the +/* definitions quantify over
        ordinals = list(ordinal_domain(4).elements)
        assert all(oracle.von_neumann(n) in ordinals for n in range(5))
        for phi in delta0_corpus(10, seed=SEED, max_value=4):
            assert oracle.holds(pa_to_zf(phi), ordinals) == oracle.arith_holds(phi, 5)


def _singleton_image_rank(v):
    """Rank of {{x} : x in decode(v)}, checked against the instance formula."""
    phi = REPL_BATTERY[-1]
    members = oracle.decode(v)
    image = frozenset(frozenset({x}) for x in members)
    universe = oracle.V(4) + [y for y in image if y not in set(oracle.V(4))]
    assert all(oracle.holds(phi, universe, {0: x, 1: frozenset({x})}) for x in members)
    return oracle.rank(image)


def test_c12_schemes(criterion, tower30):
    with criterion(12, "schemes: replacement and reflection"):
        repl = audit_internal(tower30, "repl", REPL_BATTERY)
        statuses = [r.status for r in repl.rows]
        assert "fails" not in statuses and "reach-exceeded" not in statuses
        universe = oracle.V(4)
        for phi, row in zip(REPL_BATTERY, repl.rows):
            in_domain = oracle.holds(replacement_instance(phi), universe)
            assert (row.status == "holds") == in_domain, row
        boundary = [r for r in repl.rows if r.status == "fails at boundary"]
        assert len(boundary) == 1
        v, r = map(int, re.fullmatch(r"v = c(\d+): image set has rank (\d+)", boundary[0].detail).groups())
        assert _singleton_image_rank(v) == r > max(oracle.rank(s) for s in universe)
        assert audit_internal(tower30, "eind", EIND_BATTERY).count("holds") == len(EIND_BATTERY)

        _, sound = reflection_instances(SAMPLE_ARITH, SAMPLE_BATTERY)
        assert sound.ok, sound.render_text()
        _, unsound = reflection_instances(UNSOUND, SAMPLE_BATTERY)
        assert not unsound.ok
        assert [row.formula for row in unsound.failures] == ["(= v0 (S v0))"]
        assert unsound.failures[0].failing == [0]
