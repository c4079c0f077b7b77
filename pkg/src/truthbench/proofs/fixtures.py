"""Hand-built proofs with cuts over constants of V4, all from assumptions true there."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..syntax.ast import And, Const, Exists, Forall, Implies, In, Not, Or, Var, neg
from .cutelim import identity
from .tree import ALL, AND, AX, CUT, DNEG, EX, LEAF, OR, make


@dataclass(frozen=True)
class Fixture:
    name: str
    assumptions: tuple
    goal: object
    proof: object


def c(k):
    return Const(k)


def mem(a, b):
    return In(a if not isinstance(a, int) else c(a), b if not isinstance(b, int) else c(b))


# true atoms of V4: 0 ∈ 1, 1 ∈ 2, 0 ∈ 3, 1 ∈ 3, 2 ∈ 4
A, B, C, D = mem(0, 1), mem(1, 2), mem(1, 3), mem(2, 4)


def modus_ponens(d_a, a, b):
    """From a proof of Δ ∪ {a} and the leaf ¬a ∨ b, one cut gives Δ ∪ {b}."""
    imp = Or(Not(a), b)
    split = make(AND, Not(imp), [d_a, identity(b, itertools.count(50))])
    return make(CUT, imp, [make(LEAF, imp), split])


def excluded_middle(a=A):
    """The two-node proof of ¬a ∨ a."""
    return make(OR, Or(Not(a), a), [make(AX, a)])


def _mp():
    imp = Or(Not(A), B)
    return Fixture("modus-ponens", (A, imp), B, modus_ponens(make(LEAF, A), A, B))


def _chain3():
    steps = [(A, B), (B, C), (C, D)]
    d = make(LEAF, A)
    for a, b in steps:
        d = modus_ponens(d, a, b)
    return Fixture("three-cut-chain", (A,) + tuple(Or(Not(a), b) for a, b in steps), D, d)


def _atomic_cut():
    proof = make(CUT, A, [make(LEAF, A), make(DNEG, Not(Not(A)), [make(AX, A)])])
    return Fixture("atomic-cut", (A,), Not(Not(A)), proof)


def _dneg_cut():
    goal = Or(A, B)
    left = make(DNEG, Not(Not(A)), [make(LEAF, A)])
    right = make(OR, goal, [make(AX, A)])
    return Fixture("double-negation-cut", (A,), goal, make(CUT, Not(Not(A)), [left, right]))


def _exists_cut():
    e = Exists(0, In(Var(0), c(1)))
    imp = Or(Not(e), B)
    left = make(EX, e, [make(LEAF, A)], term=c(0))
    split = make(AND, Not(imp), [identity(e, iter(range(60, 80))), make(AX, B)])
    right = make(CUT, imp, [make(LEAF, imp), split])
    return Fixture("exists-cut", (A, imp), B, make(CUT, e, [left, right]))


def _forall_eigen_cut():
    # ∀x ¬(x ∈ c0) gives ∀x (x ∈ c0 → x ∈ c1), then its instance at c2
    empty = Not(Exists(0, In(Var(0), c(0))))
    body = Implies(In(Var(0), c(0)), In(Var(0), c(1)))
    cut_formula = Forall(0, body)
    a = Var(7)
    inner = make(CUT, empty, [make(LEAF, empty), make(EX, empty.body, [make(AX, In(a, c(0)))], term=a)])
    at_a = make(OR, Implies(In(a, c(0)), In(a, c(1))), [inner])
    left = make(ALL, cut_formula, [at_a], eigen=7)
    goal = Implies(mem(2, 0), mem(2, 1))
    split = make(AND, Not(goal), [make(AX, mem(2, 0)), make(AX, mem(2, 1))])
    right = make(OR, goal, [make(EX, neg(cut_formula), [split], term=c(2))])
    return Fixture("forall-eigen-cut", (empty,), goal, make(CUT, cut_formula, [left, right]))


def _conj_swap():
    ab, ba = And(A, B), And(B, A)
    left = make(AND, ab, [make(LEAF, A), make(LEAF, B)])
    right = make(OR, neg(ab), [make(AND, ba, [make(AX, B), make(AX, A)])])
    return Fixture("conjunction-swap", (A, B), ba, make(CUT, ab, [left, right]))


def _forall_leaf():
    # ∀x (x ∈ c2 → ∃y y ∈ x) and 1 ∈ 2 give ∃y y ∈ c1
    body = Implies(In(Var(0), c(2)), Exists(1, In(Var(1), Var(0))))
    law = Forall(0, body)
    goal = Exists(1, In(Var(1), c(1)))
    split = make(AND, Not(Implies(B, goal)), [make(LEAF, B), identity(goal, iter(range(60, 80)))])
    right = make(EX, neg(law), [split], term=c(1))
    return Fixture("forall-leaf-cut", (B, law), goal, make(CUT, law, [make(LEAF, law), right]))


def _swap_quantifiers():
    src = Exists(0, Exists(1, In(Var(0), Var(1))))
    goal = Exists(1, Exists(0, In(Var(0), Var(1))))
    a, b = Var(5), Var(6)
    ax = make(AX, In(a, b))
    inner = make(EX, Exists(0, In(Var(0), b)), [ax], term=a)
    outer = make(EX, goal, [inner], term=b)
    fb = make(ALL, Not(Exists(1, In(a, Var(1)))), [outer], eigen=6)
    fa = make(ALL, Not(src), [fb], eigen=5)
    return Fixture("quantifier-swap-cut", (src,), goal, make(CUT, src, [make(LEAF, src), fa]))


def _reuse_disjunction():
    # the cut formula A ∨ B is used on both sides of a later split
    ab = Or(A, B)
    left = make(OR, ab, [make(LEAF, A)])
    goal = Or(B, A)
    right = make(OR, goal, [make(AND, Not(ab), [make(AX, A), make(AX, B)])])
    return Fixture("disjunction-cut", (A,), goal, make(CUT, ab, [left, right]))


def _mp_exists():
    e = Exists(0, In(c(0), Var(0)))
    imp = Or(Not(A), e)
    proof = modus_ponens(make(LEAF, A), A, e)
    return Fixture("modus-ponens-exists", (A, imp), e, proof)


def _stacked():
    # two cuts stacked on the same atom
    inner = make(CUT, A, [make(LEAF, A), make(DNEG, Not(Not(A)), [make(AX, A)])])
    outer = make(CUT, Not(Not(A)), [inner, make(OR, Or(A, B), [make(AX, A)])])
    return Fixture("stacked-cuts", (A,), Or(A, B), outer)


def corpus() -> list:
    return [
        _mp(), _chain3(), _atomic_cut(), _dneg_cut(), _exists_cut(), _forall_eigen_cut(),
        _conj_swap(), _forall_leaf(), _swap_quantifiers(), _reuse_disjunction(), _mp_exists(),
        _stacked(),
    ]


def by_name(name) -> Fixture:
    for f in corpus():
        if f.name == name:
            return f
    raise KeyError(name)
