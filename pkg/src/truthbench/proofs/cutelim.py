"""Cut elimination for the one-sided calculus, with blow-up instrumentation.

The procedure first renames every eigenvariable apart and replaces each
assumption leaf φ by a cut-free identity proof of {φ, neg φ}, so the
assumption moves into the end sequent as neg φ.  Cuts are then removed
bottom-up: each is reduced on its cut formula using the inversion lemmas of
the calculus, recursing only on strictly smaller cut formulas.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import ResourceError
from ..reports import report_type
from ..syntax.ast import (
    Exists, Not, Or, Var, instantiate, is_atomic, neg, subst_term, terms_of, var_indices,
)
from .tree import ALL, AND, AX, CUT, DNEG, EX, LEAF, OR, ProofTree, instance, make, max_cut_rank

SUPEXP_BITS = 1 << 17


def supexp(n: int, max_bits: int = SUPEXP_BITS) -> int:
    """Tetration: supexp(0) = 1, supexp(n+1) = 2 ** supexp(n)."""
    value = 1
    for _ in range(n):
        if value > max_bits:
            raise ResourceError(f"supexp({n}) has more than {max_bits} bits")
        value = 1 << value
    return value


def tower(height: int, top: int, max_bits: int = SUPEXP_BITS):
    """``2^2^…^top`` with ``height`` twos; None once it passes the bit budget."""
    value = top
    for _ in range(height):
        if value > max_bits:
            return None
        value = 1 << value
    return value


# -- proof transformations -----------------------------------------------------------


def _rebuild(node, children):
    if all(a is b for a, b in zip(children, node.children)):
        return node
    return make(node.rule, node.principal, children, node.term, node.eigen)


def rename(d: ProofTree, mapping: dict, fresh=None) -> ProofTree:
    """Apply a variable substitution to a proof; with ``fresh``, also rename eigenvariables apart."""
    mapping = {k: v for k, v in mapping.items()}
    if not mapping and fresh is None:
        return d
    eigen = d.eigen
    inner = mapping
    if d.rule == ALL and fresh is not None:
        eigen = next(fresh)
        inner = {**mapping, d.eigen: Var(eigen)}
    children = tuple(rename(c, inner, fresh) for c in d.children)
    principal = instantiate(d.principal, mapping)
    term = None if d.term is None else subst_term(d.term, mapping)
    if d.rule in (AX, LEAF):
        return make(d.rule, principal)
    return make(d.rule, principal, children, term, eigen)


def identity(x, fresh) -> ProofTree:
    """Cut-free proof of ``{x, neg x}``."""
    if isinstance(x, Not):
        return identity(x.body, fresh)
    if is_atomic(x):
        return make(AX, x)
    if isinstance(x, Or):
        halves = [make(OR, x, [identity(p, fresh)]) for p in (x.left, x.right)]
        return make(AND, Not(x), halves)
    a = next(fresh)
    inner = identity(instance(x, Var(a)), fresh)
    return make(ALL, Not(x), [make(EX, x, [inner], term=Var(a))], eigen=a)


def expand_leaves(d: ProofTree, fresh) -> ProofTree:
    if d.rule == LEAF:
        return identity(d.principal, fresh)
    return _rebuild(d, tuple(expand_leaves(c, fresh) for c in d.children))


def _invert(d, target, at_principal):
    """Rewrite every introduction of ``target`` via ``at_principal(node, recurse)``."""

    def go(node):
        if target not in node.conclusion:
            return node
        if node.principal == target and node.rule not in (AX, CUT, LEAF):
            return at_principal(node, go)
        return _rebuild(node, tuple(go(c) for c in node.children))

    return go(d)


def inv_or(d, x):
    return _invert(d, x, lambda node, go: go(node.children[0]))


def inv_and(d, nx, i):
    return _invert(d, nx, lambda node, go: go(node.children[i]))


def inv_dneg(d, nnx):
    return _invert(d, nnx, lambda node, go: go(node.children[0]))


def inv_forall(d, nx, t, fresh):
    def step(node, go):
        return go(rename(node.children[0], {node.eigen: t}, fresh))

    return _invert(d, nx, step)


class _Eliminator:
    def __init__(self, fresh):
        self.fresh = fresh
        self.cuts = 0

    def run(self, d):
        kids = tuple(self.run(c) for c in d.children)
        if d.rule != CUT:
            return _rebuild(d, kids)
        self.cuts += 1
        return self.reduce(d.principal, kids[0], kids[1])

    def reduce(self, c, d_pos, d_neg):
        """Cut-free proof of (concl d_pos - c) ∪ (concl d_neg - neg c); both inputs cut-free."""
        if c not in d_pos.conclusion:
            return d_pos
        nc = neg(c)
        if nc not in d_neg.conclusion:
            return d_neg
        if isinstance(c, Not):
            e, d_e, d_ne = c.body, d_neg, d_pos
        else:
            e, d_e, d_ne = c, d_pos, d_neg
        ne = Not(e)
        if isinstance(e, Not):
            return self.reduce(e.body, inv_dneg(d_ne, ne), d_e)
        if isinstance(e, Or):
            left = inv_or(d_e, e)
            r = self.reduce(e.left, left, inv_and(d_ne, ne, 0))
            return self.reduce(e.right, r, inv_and(d_ne, ne, 1))
        if isinstance(e, Exists):
            return self._trace_exists(e, d_e, d_ne)
        return self._graft_atom(e, d_e, d_ne)

    def _graft_atom(self, a, d_a, d_na):
        def go(node):
            if a not in node.conclusion:
                return node
            if node.rule == AX and node.principal == a:
                return rename(d_na, {}, self.fresh)
            return _rebuild(node, tuple(go(c) for c in node.children))

        return go(d_a)

    def _trace_exists(self, e, d_e, d_ne):
        ne = Not(e)

        def go(node):
            if e not in node.conclusion:
                return node
            if node.rule == EX and node.principal == e:
                child = go(node.children[0])
                witness = instance(e, node.term)
                return self.reduce(witness, child, inv_forall(rename(d_ne, {}, self.fresh), ne, node.term, self.fresh))
            return _rebuild(node, tuple(go(c) for c in node.children))

        return go(d_e)


def _fresh_supply(d):
    top = 0
    for _, node in d.walk():
        for f in node.conclusion | {node.principal}:
            top = max(top, max(var_indices(f), default=0))
            for t in terms_of(f):
                top = max(top, max(t.fv, default=0))
        if node.term is not None:
            top = max(top, max(node.term.fv, default=0))
        if node.eigen is not None:
            top = max(top, node.eigen)
    return itertools.count(top + 1)


@report_type
@dataclass(frozen=True)
class BlowupStats:
    input_nodes: int
    output_nodes: int
    cuts_eliminated: int
    max_cut_rank: int
    reference_bound: object
    within_reference: bool
    supexp_curve: list = field(default_factory=list)

    def render_text(self):
        ref = "astronomical" if self.reference_bound is None else str(self.reference_bound)
        return "\n".join([
            f"nodes        {self.input_nodes} -> {self.output_nodes}",
            f"cuts         {self.cuts_eliminated} eliminated, max rank {self.max_cut_rank}",
            f"reference    tower(rank, input) = {ref}; within: {self.within_reference}",
            f"supexp       {', '.join(map(str, self.supexp_curve))}",
        ])


def eliminate_cuts(proof: ProofTree) -> ProofTree:
    return eliminate_cuts_with_stats(proof)[0]


def eliminate_cuts_with_stats(proof: ProofTree):
    """``(cut-free proof, BlowupStats)``; cut-free input comes back unchanged."""
    rank = max_cut_rank(proof)
    if proof.is_cut_free:
        out, cuts = proof, 0
    else:
        fresh = _fresh_supply(proof)
        d = expand_leaves(rename(proof, {}, fresh), fresh)
        elim = _Eliminator(fresh)
        out, cuts = elim.run(d), elim.cuts
    bound = tower(rank, proof.nodes)
    curve = []
    for k in range(rank + 1):
        try:
            curve.append(supexp(k))
        except ResourceError:
            break
    stats = BlowupStats(
        proof.nodes, out.nodes, cuts, rank, bound, bound is None or out.nodes <= bound, curve,
    )
    return out, stats
