"""One-sided sequent proofs: trees, local rule checks, and the subformula property.

A sequent is a finite set of formulas read disjunctively.  ``neg`` strips a
leading negation or adds one, so every formula X is paired with its
complement: literals close axioms, and each compound X has exactly one rule
introducing it:

    Ax             ⊢ Γ, A, ¬A                          (A atomic)
    OrIntro        ⊢ Γ, ψ1, ψ2      / ⊢ Γ, ψ1 ∨ ψ2
    AndSplit       ⊢ Γ, neg ψ1  and  ⊢ Γ, neg ψ2  / ⊢ Γ, ¬(ψ1 ∨ ψ2)
    ExistsWitness  ⊢ Γ, ψ(t)        / ⊢ Γ, ∃v ψ
    ForallEigen    ⊢ Γ, neg ψ(a)    / ⊢ Γ, ¬∃v ψ       (a not free below)
    DNeg           ⊢ Γ, ψ           / ⊢ Γ, ¬¬ψ
    Cut            ⊢ Γ, C  and  ⊢ Γ, neg C  / ⊢ Γ
    AssumptionLeaf ⊢ Γ, φ                              (φ an assumption)

Premises may omit formulas of Γ, so weakening is built in.  Nodes store their
conclusion; :func:`make` computes the least conclusion a node can have.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ProofStructureError, SubstitutionError
from ..syntax.ast import (
    Exists, Formula, Not, Or, Term, Var, immediate_subformulas, instantiate, is_atomic, neg,
    subformulas, term_children,
)

AX, OR, AND, EX, ALL, DNEG, CUT, LEAF = (
    "Ax", "OrIntro", "AndSplit", "ExistsWitness", "ForallEigen", "DNeg", "Cut", "AssumptionLeaf",
)
RULES = (AX, OR, AND, EX, ALL, DNEG, CUT, LEAF)
ARITY = {AX: 0, LEAF: 0, OR: 1, EX: 1, ALL: 1, DNEG: 1, AND: 2, CUT: 2}


@dataclass(frozen=True)
class ProofTree:
    rule: str
    conclusion: frozenset
    principal: Formula | None = None
    children: tuple = ()
    term: Term | None = None
    eigen: int | None = None
    nodes: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", 1 + sum(c.nodes for c in self.children))

    def walk(self, path=()):
        """Pre-order ``(path, node)`` pairs."""
        stack = [(path, self)]
        while stack:
            p, node = stack.pop()
            yield p, node
            stack.extend(reversed([(p + (i,), c) for i, c in enumerate(node.children)]))

    def formulas(self):
        out = set()
        for _, node in self.walk():
            out |= node.conclusion
        return out

    @property
    def cut_count(self):
        return sum(1 for _, n in self.walk() if n.rule == CUT)

    @property
    def is_cut_free(self):
        return self.cut_count == 0


def instance(phi: Exists, t: Term) -> Formula:
    return instantiate(phi.body, {phi.var: t})


def side_formulas(node: ProofTree) -> list:
    """For each premise, the formulas it may use beyond the conclusion."""
    p = node.principal
    if node.rule == OR:
        return [{p.left, p.right}]
    if node.rule == AND:
        inner = p.body
        return [{neg(inner.left)}, {neg(inner.right)}]
    if node.rule == EX:
        return [{instance(p, node.term)}]
    if node.rule == ALL:
        return [{neg(instance(p.body, Var(node.eigen)))}]
    if node.rule == DNEG:
        return [{p.body.body}]
    if node.rule == CUT:
        return [{p}, {neg(p)}]
    return []


def make(rule, principal, children=(), term=None, eigen=None) -> ProofTree:
    """A node with the least conclusion its premises allow."""
    if rule == AX:
        concl = {principal, Not(principal)}
    elif rule == LEAF:
        concl = {principal}
    else:
        probe = ProofTree(rule, frozenset(), principal, tuple(children), term, eigen)
        concl = set()
        for child, sides in zip(children, side_formulas(probe)):
            concl |= child.conclusion - sides
        if rule != CUT:
            concl.add(principal)
    return ProofTree(rule, frozenset(concl), principal, tuple(children), term, eigen)


# -- checking ----------------------------------------------------------------------


def _shape_ok(node):
    p = node.principal
    if node.rule == AX:
        return is_atomic(p)
    if node.rule == OR:
        return isinstance(p, Or)
    if node.rule == AND:
        return isinstance(p, Not) and isinstance(p.body, Or)
    if node.rule == EX:
        return isinstance(p, Exists) and isinstance(node.term, Term)
    if node.rule == ALL:
        return isinstance(p, Not) and isinstance(p.body, Exists) and isinstance(node.eigen, int)
    if node.rule == DNEG:
        return isinstance(p, Not) and isinstance(p.body, Not)
    return True


def _structure(node, path):
    if not isinstance(node, ProofTree):
        raise ProofStructureError(f"expected a proof node, found {type(node).__name__}", path)
    if node.rule not in RULES:
        raise ProofStructureError(f"unknown rule {node.rule!r}", path)
    if len(node.children) != ARITY[node.rule]:
        raise ProofStructureError(f"{node.rule} takes {ARITY[node.rule]} premise(s), found {len(node.children)}", path)
    if not isinstance(node.principal, Formula):
        raise ProofStructureError(f"{node.rule} needs a principal formula", path)
    if not all(isinstance(f, Formula) for f in node.conclusion):
        raise ProofStructureError("conclusion holds a non-formula", path)


def audit_proof(proof: ProofTree, assumptions=()) -> list:
    """``(path, problem)`` for every locally invalid node; raises on malformed trees."""
    assumptions = frozenset(assumptions)
    problems = []
    for path, node in proof.walk():
        _structure(node, path)
        concl, p = node.conclusion, node.principal
        if not _shape_ok(node):
            problems.append((path, f"principal formula has the wrong shape for {node.rule}"))
            continue
        if node.rule == AX:
            if p not in concl or Not(p) not in concl:
                problems.append((path, "axiom needs both the atom and its negation"))
            continue
        if node.rule == LEAF:
            if p not in assumptions:
                problems.append((path, "leaf formula is not an assumption"))
            elif p not in concl:
                problems.append((path, "leaf formula missing from its sequent"))
            continue
        if node.rule != CUT and p not in concl:
            problems.append((path, "principal formula missing from the conclusion"))
            continue
        if node.rule == ALL and any(node.eigen in f.fv for f in concl):
            problems.append((path, f"eigenvariable v{node.eigen} is free in the conclusion"))
            continue
        try:
            sides = side_formulas(node)
        except SubstitutionError as exc:
            problems.append((path, f"witness substitution: {exc}"))
            continue
        for i, (child, extra) in enumerate(zip(node.children, sides)):
            stray = child.conclusion - concl - extra
            if stray:
                problems.append((path + (i,), f"premise has formulas not licensed by {node.rule}"))
    return problems


def root_ok(proof: ProofTree, assumptions, goal) -> bool:
    """The end sequent must be contained in ``{goal} ∪ neg(assumptions)``."""
    allowed = {goal} | {neg(a) for a in assumptions}
    return proof.conclusion <= allowed


def check_proof(proof: ProofTree, assumptions, goal) -> bool:
    """True iff every node is rule-valid and the root proves ``goal`` from ``assumptions``.

    Assumptions enter either as leaves or as negated members of the end
    sequent, the one-sided reading of ``φ1 ∧ … ∧ φn → ψ``.
    """
    return not audit_proof(proof, assumptions) and root_ok(proof, assumptions, goal)


# -- subformula property ------------------------------------------------------------


def _match_term(pat, t, free, binding):
    if isinstance(pat, Var) and pat.index in free:
        prev = binding.get(pat.index)
        if prev is None:
            binding[pat.index] = t
            return True
        return prev == t
    if type(pat) is not type(t):
        return False
    kids = term_children(pat)
    if not kids:
        return pat == t
    return all(_match_term(a, b, free, binding) for a, b in zip(kids, term_children(t)))


def match(pattern: Formula, phi: Formula, binding=None):
    """A substitution for the free variables of ``pattern`` turning it into ``phi``, or None."""
    binding = {} if binding is None else binding
    free = pattern.fv
    return binding if _match(pattern, phi, free, binding) else None


def _match(p, f, free, binding):
    if type(p) is not type(f):
        return False
    if isinstance(p, Not):
        return _match(p.body, f.body, free, binding)
    if isinstance(p, Or):
        return _match(p.left, f.left, free, binding) and _match(p.right, f.right, free, binding)
    if isinstance(p, Exists):
        return p.var == f.var and _match(p.body, f.body, free - {p.var}, binding)
    if hasattr(p, "args"):
        if p.name != f.name or len(p.args) != len(f.args):
            return False
        return all(_match_term(a, b, free, binding) for a, b in zip(p.args, f.args))
    return _match_term(p.left, f.left, free, binding) and _match_term(p.right, f.right, free, binding)


def subformula_pool(assumptions, goal) -> set:
    pool = set(subformulas(goal))
    for a in assumptions:
        pool |= set(subformulas(a))
    return pool


def is_instance_of_pool(phi, pool) -> bool:
    for candidate in (phi, neg(phi)):
        if candidate in pool:
            return True
        if any(match(p, candidate) is not None for p in pool if p.fv and type(p) is type(candidate)):
            return True
    return False


def has_subformula_property(proof: ProofTree, assumptions, goal) -> bool:
    """Every formula in the proof, or its complement, instantiates a subformula of the goal or an assumption."""
    pool = subformula_pool(assumptions, goal)
    return all(is_instance_of_pool(f, pool) for f in proof.formulas())


def foreign_formulas(proof: ProofTree, assumptions, goal) -> list:
    pool = subformula_pool(assumptions, goal)
    return [f for f in proof.formulas() if not is_instance_of_pool(f, pool)]


def max_cut_rank(proof: ProofTree) -> int:
    """Largest depth of a cut formula, 0 for cut-free proofs."""
    return max((n.principal.depth for _, n in proof.walk() if n.rule == CUT), default=0)


def eigenvariables(proof: ProofTree) -> list:
    return [n.eigen for _, n in proof.walk() if n.rule == ALL]


__all__ = [
    "AX", "OR", "AND", "EX", "ALL", "DNEG", "CUT", "LEAF", "RULES", "ProofTree", "make", "instance",
    "side_formulas", "audit_proof", "check_proof", "root_ok", "match", "has_subformula_property",
    "foreign_formulas", "subformula_pool", "max_cut_rank", "eigenvariables", "immediate_subformulas",
]
