"""Formula families and membership of their closed instances."""
from __future__ import annotations

from itertools import combinations

from .ast import Var, atom_terms, instantiate, subformulas, var_indices


def depth_family(k: int):
    """Formulas of depth at most ``k``; closed under immediate subformulas."""

    def member(phi):
        return phi.depth <= k

    member.bound = k
    return member


def one_free_variable(family):
    """Members of ``family`` with at most one free variable."""
    return lambda phi: family(phi) and len(phi.fv) <= 1


def _closed_terms(phi):
    seen = []
    for f in subformulas(phi):
        for t in atom_terms(f):
            if t.closed and t not in seen:
                seen.append(t)
    return seen


def _abstract(phi, targets, fresh):
    """Replace every occurrence of each closed term in ``targets`` by its own fresh variable."""
    from .ast import Eq, Exists, In, Not, Or, Pred

    def term(t):
        return Var(fresh[targets.index(t)]) if t in targets else t

    def go(f):
        if isinstance(f, Eq):
            return Eq(term(f.left), term(f.right))
        if isinstance(f, In):
            return In(term(f.left), term(f.right))
        if isinstance(f, Pred):
            return Pred(f.name, tuple(term(a) for a in f.args))
        if isinstance(f, Not):
            return Not(go(f.body))
        if isinstance(f, Or):
            return Or(go(f.left), go(f.right))
        return Exists(f.var, go(f.body))

    return go(phi)


def is_fsent(phi, family, max_terms=8) -> bool:
    """True iff ``phi`` is closed and arises by substituting closed terms into a member of ``family``.

    Families closed under substitution (depth families are) are decided by a
    single call; otherwise the maximal closed terms of ``phi`` are abstracted
    in every combination, up to ``max_terms`` distinct terms.
    """
    if phi.fv:
        return False
    if family(phi):
        return True
    if getattr(family, "bound", None) is not None:
        return False
    terms = _closed_terms(phi)[:max_terms]
    base = max(var_indices(phi), default=-1) + 1
    for r in range(1, len(terms) + 1):
        for chosen in combinations(terms, r):
            fresh = list(range(base, base + r))
            general = _abstract(phi, list(chosen), fresh)
            back = instantiate(general, dict(zip(fresh, chosen)))
            if back == phi and family(general):
                return True
    return False
