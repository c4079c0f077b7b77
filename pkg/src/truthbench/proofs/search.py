"""Deterministic bounded proof search in the cut-free calculus.

The goal ψ from Φ is searched as the one-sided sequent {ψ} ∪ neg(Φ).  The
search space is the usual inversion-normal one: axioms and assumption leaves
close a sequent at once, the invertible rules (OrIntro, AndSplit, DNeg,
ForallEigen with a canonical fresh eigenvariable) are applied eagerly to the
first compound formula in canonical order, and only then does the search
branch over ExistsWitness instances, keeping the existential for reuse.
Iterative deepening on node count returns a smallest proof in that space.

Pruning uses connections.  Every closing axiom pairs a literal with its
complement, and each literal descends from a formula of the sequent through
a known number of rule applications.  The cheapest complementary pair of
unifiable literal patterns is a lower bound on the proof size.  A witness
instance is tried only if it takes part in some connection, since a smallest
proof never introduces an unused instance.
"""
from __future__ import annotations

from functools import lru_cache

from ..errors import ResourceError
from ..syntax.ast import (
    Add, Const, Eq, Exists, In, Mul, Not, Or, Pred, Succ, Var, is_atomic, neg, subterms, terms_of,
    var_indices,
)
from ..syntax.sexpr import to_sexpr
from .tree import ALL, AND, AX, DNEG, EX, LEAF, OR, instance, make, match

SIZE_CEILING = 64
STEP_BUDGET = 2_000_000


@lru_cache(maxsize=1 << 16)
def _key(f):
    return (f.size, to_sexpr(f))


def _sorted(formulas):
    return sorted(formulas, key=_key)


def _invertible(f):
    if isinstance(f, Or):
        return True
    if isinstance(f, Not):
        return isinstance(f.body, (Or, Not, Exists))
    return False


INF = float("inf")


# -- connection bounds ----------------------------------------------------------------


def _pterm(t, bound, side):
    if isinstance(t, Var):
        return ("?", side, t.index) if t.index in bound else ("v", t.index)
    if isinstance(t, Const):
        return ("c", t.code)
    if isinstance(t, Succ):
        return ("S", _pterm(t.arg, bound, side))
    if isinstance(t, (Add, Mul)):
        return ("+" if isinstance(t, Add) else "*", _pterm(t.left, bound, side), _pterm(t.right, bound, side))
    return ("0",)


def _atom_key(a):
    if isinstance(a, Eq):
        return ("=", 2)
    if isinstance(a, In):
        return ("in", 2)
    return (a.name, len(a.args))


def _atom_args(a):
    return a.args if isinstance(a, Pred) else (a.left, a.right)


@lru_cache(maxsize=1 << 14)
def literal_patterns(f) -> tuple:
    """``(positive, atom key, atom, depth, bound variables)`` for every literal reachable by decomposition.

    ``depth`` counts the rule applications needed to expose the literal,
    plus one for the other premise of each AndSplit on the way.
    """
    out = []
    stack = [(f, 0, frozenset())]
    while stack:
        g, d, bound = stack.pop()
        if is_atomic(g):
            out.append((True, _atom_key(g), g, d, bound))
        elif isinstance(g, Not) and is_atomic(g.body):
            out.append((False, _atom_key(g.body), g.body, d, bound))
        elif isinstance(g, Or):
            stack += [(g.left, d + 1, bound), (g.right, d + 1, bound)]
        elif isinstance(g, Exists):
            stack.append((g.body, d + 1, bound | {g.var}))
        else:
            inner = g.body
            if isinstance(inner, Not):
                stack.append((inner.body, d + 1, bound))
            elif isinstance(inner, Or):
                stack += [(neg(inner.left), d + 2, bound), (neg(inner.right), d + 2, bound)]
            else:
                stack.append((neg(inner.body), d + 1, bound | {inner.var}))
    return tuple(out)


def _walk(t, subst):
    while t[0] == "?" and t in subst:
        t = subst[t]
    return t


def _unify(a, b, subst):
    a, b = _walk(a, subst), _walk(b, subst)
    if a == b:
        return True
    if a[0] == "?":
        subst[a] = b
        return True
    if b[0] == "?":
        subst[b] = a
        return True
    if a[0] != b[0] or len(a) != len(b) or a[0] in ("v", "c", "0"):
        return False
    return all(_unify(x, y, subst) for x, y in zip(a[1:], b[1:]))


def _complementary(p, q) -> bool:
    if p[0] == q[0] or p[1] != q[1]:
        return False
    subst = {}
    return all(
        _unify(_pterm(x, p[4], 0), _pterm(y, q[4], 1), subst)
        for x, y in zip(_atom_args(p[2]), _atom_args(q[2]))
    )


@lru_cache(maxsize=1 << 16)
def connection_cost(f, g) -> float:
    """Least node count of a closing axiom fed by literals of ``f`` and ``g``."""
    best = INF
    same = f == g
    for p in literal_patterns(f):
        for q in literal_patterns(g):
            cost = (max(p[3], q[3]) if same else p[3] + q[3]) + 1
            if cost < best and _complementary(p, q):
                best = cost
    return best


@lru_cache(maxsize=1 << 14)
def _max_var(f):
    return max(var_indices(f), default=0)


@lru_cache(maxsize=1 << 14)
def _subterms(f):
    return frozenset(u for t in terms_of(f) for u in subterms(t))


def _is_literal(f):
    return is_atomic(f) or (isinstance(f, Not) and is_atomic(f.body))


class _Search:
    def __init__(self, assumptions, root, step_budget):
        self.assumptions = frozenset(assumptions)
        self.steps = 0
        self.step_budget = step_budget
        self.found = {}
        self.failed = {}
        self._leaf_cost = {}
        self._vs_base = {}
        # literals of the root persist in every sequent of the search
        self.base = frozenset(f for f in root if _is_literal(f))
        ordered = _sorted(self.base)
        self.base_bound = INF
        for i, f in enumerate(ordered):
            self.base_bound = min(self.base_bound, self.leaf_cost(f))
            for g in ordered[i:]:
                self.base_bound = min(self.base_bound, connection_cost(f, g))

    def vs_base(self, f):
        hit = self._vs_base.get(f)
        if hit is None:
            hit = min((connection_cost(f, b) for b in self.base), default=INF)
            self._vs_base[f] = hit
        return hit

    def leaf_cost(self, f):
        """Least node count of an assumption leaf reached by decomposing ``f``."""
        hit = self._leaf_cost.get(f)
        if hit is None:
            hit = INF
            if self.assumptions:
                stack = [(f, 0)]
                while stack:
                    g, d = stack.pop()
                    if d + 1 >= hit:
                        continue
                    if any(a == g or (g.fv and match(g, a) is not None) for a in self.assumptions):
                        hit = d + 1
                    if isinstance(g, Not) and isinstance(g.body, Not):
                        stack.append((g.body.body, d + 1))
                    elif isinstance(g, Not) and isinstance(g.body, Or):
                        stack += [(neg(g.body.left), d + 2), (neg(g.body.right), d + 2)]
                    elif isinstance(g, Not) and isinstance(g.body, Exists):
                        stack.append((neg(g.body.body), d + 1))
                    elif isinstance(g, Or):
                        stack += [(g.left, d + 1), (g.right, d + 1)]
                    elif isinstance(g, Exists):
                        stack.append((g.body, d + 1))
            self._leaf_cost[f] = hit
        return hit

    def lower_bound(self, ordered):
        dynamic = [f for f in ordered if f not in self.base]
        best = self.base_bound
        for i, f in enumerate(dynamic):
            best = min(best, self.leaf_cost(f), self.vs_base(f))
            for g in dynamic[i:]:
                best = min(best, connection_cost(f, g))
        return best

    def relevant(self, f, seq, n):
        """Whether ``f`` can feed a closing leaf of a proof of ``seq`` within ``n`` nodes."""
        if self.leaf_cost(f) <= n or self.vs_base(f) <= n:
            return True
        return any(connection_cost(f, g) <= n for g in seq if g not in self.base)

    def solve(self, seq, n):
        """A proof of ``seq`` with at most ``n`` nodes, or None."""
        if n < 1:
            return None
        hit = self.found.get(seq)
        if hit is not None and hit.nodes <= n:
            return hit
        if self.failed.get(seq, 0) >= n:
            return None
        self.steps += 1
        if self.steps > self.step_budget:
            raise ResourceError(f"proof search passed its budget of {self.step_budget} steps")
        proof = self._expand(seq, n)
        if proof is None:
            self.failed[seq] = max(self.failed.get(seq, 0), n)
        else:
            self.found[seq] = proof
        return proof

    def smallest(self, seq, n):
        for k in range(1, n + 1):
            p = self.solve(seq, k)
            if p is not None:
                return p
        return None

    def _expand(self, seq, n):
        ordered = _sorted(seq)
        closing = [f.body for f in seq if isinstance(f, Not) and f.body in seq and is_atomic(f.body)]
        if closing:
            return make(AX, min(closing, key=_key))
        for f in ordered:
            if f in self.assumptions:
                return make(LEAF, f)
        if n < 2 or self.lower_bound(ordered) > n:
            return None
        for f in ordered:
            if _invertible(f):
                return self._invert(seq, f, n)
        for f in ordered:
            if isinstance(f, Exists):
                for t in self._witnesses(seq):
                    new = instance(f, t)
                    if new in seq:
                        continue
                    premise = seq | {new}
                    if not self.relevant(new, premise, n - 1):
                        continue
                    child = self.solve(premise, n - 1)
                    if child is not None:
                        return make(EX, f, [child], term=t)
        return None

    def _invert(self, seq, f, n):
        rest = seq - {f}
        if isinstance(f, Or):
            child = self.solve(rest | {f.left, f.right}, n - 1)
            return None if child is None else make(OR, f, [child])
        inner = f.body
        if isinstance(inner, Not):
            child = self.solve(rest | {inner.body}, n - 1)
            return None if child is None else make(DNEG, f, [child])
        if isinstance(inner, Exists):
            a = 1 + max(map(_max_var, seq), default=0)
            child = self.solve(rest | {neg(instance(inner, Var(a)))}, n - 1)
            return None if child is None else make(ALL, f, [child], eigen=a)
        left = self.smallest(rest | {neg(inner.left)}, n - 2)
        if left is None:
            return None
        right = self.solve(rest | {neg(inner.right)}, n - 1 - left.nodes)
        return None if right is None else make(AND, f, [left, right])

    def _witnesses(self, seq):
        free = set()
        for f in seq:
            free |= f.fv
        terms = {u for f in seq for u in _subterms(f) if u.fv <= free}
        if not terms:
            terms = {Var(1 + max(map(_max_var, seq), default=0))}
        return sorted(terms, key=lambda t: (t.size, repr(t)))


def search_sequent(assumptions, goal):
    return frozenset({goal} | {neg(a) for a in assumptions})


def bounded_search(assumptions, goal, size, ceiling=SIZE_CEILING, step_budget=STEP_BUDGET):
    """A smallest proof of ``goal`` from ``assumptions`` with at most ``size`` nodes, or None."""
    if size > ceiling:
        raise ResourceError(f"search size {size} is above the ceiling {ceiling}")
    root = search_sequent(assumptions, goal)
    return _Search(assumptions, root, step_budget).smallest(root, size)
