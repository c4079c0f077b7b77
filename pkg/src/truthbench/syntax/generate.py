"""Exhaustive and random generation of set-signature formulas.

Node counts include term nodes, so ``(in (c 0) (c 1))`` has size 3.  Exhaustive
enumeration names bound variables canonically: the i-th enclosing quantifier
binds ``v{i}``; this covers every sentence up to renaming of bound variables.
"""
from __future__ import annotations

import random
from functools import lru_cache

from .ast import Const, Eq, Exists, In, Not, Or, Var


class SentenceSpace:
    """Enumerates formulas over a fixed constant set by exact node count."""

    def __init__(self, constants, max_depth=None):
        self.constants = tuple(sorted(constants))
        self.max_depth = max_depth
        self._of_size = lru_cache(maxsize=None)(self._build)

    def _terms(self, scope):
        return [Const(a) for a in self.constants] + [Var(i) for i in range(scope)]

    def _build(self, n, scope):
        """All formulas of exactly ``n`` nodes whose free variables lie in v0..v{scope-1}."""
        out = []
        if n == 3:
            terms = self._terms(scope)
            for cls in (Eq, In):
                out.extend(cls(s, t) for s in terms for t in terms)
        if n >= 4:
            out.extend(Not(f) for f in self._of_size(n - 1, scope))
            out.extend(Exists(scope, f) for f in self._of_size(n - 1, scope + 1))
        if n >= 7:
            for k in range(3, n - 3):
                lefts = self._of_size(k, scope)
                rights = self._of_size(n - 1 - k, scope)
                out.extend(Or(a, b) for a in lefts for b in rights)
        if self.max_depth is not None:
            out = [f for f in out if f.depth <= self.max_depth]
        return tuple(out)

    def formulas(self, max_size, scope=0):
        for n in range(3, max_size + 1):
            if n >= 7 and n == max_size:
                # the top-level disjunctions dominate the count: stream them
                yield from self._stream(n, scope)
            else:
                yield from self._of_size(n, scope)

    def _stream(self, n, scope):
        for f in self._of_size(n - 1, scope):
            g = Not(f)
            if self.max_depth is None or g.depth <= self.max_depth:
                yield g
        for f in self._of_size(n - 1, scope + 1):
            g = Exists(scope, f)
            if self.max_depth is None or g.depth <= self.max_depth:
                yield g
        for k in range(3, n - 3):
            rights = self._of_size(n - 1 - k, scope)
            for a in self._of_size(k, scope):
                for b in rights:
                    g = Or(a, b)
                    if self.max_depth is None or g.depth <= self.max_depth:
                        yield g

    def sentences(self, max_size):
        return self.formulas(max_size, 0)

    def count(self, max_size, scope=0):
        return sum(1 for _ in self.formulas(max_size, scope))


def enumerate_sentences(constants, max_size, max_depth=None):
    """Every sentence over ``constants`` with at most ``max_size`` nodes."""
    return SentenceSpace(constants, max_depth).sentences(max_size)


def random_formula(rng: random.Random, constants, depth, scope=0, weights=(1, 1, 1)):
    """A random formula of exactly ``depth`` with free variables among v0..v{scope-1}.

    ``weights`` are the relative odds of Not/Or/Exists at compound nodes.
    Atoms prefer bound variables, so quantifiers are rarely vacuous.
    """
    if depth == 1:
        terms = [Const(a) for a in constants]
        if scope:
            pick = lambda: Var(rng.randrange(scope)) if rng.random() < 0.7 else Const(rng.choice(constants))  # noqa: E731
        else:
            pick = lambda: rng.choice(terms)  # noqa: E731
        cls = Eq if rng.random() < 0.4 else In
        return cls(pick(), pick())
    kind = rng.choices(("not", "or", "exists"), weights=weights)[0]
    if kind == "not":
        return Not(random_formula(rng, constants, depth - 1, scope, weights))
    if kind == "exists":
        return Exists(scope, random_formula(rng, constants, depth - 1, scope + 1, weights))
    other = rng.randint(1, depth - 1)
    a = random_formula(rng, constants, depth - 1, scope, weights)
    b = random_formula(rng, constants, other, scope, weights)
    return Or(a, b) if rng.random() < 0.5 else Or(b, a)


def random_sentence(rng: random.Random, constants, max_depth, weights=(1, 1, 1)):
    constants = tuple(constants)
    return random_formula(rng, constants, rng.randint(1, max_depth), 0, weights)
