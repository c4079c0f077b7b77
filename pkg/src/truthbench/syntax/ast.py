"""Immutable first-order syntax over the arithmetic and set-theoretic signatures.

Primitive connectives are ``Not``, ``Or`` and ``Exists``; conjunction, the
universal quantifier and implication exist only as builder functions that
expand into the primitives.  Every node caches its hash, depth, node count and
free variables, since truth towers key memo tables on formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from ..errors import SignatureError, SubstitutionError

ARITH = "arith"
SET = "set"


# -- terms ------------------------------------------------------------------


class Term:
    __slots__ = ()

    def __hash__(self):
        return self._hash

    @property
    def closed(self) -> bool:
        return not self.fv


def _term_cache(obj, parts, children=(), fv=frozenset(), arith=False):
    object.__setattr__(obj, "_hash", hash(parts))
    object.__setattr__(obj, "size", 1 + sum(c.size for c in children))
    for c in children:
        fv = fv | c.fv
        arith = arith or c.arith
    object.__setattr__(obj, "fv", fv)
    object.__setattr__(obj, "arith", arith)


@dataclass(frozen=True, eq=True, slots=True)
class Var(Term):
    index: int
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("variable index must be non-negative")
        _term_cache(self, ("v", self.index), fv=frozenset((self.index,)))

    __hash__ = Term.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Const(Term):
    """The constant ``c_a`` naming the hereditarily finite set with Ackermann code ``a``."""

    code: int
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.code < 0:
            raise ValueError("constant code must be non-negative")
        _term_cache(self, ("c", self.code))

    __hash__ = Term.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Zero(Term):
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _term_cache(self, ("0",), arith=True)

    __hash__ = Term.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Succ(Term):
    arg: Term
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _term_cache(self, ("S", self.arg._hash), (self.arg,), arith=True)

    __hash__ = Term.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Add(Term):
    left: Term
    right: Term
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _term_cache(self, ("+", self.left._hash, self.right._hash), (self.left, self.right), arith=True)

    __hash__ = Term.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Mul(Term):
    left: Term
    right: Term
    _hash: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    fv: frozenset = field(init=False, repr=False, compare=False)
    arith: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _term_cache(self, ("*", self.left._hash, self.right._hash), (self.left, self.right), arith=True)

    __hash__ = Term.__hash__


ZERO = Zero()


def numeral(n: int) -> Term:
    """``S^n(0)``, built iteratively."""
    t = ZERO
    for _ in range(n):
        t = Succ(t)
    return t


def numeral_value(t: Term):
    """Return n if ``t`` is literally ``S^n(0)``, else None."""
    n = 0
    while isinstance(t, Succ):
        t, n = t.arg, n + 1
    return n if isinstance(t, Zero) else None


def term_children(t: Term) -> tuple:
    if isinstance(t, Succ):
        return (t.arg,)
    if isinstance(t, (Add, Mul)):
        return (t.left, t.right)
    return ()


def subterms(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(term_children(u)))


def subst_term(t: Term, mapping: Mapping[int, Term]) -> Term:
    if not (t.fv & mapping.keys()):
        return t
    if isinstance(t, Var):
        return mapping[t.index]
    if isinstance(t, Succ):
        return Succ(subst_term(t.arg, mapping))
    if isinstance(t, Add):
        return Add(subst_term(t.left, mapping), subst_term(t.right, mapping))
    if isinstance(t, Mul):
        return Mul(subst_term(t.left, mapping), subst_term(t.right, mapping))
    return t


# -- formulas ---------------------------------------------------------------


class Formula:
    __slots__ = ()

    def __hash__(self):
        return self._hash

    @property
    def closed(self) -> bool:
        return not self.fv


def _atom_cache(obj, parts, terms):
    object.__setattr__(obj, "_hash", hash(parts))
    object.__setattr__(obj, "depth", 1)
    object.__setattr__(obj, "size", 1 + sum(t.size for t in terms))
    fv = frozenset()
    for t in terms:
        fv = fv | t.fv
    object.__setattr__(obj, "fv", fv)


def _compound_cache(obj, parts, children, bound=None):
    object.__setattr__(obj, "_hash", hash(parts))
    object.__setattr__(obj, "depth", 1 + max(c.depth for c in children))
    object.__setattr__(obj, "size", 1 + sum(c.size for c in children))
    fv = frozenset()
    for c in children:
        fv = fv | c.fv
    if bound is not None:
        fv = fv - {bound}
    object.__setattr__(obj, "fv", fv)


_CACHE_FIELDS = dict(init=False, repr=False, compare=False)


@dataclass(frozen=True, eq=True, slots=True)
class Eq(Formula):
    left: Term
    right: Term
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        _atom_cache(self, ("=", self.left._hash, self.right._hash), (self.left, self.right))

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class In(Formula):
    left: Term
    right: Term
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        _atom_cache(self, ("in", self.left._hash, self.right._hash), (self.left, self.right))

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Pred(Formula):
    """A designated relation symbol outside the two base signatures.

    Used for the Ackermann membership relation of the set-to-arithmetic
    translation (``ackmem``) and for provability predicates of reflection
    schemes.
    """

    name: str
    args: tuple
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        _atom_cache(self, ("pred", self.name) + tuple(a._hash for a in self.args), self.args)

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Not(Formula):
    body: Formula
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        _compound_cache(self, ("not", self.body._hash), (self.body,))

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        _compound_cache(self, ("or", self.left._hash, self.right._hash), (self.left, self.right))

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, slots=True)
class Exists(Formula):
    var: int
    body: Formula
    _hash: int = field(**_CACHE_FIELDS)
    depth: int = field(**_CACHE_FIELDS)
    size: int = field(**_CACHE_FIELDS)
    fv: frozenset = field(**_CACHE_FIELDS)

    def __post_init__(self):
        _compound_cache(self, ("ex", self.var, self.body._hash), (self.body,), bound=self.var)

    __hash__ = Formula.__hash__


ATOMS = (Eq, In, Pred)


def is_atomic(phi: Formula) -> bool:
    return isinstance(phi, ATOMS)


def is_literal(phi: Formula) -> bool:
    return is_atomic(phi) or (isinstance(phi, Not) and is_atomic(phi.body))


# -- sugar ------------------------------------------------------------------


def And(a: Formula, b: Formula) -> Formula:
    return Not(Or(Not(a), Not(b)))


def Implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def Iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def Forall(var: int, body: Formula) -> Formula:
    return Not(Exists(var, Not(body)))


def conj(items: Iterable[Formula]) -> Formula:
    items = list(items)
    out = items[-1]
    for f in reversed(items[:-1]):
        out = And(f, out)
    return out


def disj(items: Iterable[Formula]) -> Formula:
    items = list(items)
    out = items[-1]
    for f in reversed(items[:-1]):
        out = Or(f, out)
    return out


def balanced_disj(items) -> Formula:
    """Disjunction arranged as a balanced tree, so depth grows logarithmically."""
    items = list(items)
    if len(items) == 1:
        return items[0]
    mid = (len(items) + 1) // 2
    return Or(balanced_disj(items[:mid]), balanced_disj(items[mid:]))


def disjuncts(phi: Formula) -> list:
    """Flatten nested ``Or`` nodes, left to right."""
    out, stack = [], [phi]
    while stack:
        f = stack.pop()
        if isinstance(f, Or):
            stack.append(f.right)
            stack.append(f.left)
        else:
            out.append(f)
    return out


def neg(phi: Formula) -> Formula:
    """Complement used by the one-sided calculus: strips one negation or adds one."""
    return phi.body if isinstance(phi, Not) else Not(phi)


def exists_bounded(var: int, bound: Term, body: Formula) -> Formula:
    """``exists var (var in bound and body)`` in the shape the evaluators recognise."""
    return Exists(var, Not(Or(Not(In(Var(var), bound)), Not(body))))


def forall_bounded(var: int, bound: Term, body: Formula) -> Formula:
    return Not(Exists(var, Not(Or(Not(In(Var(var), bound)), body))))


# -- structure --------------------------------------------------------------


def depth(phi: Formula) -> int:
    return phi.depth


def size(phi: Formula) -> int:
    return phi.size


def free_vars(phi: Formula) -> frozenset:
    return phi.fv


def is_sentence(phi: Formula) -> bool:
    return not phi.fv


def atom_terms(phi: Formula) -> tuple:
    if isinstance(phi, (Eq, In)):
        return (phi.left, phi.right)
    if isinstance(phi, Pred):
        return phi.args
    return ()


def immediate_subformulas(phi: Formula) -> list:
    if isinstance(phi, Not):
        return [phi.body]
    if isinstance(phi, Or):
        return [phi.left, phi.right]
    if isinstance(phi, Exists):
        return [phi.body]
    return []


def subformulas(phi: Formula) -> Iterator[Formula]:
    stack = [phi]
    while stack:
        f = stack.pop()
        yield f
        stack.extend(reversed(immediate_subformulas(f)))


def terms_of(phi: Formula) -> Iterator[Term]:
    for f in subformulas(phi):
        for t in atom_terms(f):
            yield from subterms(t)


def constants_of(phi: Formula) -> set:
    return {t.code for t in terms_of(phi) if isinstance(t, Const)}


def var_indices(phi: Formula) -> set:
    """Every variable index occurring free, bound or as a binder."""
    out = set()
    for f in subformulas(phi):
        if isinstance(f, Exists):
            out.add(f.var)
        for t in atom_terms(f):
            out |= t.fv
    return out


def signature_of(phi: Formula):
    """'set', 'arith', or None when the formula is neutral (only ``=`` over variables)."""
    has_set = has_arith = False
    for f in subformulas(phi):
        if isinstance(f, In):
            has_set = True
        for t in atom_terms(f):
            for u in subterms(t):
                if isinstance(u, Const):
                    has_set = True
                elif isinstance(u, (Zero, Succ, Add, Mul)):
                    has_arith = True
    if has_set and has_arith:
        raise SignatureError("formula mixes set-theoretic and arithmetic symbols")
    return SET if has_set else ARITH if has_arith else None


def check_signature(phi: Formula, signature: str) -> Formula:
    sig = signature_of(phi)
    if sig is not None and sig != signature:
        raise SignatureError(f"{sig} symbols in a formula declared {signature}")
    return phi


# -- substitution -----------------------------------------------------------


def instantiate(phi: Formula, mapping: Mapping[int, Term]) -> Formula:
    """Simultaneously replace free variables by terms, refusing to capture."""
    mapping = {k: v for k, v in mapping.items() if k in phi.fv}
    if not mapping:
        return phi
    if isinstance(phi, Eq):
        return Eq(subst_term(phi.left, mapping), subst_term(phi.right, mapping))
    if isinstance(phi, In):
        return In(subst_term(phi.left, mapping), subst_term(phi.right, mapping))
    if isinstance(phi, Pred):
        return Pred(phi.name, tuple(subst_term(a, mapping) for a in phi.args))
    if isinstance(phi, Not):
        return Not(instantiate(phi.body, mapping))
    if isinstance(phi, Or):
        return Or(instantiate(phi.left, mapping), instantiate(phi.right, mapping))
    if isinstance(phi, Exists):
        inner = {k: v for k, v in mapping.items() if k != phi.var}
        live = {k: v for k, v in inner.items() if k in phi.body.fv}
        if any(phi.var in t.fv for t in live.values()):
            raise SubstitutionError(f"substitution would capture v{phi.var}")
        return Exists(phi.var, instantiate(phi.body, inner))
    raise TypeError(f"not a formula: {phi!r}")


def substitute(phi: Formula, var: int, term: Term) -> Formula:
    """Replace the free occurrences of ``v<var>`` by the closed term ``term``."""
    if not term.closed:
        raise SubstitutionError("substituted term must be closed")
    return instantiate(phi, {var: term})


def rename_bound(phi: Formula, fresh: Iterator[int], mapping=None) -> Formula:
    """Alpha-rename every binder to indices drawn from ``fresh``."""
    mapping = mapping or {}
    if isinstance(phi, ATOMS):
        return instantiate(phi, mapping) if mapping else phi
    if isinstance(phi, Not):
        return Not(rename_bound(phi.body, fresh, mapping))
    if isinstance(phi, Or):
        return Or(rename_bound(phi.left, fresh, mapping), rename_bound(phi.right, fresh, mapping))
    new = next(fresh)
    return Exists(new, rename_bound(phi.body, fresh, {**mapping, phi.var: Var(new)}))
