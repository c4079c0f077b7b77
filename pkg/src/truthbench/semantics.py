"""Exact first-order evaluation.

Three kinds of model share one evaluator:

* finite transitive fragments of (V_omega, ∈) whose elements are Ackermann
  codes (``rank:R`` / ``code:N`` domains);
* finite transitive families of :class:`~truthbench.hf.HFSet` objects, for
  sets whose codes are too large to write down (von Neumann ordinals past 5);
* the standard model of arithmetic with quantifiers cut off at a bound.

Formulas are compiled to closures once and then run against an environment.
Quantifiers of the shape ``exists v (v in t and ...)`` iterate over the
members of ``t`` instead of the whole domain; in a transitive domain that is
the same set of witnesses, in the same ascending-code order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, FragmentError, SignatureError, TruthbenchError
from .hf import (
    DEFAULT_DOMAIN_BUDGET, DomainSpec, HFSet, ack_decode, ack_encode, ack_key, ack_mem,
    enumerate_domain, members, transitive_closure,
)
from .syntax.ast import (
    Add, Const, Eq, Exists, In, Mul, Not, Or, Pred, Succ, Var, Zero,
)


class EvaluationError(TruthbenchError):
    pass


@dataclass(frozen=True)
class EvalBudget:
    """Recursion ceiling for compiled formulas; witnesses are always tried in ascending code order."""

    max_depth: int = 400


DEFAULT_BUDGET = EvalBudget()


class FiniteStructure:
    """A finite ∈-transitive structure with a constant ``c_a`` for each element ``a``."""

    def __init__(self, elements, *, kind, domain=None):
        self.elements = tuple(elements)
        self.kind = kind
        self.domain = domain
        self._members = {}
        if kind == "hf":
            self._set = frozenset(self.elements)
            self._code_cache = {}

    @classmethod
    def from_spec(cls, spec: DomainSpec | str, budget=DEFAULT_DOMAIN_BUDGET):
        if isinstance(spec, str):
            spec = DomainSpec.parse(spec)
        return cls(enumerate_domain(spec, budget), kind="code", domain=spec)

    @classmethod
    def rank_cap(cls, r, budget=DEFAULT_DOMAIN_BUDGET):
        return cls.from_spec(DomainSpec.rank_cap(r), budget)

    @classmethod
    def code_cap(cls, n, budget=DEFAULT_DOMAIN_BUDGET):
        return cls.from_spec(DomainSpec.code_cap(n), budget)

    @classmethod
    def from_sets(cls, sets):
        """The transitive closure of ``sets`` (plus the sets themselves), as HF objects."""
        universe = set()
        for s in sets:
            universe.add(s)
            universe |= transitive_closure(s)
        return cls(sorted(universe, key=ack_key), kind="hf")

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        label = self.domain if self.domain is not None else f"{len(self.elements)} HF sets"
        return f"FiniteStructure({label})"

    def mem(self, a, b) -> bool:
        return ack_mem(a, b) if self.kind == "code" else a in b

    def members(self, e):
        out = self._members.get(e)
        if out is None:
            out = tuple(members(e)) if self.kind == "code" else tuple(sorted(e, key=ack_key))
            self._members[e] = out
        return out

    def has(self, e) -> bool:
        if self.kind == "code":
            return self.domain.contains(e) if self.domain is not None else e in self.elements
        return e in self._set

    def const(self, code: int):
        if self.kind == "code":
            if not self.has(code):
                raise DomainError(f"constant c{code} is outside the domain {self.domain}")
            return code
        if code.bit_length() > 1 << 16:
            raise DomainError(f"constant code with {code.bit_length()} bits is too large")
        s = ack_decode(code)
        if s not in self._set:
            raise DomainError(f"constant c{code} is outside the structure")
        return s

    def code_of(self, e) -> int:
        return e if self.kind == "code" else ack_encode(e)


class _Universe:
    """(V_omega, ∈) itself; only bounded quantification is possible."""

    kind = "hf"
    elements = None

    def members(self, e):
        return tuple(sorted(e, key=ack_key))

    def mem(self, a, b):
        return a in b

    def const(self, code):
        return ack_decode(code)


class ArithModel:
    """The standard model with quantifiers over ``range(bound)``."""

    kind = "arith"

    def __init__(self, bound, preds=None):
        self.elements = range(bound)
        self.preds = {"ackmem": ack_mem, **(preds or {})}


# -- compilation --------------------------------------------------------------


def _bounded_shape(phi):
    """If ``phi`` is ``exists u (u in t and X)`` return ``(t, X_negated_body)``."""
    body = phi.body
    if isinstance(body, Not) and isinstance(body.body, Or):
        left = body.body.left
        if (
            isinstance(left, Not)
            and isinstance(left.body, In)
            and isinstance(left.body.left, Var)
            and left.body.left.index == phi.var
            and phi.var not in left.body.right.fv
        ):
            return left.body.right, body.body.right
    return None


def _compile_term(t, model):
    if isinstance(t, Var):
        i = t.index
        return lambda env: env[i]
    if model.kind == "arith":
        if isinstance(t, Const):
            raise SignatureError("set constant in an arithmetic evaluation")
        if isinstance(t, Zero):
            return lambda env: 0
        if isinstance(t, Succ):
            if t.closed:
                v = eval_term(t)
                return lambda env: v
            f = _compile_term(t.arg, model)
            return lambda env: f(env) + 1
        f, g = _compile_term(t.left, model), _compile_term(t.right, model)
        if isinstance(t, Add):
            return lambda env: f(env) + g(env)
        return lambda env: f(env) * g(env)
    if isinstance(t, Const):
        v = model.const(t.code)
        return lambda env: v
    raise SignatureError(f"arithmetic term {t!r} in a set-theoretic evaluation")


def compile_formula(phi, model, depth=0, budget=DEFAULT_BUDGET, memo=False):
    """Closure ``env -> bool`` for ``phi``.

    With ``memo`` every quantifier caches its value per assignment of its
    free variables; this pays off for long definitional formulas whose
    subformulas recur with the same arguments.
    """
    f = _compile(phi, model, depth, budget, memo)
    if memo and isinstance(phi, Exists):
        return _memoize(f, phi)
    return f


def _memoize(f, phi):
    keys = tuple(sorted(phi.fv))
    cache = {}

    def cached(env):
        key = tuple(env[k] for k in keys)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = f(env)
        return hit

    return cached


def _compile(phi, model, depth, budget, memo):
    if depth > budget.max_depth:
        raise EvaluationError("formula nesting exceeds the evaluation budget")
    if isinstance(phi, Eq):
        f, g = _compile_term(phi.left, model), _compile_term(phi.right, model)
        return lambda env: f(env) == g(env)
    if isinstance(phi, In):
        if model.kind == "arith":
            raise SignatureError("∈ in an arithmetic evaluation")
        f, g = _compile_term(phi.left, model), _compile_term(phi.right, model)
        if model.kind == "code":
            return lambda env: (g(env) >> f(env)) & 1 == 1
        return lambda env: f(env) in g(env)
    if isinstance(phi, Pred):
        preds = getattr(model, "preds", {})
        if phi.name not in preds:
            raise SignatureError(f"no interpretation for predicate {phi.name!r}")
        rel = preds[phi.name]
        args = [_compile_term(a, model) for a in phi.args]
        return lambda env: bool(rel(*(a(env) for a in args)))
    if isinstance(phi, Not):
        f = compile_formula(phi.body, model, depth + 1, budget, memo)
        return lambda env: not f(env)
    if isinstance(phi, Or):
        f = compile_formula(phi.left, model, depth + 1, budget, memo)
        g = compile_formula(phi.right, model, depth + 1, budget, memo)
        return lambda env: f(env) or g(env)
    if isinstance(phi, Exists):
        var = phi.var
        shape = _bounded_shape(phi) if model.kind != "arith" else None
        if shape is not None:
            bound_term, x = shape
            bound = _compile_term(bound_term, model)
            inner = compile_formula(x, model, depth + 3, budget, memo)
            members_of = model.members

            def bounded(env):
                saved = env.get(var, _MISSING)
                try:
                    for e in members_of(bound(env)):
                        env[var] = e
                        if not inner(env):
                            return True
                    return False
                finally:
                    _restore(env, var, saved)

            return bounded
        if model.elements is None:
            raise FragmentError(f"unbounded quantifier over v{var}")
        body = compile_formula(phi.body, model, depth + 1, budget, memo)
        elements = model.elements

        def unbounded(env):
            saved = env.get(var, _MISSING)
            try:
                for e in elements:
                    env[var] = e
                    if body(env):
                        return True
                return False
            finally:
                _restore(env, var, saved)

        return unbounded
    raise TypeError(f"not a formula: {phi!r}")


_MISSING = object()


def _restore(env, var, saved):
    if saved is _MISSING:
        env.pop(var, None)
    else:
        env[var] = saved


# -- public operations --------------------------------------------------------


def eval_term(t) -> int:
    """Value of a closed arithmetic term in the standard model."""
    if not t.closed:
        raise EvaluationError("cannot evaluate an open term")
    if isinstance(t, Const):
        raise SignatureError("set constant is not an arithmetic term")
    succs = 0
    while isinstance(t, Succ):
        t, succs = t.arg, succs + 1
    if isinstance(t, Zero):
        return succs
    if isinstance(t, Add):
        return eval_term(t.left) + eval_term(t.right) + succs
    if isinstance(t, Mul):
        return eval_term(t.left) * eval_term(t.right) + succs
    raise SignatureError(f"not an arithmetic term: {t!r}")


def _closed(phi):
    if phi.fv:
        raise EvaluationError(f"not a sentence: free variables {sorted(phi.fv)}")


def eval_sentence(phi, structure: FiniteStructure, env=None, memo=False) -> bool:
    """Tarskian truth of a set-signature sentence in a finite transitive structure.

    ``env`` may bind free variables to structure elements.
    """
    env = dict(env or {})
    if not phi.fv <= env.keys():
        _closed(phi)
    return compile_formula(phi, structure, memo=memo)(env)


def eval_delta0(phi) -> bool:
    """Truth of a bounded sentence in all of (V_omega, ∈)."""
    _closed(phi)
    return compile_formula(phi, _Universe())({})


def eval_arith(phi, bound: int, preds=None, env=None) -> bool:
    """Arithmetic truth with every quantifier ranging over ``0 .. bound-1``."""
    env = dict(env or {})
    if not phi.fv <= env.keys():
        _closed(phi)
    return compile_formula(phi, ArithModel(bound, preds))(env)


def find_witness(phi, structure: FiniteStructure, env=None):
    """For ``exists v psi`` true in ``structure``, the first witness in ascending code order."""
    if not isinstance(phi, Exists):
        raise TypeError("witness search needs an existential formula")
    env = dict(env or {})
    body = compile_formula(phi.body, structure)
    for e in structure.elements:
        env[phi.var] = e
        if body(env):
            return e
    return None


def definable_in(phi, var, structure: FiniteStructure) -> list:
    """Elements ``a`` with ``phi(a)`` true, ascending."""
    f = compile_formula(phi, structure)
    out = []
    for e in structure.elements:
        if f({var: e}):
            out.append(e)
    return out
