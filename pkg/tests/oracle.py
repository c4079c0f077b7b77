"""Independent reference implementations used as test oracles.

Nothing here imports the package's set or evaluation code: sets are plain
frozensets, V_n is built by iterated powersets, and truth is the textbook
Tarski recursion.
"""
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def decode(n):
    out, i = [], 0
    while n >> i:
        if (n >> i) & 1:
            out.append(decode(i))
        i += 1
    return frozenset(out)


@lru_cache(maxsize=None)
def encode(s):
    return sum(2 ** encode(m) for m in s)


def powerset(items):
    items = list(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def V(n):
    """The sets of rank < n, by iterated powerset."""
    level = []
    for _ in range(n):
        level = powerset(level)
    return level


def rank(s):
    return max((rank(m) + 1 for m in s), default=0)


def holds(phi, universe, env=None):
    """Tarski truth of ``phi`` over a list of frozensets; constants name codes."""
    env = env or {}
    kind = type(phi).__name__
    if kind in ("Eq", "In"):
        a, b = (_val(t, env) for t in (phi.left, phi.right))
        return a == b if kind == "Eq" else a in b
    if kind == "Not":
        return not holds(phi.body, universe, env)
    if kind == "Or":
        return holds(phi.left, universe, env) or holds(phi.right, universe, env)
    if kind == "Exists":
        # exists v (v in t and ...) only needs the members of t (domains are transitive)
        b = phi.body
        if type(b).__name__ == "Not" and type(b.body).__name__ == "Or":
            guard = b.body.left
            if type(guard).__name__ == "Not" and type(guard.body).__name__ == "In":
                lhs, rhs = guard.body.left, guard.body.right
                if type(lhs).__name__ == "Var" and lhs.index == phi.var and phi.var not in rhs.fv:
                    return any(holds(phi.body, universe, {**env, phi.var: x}) for x in _val(rhs, env))
        return any(holds(phi.body, universe, {**env, phi.var: x}) for x in universe)
    raise TypeError(kind)


def _val(t, env):
    return env[t.index] if type(t).__name__ == "Var" else decode(t.code)


def arith_holds(phi, bound, env=None):
    """Truth in the naturals with every quantifier ranging below ``bound``.

    The one predicate, ``ackmem(x, y)``, is bit x of y.
    """
    env = env or {}
    kind = type(phi).__name__
    if kind == "Pred" and phi.name == "ackmem":
        x, y = (_num(t, env) for t in phi.args)
        return (y >> x) & 1 == 1
    if kind == "Eq":
        return _num(phi.left, env) == _num(phi.right, env)
    if kind == "Not":
        return not arith_holds(phi.body, bound, env)
    if kind == "Or":
        return arith_holds(phi.left, bound, env) or arith_holds(phi.right, bound, env)
    if kind == "Exists":
        return any(arith_holds(phi.body, bound, {**env, phi.var: x}) for x in range(bound))
    raise TypeError(kind)


def von_neumann(n):
    s = frozenset()
    for _ in range(n):
        s = s | {s}
    return s


def _num(t, env):
    kind = type(t).__name__
    if kind == "Var":
        return env[t.index]
    if kind == "Zero":
        return 0
    if kind == "Succ":
        return _num(t.arg, env) + 1
    if kind == "Add":
        return _num(t.left, env) + _num(t.right, env)
    if kind == "Mul":
        return _num(t.left, env) * _num(t.right, env)
    raise TypeError(kind)


def is_set_sentence(phi, ncodes):
    """Closed, built from = ∈ ¬ ∨ ∃ over constants below ``ncodes``."""
    bound = set()

    def ok(f, scope):
        kind = type(f).__name__
        if kind in ("Eq", "In"):
            return all(_term_ok(t, scope) for t in (f.left, f.right))
        if kind == "Not":
            return ok(f.body, scope)
        if kind == "Or":
            return ok(f.left, scope) and ok(f.right, scope)
        if kind == "Exists":
            return ok(f.body, scope | {f.var})
        return False

    def _term_ok(t, scope):
        kind = type(t).__name__
        return (kind == "Var" and t.index in scope) or (kind == "Const" and t.code < ncodes)

    return ok(phi, frozenset(bound))


def sequent_valid(formulas, universe):
    """Every assignment of the free variables satisfies some formula of the sequent."""
    from itertools import product

    formulas = list(formulas)
    free = sorted(set().union(*(f.fv for f in formulas))) if formulas else []
    for values in product(universe, repeat=len(free)):
        env = dict(zip(free, values))
        if not any(holds(f, universe, env) for f in formulas):
            return False
    return True


def tautology(phi, atoms):
    """Propositional validity, treating each listed atom as a letter."""
    from itertools import product

    for values in product((False, True), repeat=len(atoms)):
        val = dict(zip(atoms, values))

        def ev(f):
            kind = type(f).__name__
            if kind == "Not":
                return not ev(f.body)
            if kind == "Or":
                return ev(f.left) or ev(f.right)
            return val[f]

        if not ev(phi):
            return False
    return True
