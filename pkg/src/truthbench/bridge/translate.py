"""Value- and formula-level translations between arithmetic and finite set theory."""
from __future__ import annotations

import itertools

from ..errors import ResourceError, SignatureError
from ..hf import EMPTY, HFSet
from ..semantics import FiniteStructure
from ..syntax.ast import (
    And, Add, Const, Eq, Exists, In, Mul, Not, Or, Pred, Succ, Var, Zero, numeral, numeral_value,
    var_indices,
)
from .table import default_table

# ordinals up to this value are named by constants; past it the code is astronomically large
CONST_ORDINALS = 5
ORDINAL_BIT_BUDGET = 1 << 16


def nat_to_ordinal(n: int, max_bits: int = ORDINAL_BIT_BUDGET) -> int:
    """Ackermann code of the von Neumann ordinal ``n``."""
    code = 0
    for _ in range(n):
        if code >= max_bits:
            raise ResourceError(f"the code of ordinal {n} has more than {max_bits} bits")
        code |= 1 << code
    return code


def ordinal_set(n: int) -> HFSet:
    out = EMPTY
    for _ in range(n):
        out = HFSet(out | {out})
    return out


def kpair(a: HFSet, b: HFSet) -> HFSet:
    return HFSet({HFSet({a}), HFSet({a, b})})


def recursion_function(start, step, length) -> HFSet:
    """``{<i, f(i)> : i <= length}`` for f(0) = start, f(i+1) = step(f(i))."""
    pairs, value = [], start
    for i in range(length + 1):
        pairs.append(kpair(ordinal_set(i), ordinal_set(value)))
        value = step(value)
    return HFSet(pairs)


def ordinal_domain(n: int) -> FiniteStructure:
    """The ordinals up to ``n`` with every addition and multiplication recursion function
    whose values stay at or below ``n``, closed under membership."""
    sets = [ordinal_set(k) for k in range(n + 1)]
    for x in range(n + 1):
        for y in range(n + 1 - x):
            sets.append(recursion_function(x, lambda v: v + 1, y))
        for y in range(n + 1):
            if x * y <= n:
                sets.append(recursion_function(0, lambda v, x=x: v + x, y))
    return FiniteStructure.from_sets(sets)


def ordinal_value(s: HFSet):
    """``n`` if ``s`` is the ordinal ``n``, else None."""
    n = len(s)
    return n if s == ordinal_set(n) else None


# -- formula level -----------------------------------------------------------------


class _Flattener:
    def __init__(self, table, phi):
        self.table = table
        self.fresh = itertools.count(max(var_indices(phi), default=0) + 1)

    def var(self):
        return next(self.fresh)

    def define(self, name, *args):
        return self.table.formula(name, *args, fresh=self.fresh)

    def simple(self, t):
        """The set term naming ``t`` when no flattening is needed, else None."""
        if isinstance(t, Var):
            return t
        k = numeral_value(t)
        if k is not None and k <= CONST_ORDINALS:
            return Const(nat_to_ordinal(k))
        return None

    def graph(self, t, w):
        """A formula saying that the set term ``w`` is the value of ``t``."""
        s = self.simple(t)
        if s is not None:
            return Eq(w, s)
        if isinstance(t, Zero):
            return Eq(w, Const(0))
        if isinstance(t, Succ):
            # w pins down its predecessor, so test succ before the argument's graph
            return self._with_args([t.arg], lambda a: self.define("succ", a, w), relation_first=True)
        if isinstance(t, (Add, Mul)):
            name = "add" if isinstance(t, Add) else "mul"
            return self._with_args([t.left, t.right], lambda a, b: self.define(name, a, b, w))
        if isinstance(t, Const):
            raise SignatureError("set constant inside an arithmetic formula")
        raise TypeError(f"not an arithmetic term: {t!r}")

    def _with_args(self, args, build, relation_first=False):
        names, wraps = [], []
        for a in args:
            s = self.simple(a)
            if s is None:
                u = self.var()
                names.append(Var(u))
                wraps.append((u, a))
            else:
                names.append(s)
        body = build(*names)
        for u, a in reversed(wraps):
            g = self.graph(a, Var(u))
            body = Exists(u, And(body, g) if relation_first else And(g, body))
        return body

    def formula(self, phi):
        if isinstance(phi, Eq):
            s, t = self.simple(phi.left), self.simple(phi.right)
            if s is not None:
                return self.graph(phi.right, s)
            if t is not None:
                return self.graph(phi.left, t)
            # the cheaper graph goes first: it pins u down before the costly one runs
            a, b = sorted((phi.left, phi.right), key=_cost)
            u = self.var()
            return Exists(u, And(self.graph(a, Var(u)), self.graph(b, Var(u))))
        if isinstance(phi, In):
            raise SignatureError("∈ inside an arithmetic formula")
        if isinstance(phi, Pred):
            raise SignatureError(f"predicate {phi.name!r} has no set-theoretic translation")
        if isinstance(phi, Not):
            return Not(self.formula(phi.body))
        if isinstance(phi, Or):
            return Or(self.formula(phi.left), self.formula(phi.right))
        return Exists(phi.var, And(self.define("ord", Var(phi.var)), self.formula(phi.body)))


def _cost(t):
    if isinstance(t, Succ):
        return 1 + _cost(t.arg)
    if isinstance(t, (Add, Mul)):
        return 100 + _cost(t.left) + _cost(t.right)
    return 0


def pa_to_zf(phi, table=None):
    """Relativize quantifiers to the finite ordinals and replace 0, S, +, × by their graphs."""
    return _Flattener(table or default_table(), phi).formula(phi)


def zf_to_pa(phi):
    """Keep = and the quantifiers; read ∈ as the Ackermann bit test and c_a as the numeral a.

    Quantifiers of the image range over all naturals; evaluate with
    ``eval_arith(image, N)`` to bound them below N.
    """
    if isinstance(phi, Eq):
        return Eq(_term_to_pa(phi.left), _term_to_pa(phi.right))
    if isinstance(phi, In):
        return Pred("ackmem", (_term_to_pa(phi.left), _term_to_pa(phi.right)))
    if isinstance(phi, Pred):
        raise SignatureError(f"predicate {phi.name!r} in a set-signature formula")
    if isinstance(phi, Not):
        return Not(zf_to_pa(phi.body))
    if isinstance(phi, Or):
        return Or(zf_to_pa(phi.left), zf_to_pa(phi.right))
    return Exists(phi.var, zf_to_pa(phi.body))


def _term_to_pa(t):
    if isinstance(t, Var):
        return t
    if isinstance(t, Const):
        return numeral(t.code)
    raise SignatureError(f"arithmetic term {t!r} in a set-signature formula")
