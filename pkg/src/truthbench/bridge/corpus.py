"""Seeded corpora and the two semantic-transport checks."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..reports import report_type
from ..semantics import FiniteStructure, eval_arith, eval_sentence
from ..syntax.ast import (
    Add, And, Eq, Exists, Forall, Implies, Mul, Not, Or, Succ, Var, Zero, numeral,
)
from ..syntax.generate import SentenceSpace, random_sentence
from ..syntax.sexpr import to_sexpr
from .translate import ordinal_domain, pa_to_zf, zf_to_pa

MAX_VALUE = 8


def bounded_exists(x: int, w: int, bound, body):
    """``∃x (x <= bound ∧ body)`` with ``x <= bound`` spelled ``∃w (x + w = bound)``."""
    return Exists(x, And(Exists(w, Eq(Add(Var(x), Var(w)), bound)), body))


def bounded_forall(x: int, w: int, bound, body):
    return Not(bounded_exists(x, w, bound, Not(body)))


def _bound_of(phi):
    """``(x, bound, body)`` when ``phi`` is a bounded existential built by :func:`bounded_exists`."""
    if not isinstance(phi, Exists):
        return None
    inner = phi.body
    if not (isinstance(inner, Not) and isinstance(inner.body, Or)):
        return None
    left, right = inner.body.left, inner.body.right
    if not (isinstance(left, Not) and isinstance(left.body, Exists)):
        return None
    eq = left.body.body
    if (
        isinstance(eq, Eq)
        and isinstance(eq.left, Add)
        and eq.left.left == Var(phi.var)
        and eq.left.right == Var(left.body.var)
        and isinstance(right, Not)
    ):
        return phi.var, eq.right, right.body
    return None


def _value(t, env):
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ):
        return _value(t.arg, env) + 1
    a, b = _value(t.left, env), _value(t.right, env)
    return a + b if isinstance(t, Add) else a * b


def _term_values(t, env):
    yield _value(t, env)
    if isinstance(t, Succ):
        yield from _term_values(t.arg, env)
    elif isinstance(t, (Add, Mul)):
        yield from _term_values(t.left, env)
        yield from _term_values(t.right, env)


def region_max_value(phi, env=None):
    """Largest term value met while evaluating ``phi`` with quantifiers confined to their bounds.

    ``None`` when some quantifier is not of the bounded shape.
    """
    env = dict(env or {})
    if isinstance(phi, Eq):
        return max(max(_term_values(phi.left, env)), max(_term_values(phi.right, env)))
    if isinstance(phi, Not):
        return region_max_value(phi.body, env)
    if isinstance(phi, Or):
        a, b = region_max_value(phi.left, env), region_max_value(phi.right, env)
        return None if a is None or b is None else max(a, b)
    shape = _bound_of(phi)
    if shape is None:
        return None
    x, bound, body = shape
    top = max(_term_values(bound, env))
    best = top
    for v in range(top + 1):
        env[x] = v
        m = region_max_value(body, env)
        if m is None:
            return None
        best = max(best, m)
    return best


def _random_term(rng, names):
    pick = lambda: Var(rng.choice(names)) if names and rng.random() < 0.75 else numeral(rng.randint(0, 4))  # noqa: E731
    kind = rng.choice(["var", "var", "succ", "add", "mul", "num"])
    if kind == "var" and names:
        return Var(rng.choice(names))
    if kind == "succ":
        return Succ(pick())
    if kind == "add":
        return Add(pick(), pick())
    if kind == "mul":
        return Mul(pick(), pick())
    return numeral(rng.randint(0, MAX_VALUE))


def _random_atom(rng, names):
    # one side stays a variable or numeral: the set-side graphs are then cheap to evaluate
    simple = Var(rng.choice(names)) if names and rng.random() < 0.7 else numeral(rng.randint(0, MAX_VALUE))
    other = _random_term(rng, names)
    return Eq(other, simple) if rng.random() < 0.5 else Eq(simple, other)


def _random_body(rng, names, depth):
    if depth == 0 or rng.random() < 0.3:
        return _random_atom(rng, names)
    kind = rng.choice(["not", "or", "and", "imp"])
    if kind == "not":
        return Not(_random_body(rng, names, depth - 1))
    a, b = _random_body(rng, names, depth - 1), _random_body(rng, names, depth - 1)
    return {"or": Or, "and": And, "imp": Implies}[kind](a, b)


def random_delta0(rng: random.Random, quantifiers=2):
    names, frames = [], []
    for q in range(quantifiers):
        bound = Var(rng.choice(names)) if names and rng.random() < 0.4 else numeral(rng.randint(1, MAX_VALUE))
        frames.append((2 * q, 2 * q + 1, bound, rng.random() < 0.5))
        names.append(2 * q)
    phi = _random_body(rng, names, 2)
    for x, w, bound, universal in reversed(frames):
        phi = (bounded_forall if universal else bounded_exists)(x, w, bound, phi)
    return phi


FIXED = (
    Eq(numeral(0), numeral(0)),
    Eq(Add(numeral(1), numeral(1)), numeral(2)),
    Not(bounded_exists(0, 1, numeral(4), Eq(Add(Var(0), Var(0)), numeral(1)))),
    bounded_exists(0, 1, numeral(8), Eq(Mul(Var(0), Var(0)), numeral(4))),
    bounded_forall(0, 1, numeral(8), Or(Eq(Var(0), numeral(0)), bounded_exists(2, 3, Var(0), Eq(Succ(Var(2)), Var(0))))),
)


def delta0_corpus(n=50, seed=0, max_value=MAX_VALUE) -> list:
    """``n`` distinct bounded arithmetic sentences whose term values stay within ``max_value``."""
    rng = random.Random(seed)
    out = [phi for phi in FIXED if region_max_value(phi) <= max_value]
    seen = set(out)
    while len(out) < n:
        phi = random_delta0(rng, rng.randint(1, 2))
        m = region_max_value(phi)
        if m is not None and m <= max_value and phi not in seen:
            seen.add(phi)
            out.append(phi)
    return out[:n]


# -- transport checks -------------------------------------------------------------


@report_type
@dataclass(frozen=True)
class TransportMismatch:
    sentence: str
    source: bool
    image: bool


@report_type
@dataclass(frozen=True)
class TransportReport:
    direction: str
    scope: str
    checked: int
    true_count: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def render_text(self):
        head = (
            f"{self.direction} transport over {self.scope}: {self.checked} sentences "
            f"({self.true_count} true), {len(self.mismatches)} mismatches"
        )
        return "\n".join([head] + [f"  {m.sentence}: {m.source} vs {m.image}" for m in self.mismatches])


def pa_transport(corpus=None, max_value=MAX_VALUE) -> TransportReport:
    """Standard-model truth against truth of the translation over the ordinals up to ``max_value``."""
    corpus = delta0_corpus(max_value=max_value) if corpus is None else corpus
    domain = ordinal_domain(max_value)
    bad, true_count = [], 0
    for phi in corpus:
        want = eval_arith(phi, max_value + 1)
        got = eval_sentence(pa_to_zf(phi), domain, memo=True)
        true_count += want
        if want != got:
            bad.append(TransportMismatch(to_sexpr(phi), want, got))
    return TransportReport("arith->set", f"ordinals <= {max_value}", len(corpus), true_count, bad)


def zf_transport(n=16, budget_nodes=6, samples=0, seed=0, max_depth=4) -> TransportReport:
    """Truth over code_cap(n) against the image under zf_to_pa with quantifiers below n.

    Exhaustive over sentences of at most ``budget_nodes`` nodes, plus ``samples``
    seeded random sentences of depth at most ``max_depth``.
    """
    structure = FiniteStructure.code_cap(n)
    consts = structure.elements
    sentences = list(SentenceSpace(consts).sentences(budget_nodes)) if budget_nodes else []
    rng = random.Random(seed)
    sentences += [random_sentence(rng, consts, max_depth) for _ in range(samples)]
    bad, true_count = [], 0
    for phi in sentences:
        want = eval_sentence(phi, structure)
        got = eval_arith(zf_to_pa(phi), n)
        true_count += want
        if want != got:
            bad.append(TransportMismatch(to_sexpr(phi), want, got))
    scope = f"code_cap({n}), <= {budget_nodes} nodes" + (f" + {samples} random (seed {seed})" if samples else "")
    return TransportReport("set->arith", scope, len(sentences), true_count, bad)


# -- translation-table validation ---------------------------------------------------


@report_type
@dataclass(frozen=True)
class TableRow:
    name: str
    checked: int
    mismatches: int


@report_type
@dataclass(frozen=True)
class TableReport:
    max_value: int
    rows: list = field(default_factory=list)
    examples: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.mismatches == 0 for r in self.rows)

    def render_text(self):
        lines = [f"translation table against brute-force arithmetic on ordinals <= {self.max_value}"]
        lines += [f"  {r.name:6} {r.checked:6} checked, {r.mismatches} mismatches" for r in self.rows]
        return "\n".join(lines + [f"  {e}" for e in self.examples])


def validate_table(max_value=12, table=None) -> TableReport:
    """Each defining formula against its arithmetic meaning on the ordinals up to ``max_value``."""
    from ..semantics import compile_formula
    from .table import default_table
    from .translate import ordinal_set, ordinal_value

    table = table or default_table()
    domain = ordinal_domain(max_value)
    ords = [ordinal_set(k) for k in range(max_value + 1)]
    rows, examples = [], []

    def run(name, arity, cases):
        f = compile_formula(table.formula(name, *map(Var, range(arity))), domain, memo=True)
        n = bad = 0
        for args, want in cases:
            n += 1
            if f(dict(enumerate(args))) != want:
                bad += 1
                if len(examples) < 20:
                    examples.append(f"{name}{tuple(map(ordinal_value, args))}: expected {want}")
        rows.append(TableRow(name, n, bad))

    run("empty", 1, [((e,), not e) for e in domain.elements])
    run("ord", 1, [((e,), ordinal_value(e) is not None) for e in domain.elements])
    run("succ", 2, [((ords[x], ords[y]), y == x + 1) for x in range(max_value + 1) for y in range(max_value + 1)])
    rng = range(max_value + 1)
    run("add", 3, [((ords[x], ords[y], ords[z]), x + y == z) for x in rng for y in rng for z in rng])
    run("mul", 3, [((ords[x], ords[y], ords[z]), x * y == z) for x in rng for y in rng for z in rng])
    return TableReport(max_value, rows, examples)
