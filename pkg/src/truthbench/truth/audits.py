"""Finite checks of the truth-class properties of a tower.

Every audit returns a report value; violations are data, never exceptions.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ..errors import DepthError, DomainError, ReachExceeded
from ..reports import report_type, table
from ..semantics import FiniteStructure
from ..syntax.ast import Const, Eq, Exists, In, Not, Or, balanced_disj, disj, substitute
from ..syntax.coding import decode
from ..syntax.generate import SentenceSpace, random_sentence
from ..syntax.sexpr import to_sexpr
from .tower import Level, NotASentence, TruthTower, check_query

MAX_RECORDED = 100


def as_oracle(T, depth_bound=None):
    """A total predicate on formulas from a tower, a level, a set, or a callable.

    A tower is read at level ``depth_bound`` (default: its reach), so the
    class under test is the Depth_F-truth class the tower provides.
    """
    if isinstance(T, TruthTower):
        T = T.level(depth_bound or T.reach)
    if isinstance(T, Level):
        level = T

        def member(phi):
            try:
                return phi in level
            except DepthError:
                return False

        return member
    if isinstance(T, (set, frozenset)):
        return T.__contains__
    if callable(T):
        return T
    raise TypeError(f"cannot read {type(T).__name__} as a truth class")


def _structure_of(T, structure):
    if structure is not None:
        return structure
    if isinstance(T, (TruthTower, Level)):
        return T.structure
    raise ValueError("a structure is required for an external truth class")


# -- agreement -----------------------------------------------------------------


@report_type
@dataclass(frozen=True)
class Disagreement:
    sentence: str
    left: bool
    right: bool


@report_type
@dataclass(frozen=True)
class AgreementReport:
    left_level: int
    right_level: int
    depth: int
    budget_nodes: int
    checked: int
    disagreements: list = field(default_factory=list)
    total_disagreements: int = 0

    @property
    def ok(self):
        return self.total_disagreements == 0

    def render_text(self):
        head = (
            f"agreement of levels {self.left_level} and {self.right_level} on depth <= {self.depth}, "
            f"<= {self.budget_nodes} nodes: {self.checked} sentences, {self.total_disagreements} disagreements"
        )
        return "\n".join([head] + [f"  {d.sentence}: {d.left} vs {d.right}" for d in self.disagreements])


class CorruptedLevel(Level):
    """A level whose answers are flipped on a fixed set of sentences (fault injection)."""

    def __init__(self, base: Level, flips):
        self.base = base
        self.structure = base.structure
        self.k = base.k
        self.flips = frozenset(flips)

    def member(self, phi):
        hit = self.base.member(phi)
        return not hit if phi in self.flips else hit


def check_agreement(a: Level, b: Level, budget_nodes=7, max_recorded=MAX_RECORDED) -> AgreementReport:
    if a.structure.elements != b.structure.elements:
        raise ValueError("agreement is only defined over one structure")
    k = min(a.k, b.k)
    checked, found, total = 0, [], 0
    for phi in SentenceSpace(a.structure.elements, k).sentences(budget_nodes):
        checked += 1
        x, y = a.member(phi), b.member(phi)
        if x != y:
            total += 1
            if len(found) < max_recorded:
                found.append(Disagreement(to_sexpr(phi), x, y))
    return AgreementReport(a.k, b.k, k, budget_nodes, checked, found, total)


# -- CT⁻ clauses -----------------------------------------------------------------

CLAUSES = {
    "1": "T holds only of FSent; F closed under immediate subformulas",
    "2": "atomic: c_a = c_b iff a = b, c_a in c_b iff a in b",
    "3": "negation: not-psi in T iff psi not in T",
    "4": "disjunction: psi1 or psi2 in T iff some disjunct in T",
    "5": "existential: exists v psi in T iff psi(c_a) in T for some a",
}


@report_type
@dataclass(frozen=True)
class Violation:
    clause: str
    sentence: str
    in_t: bool
    expected: bool


@report_type
@dataclass(frozen=True)
class CtReport:
    depth_bound: int
    budget_nodes: int
    domain: str
    sentences: int
    checked: dict = field(default_factory=dict)
    violation_counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def total_violations(self):
        return sum(self.violation_counts.values())

    @property
    def ok(self):
        return self.total_violations == 0

    def render_text(self):
        rows = [
            (c, self.checked.get(c, 0), self.violation_counts.get(c, 0), CLAUSES[c]) for c in sorted(CLAUSES)
        ]
        out = [
            f"CT- check over {self.domain}, F = Depth_{self.depth_bound}, <= {self.budget_nodes} nodes, "
            f"{self.sentences} sentences enumerated",
            table(rows, ["clause", "checked", "violations", "statement"]),
            f"{self.total_violations} violations",
        ]
        out += [f"  ({v.clause}) {v.sentence}: in T = {v.in_t}, expected {v.expected}" for v in self.violations]
        return "\n".join(out)


def verify_ct(T, depth_bound=None, budget_nodes=7, structure=None, max_recorded=MAX_RECORDED) -> CtReport:
    """Check clauses (1)-(5) for T against F = sentences of depth <= ``depth_bound``.

    Clauses (3)-(5) run over every sentence of F within the node budget;
    clause (2) over all atomic sentences of the domain; clause (1) over the
    budget's open formulas and its sentences one level too deep.
    """
    structure = _structure_of(T, structure)
    if depth_bound is None:
        if not isinstance(T, (TruthTower, Level)):
            raise ValueError("depth bound required for an external truth class")
        depth_bound = T.reach if isinstance(T, TruthTower) else T.k
    if isinstance(T, Level) and depth_bound > T.k:
        raise ReachExceeded(f"level {T.k} does not decide depth {depth_bound}")
    member = as_oracle(T, depth_bound)
    domain = structure.elements
    checked = {c: 0 for c in CLAUSES}
    counts = {c: 0 for c in CLAUSES}
    found = []

    def record(clause, phi, got, want):
        checked[clause] += 1
        if got != want:
            counts[clause] += 1
            if len(found) < max_recorded:
                found.append(Violation(clause, to_sexpr(phi), got, want))

    for a in domain:
        for b in domain:
            record("2", Eq(Const(a), Const(b)), member(Eq(Const(a), Const(b))), a == b)
            record("2", In(Const(a), Const(b)), member(In(Const(a), Const(b))), structure.mem(a, b))

    space = SentenceSpace(domain, depth_bound + 1)
    n = 0
    for phi in space.sentences(budget_nodes):
        got = member(phi)
        if phi.depth > depth_bound:
            record("1", phi, got, False)
            continue
        n += 1
        if isinstance(phi, Not):
            record("3", phi, got, not member(phi.body))
        elif isinstance(phi, Or):
            record("4", phi, got, member(phi.left) or member(phi.right))
        elif isinstance(phi, Exists):
            want = any(member(substitute(phi.body, phi.var, Const(a))) for a in domain)
            record("5", phi, got, want)
        if any(sub.depth > depth_bound for sub in _children(phi)):
            record("1", phi, True, False)
    for phi in space.formulas(min(budget_nodes, 5), scope=1):
        if phi.fv:
            record("1", phi, member(phi), False)
    return CtReport(depth_bound, budget_nodes, _domain_label(structure), n, checked, counts, found)


def _children(phi):
    if isinstance(phi, Not):
        return (phi.body,)
    if isinstance(phi, Or):
        return (phi.left, phi.right)
    if isinstance(phi, Exists):
        return (phi.body,)
    return ()


def _domain_label(structure):
    return str(structure.domain) if structure.domain is not None else f"{len(structure)} elements"


# -- Many-Faces audit --------------------------------------------------------------


@report_type
@dataclass(frozen=True)
class FaceRow:
    face: str
    trials: int
    failures: int
    note: str = ""

    @property
    def passed(self):
        return self.failures == 0


@report_type
@dataclass(frozen=True)
class FacesReport:
    seed: int
    reach: int
    domain: str
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.failures == 0 for r in self.rows)

    def render_text(self):
        body = table(
            [(r.face, r.trials, r.failures, "pass" if r.failures == 0 else "FAIL", r.note) for r in self.rows],
            ["face", "trials", "failures", "verdict", "note"],
        )
        out = [f"faces audit over {self.domain}, reach {self.reach} (a resource bound), seed {self.seed}", body]
        out += [f"  {f}" for f in self.failures]
        return "\n".join(out)


def _random_of_depth(rng, tower, max_depth):
    return random_sentence(rng, tower.structure.elements, max(1, max_depth))


def _dc_trial(tower, parts, shape):
    whole = balanced_disj(parts) if shape == "balanced" else disj(parts)
    got = tower.member(whole)
    hits = [tower.member(p) for p in parts]
    return whole, got, any(hits)


def faces_audit(tower: TruthTower, seed=0, dc_trials=400, max_width=32, mp_samples=500, piecewise_m=1 << 12):
    """DC, DC_out, sentential closure and piecewise coding on seeded samples."""
    rng = random.Random(seed)
    consts = tower.structure.elements
    rows, failures = [], []
    dc_fail = out_fail = dc_n = out_n = 0

    def run(parts, shape):
        nonlocal dc_fail, out_fail, dc_n, out_n
        whole, got, some = _dc_trial(tower, parts, shape)
        dc_n += 1
        if got != some:
            dc_fail += 1
            failures.append(f"DC: {to_sexpr(whole)}")
        if got:
            out_n += 1
            if not some:
                out_fail += 1

    # fixtures: one true atomic among false ones, and all false
    false_atoms = [In(Const(a), Const(0)) for a in consts]
    width = min(max_width, 1 << (tower.reach - 1))
    parts = [false_atoms[i % len(false_atoms)] for i in range(width)]
    run(parts[:-1] + [In(Const(0), Const(1))], "balanced")
    run(parts, "balanced")
    for _ in range(dc_trials):
        w = rng.randint(1, max_width)
        shape = "balanced"
        spare = tower.reach - math.ceil(math.log2(w)) if w > 1 else tower.reach
        if spare < 1:
            w, spare = 1 << (tower.reach - 1), 1
        if w <= tower.reach - 1 and rng.random() < 0.5:
            shape, spare = "linear", tower.reach - (w - 1)
        parts = [_random_of_depth(rng, tower, rng.randint(1, spare)) for _ in range(w)]
        run(parts, shape)
    rows.append(FaceRow("DC", dc_n, dc_fail, f"width <= {max_width}, against the exists-true-disjunct oracle"))
    rows.append(FaceRow("DC_out", out_n, out_fail, "true disjunction has a true disjunct"))

    mp_fail = fired = 0
    for _ in range(mp_samples):
        psi = _random_of_depth(rng, tower, rng.randint(1, tower.reach - 2))
        if not tower.member(psi):
            psi = Not(psi) if psi.depth + 1 <= tower.reach - 2 else psi
        chi = _random_of_depth(rng, tower, rng.randint(1, tower.reach - 1))
        imp = Or(Not(psi), chi)
        if imp.depth > tower.reach:
            continue
        if tower.member(psi) and tower.member(imp):
            fired += 1
            if not tower.member(chi):
                mp_fail += 1
                failures.append(f"closure: {to_sexpr(psi)} ; {to_sexpr(imp)}")
    rows.append(FaceRow("sentential closure", mp_samples, mp_fail, f"{fired} triples with both premises in T"))

    try:
        code = piecewise_code(tower, piecewise_m)
        bad = sum(1 for x, hit in _prefix_members(tower, piecewise_m) if ((code >> x) & 1 == 1) != hit)
        rows.append(FaceRow("piecewise coding", piecewise_m, bad, f"codes below {piecewise_m}"))
    except ReachExceeded as exc:
        rows.append(FaceRow("piecewise coding", 0, 0, f"reach exceeded: {exc}"))
    return FacesReport(seed, tower.reach, _domain_label(tower.structure), rows, failures[:MAX_RECORDED])


# -- piecewise coding and definable sets -------------------------------------------


def _prefix_members(tower: TruthTower, m):
    """``(x, x codes a sentence in T)`` for every x < m."""
    for x in range(m):
        phi = decode(x)
        if phi is None:
            yield x, False
            continue
        try:
            check_query(phi, tower.structure)
        except (NotASentence, DomainError):
            yield x, False
            continue
        yield x, tower.t_most_membership(phi)[0]


def piecewise_code(tower: TruthTower, m: int) -> int:
    """The code c with bit x set iff x codes a member of T, for x < m."""
    c = 0
    for x, hit in _prefix_members(tower, m):
        if hit:
            c |= 1 << x
    return c


def definable_set(phi, tower: TruthTower, var=None) -> list:
    """``{a in domain : phi(c_a) in T}``, ascending."""
    free = sorted(phi.fv)
    if len(free) > 1:
        raise ValueError(f"expected at most one free variable, got {free}")
    if var is None:
        var = free[0] if free else 0
    elif free and free != [var]:
        raise ValueError(f"free variable is v{free[0]}, not v{var}")
    if phi.depth > tower.reach:
        raise ReachExceeded(f"depth {phi.depth} exceeds the tower reach {tower.reach}")
    return [a for a in tower.structure.elements if tower.member(substitute(phi, var, Const(a)))]
