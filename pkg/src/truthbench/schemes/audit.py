"""Internal audits against a truth tower, and the bounded consistency probe."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from ..errors import ReachExceeded
from ..hf import rank_of_code
from ..proofs import bounded_search
from ..reports import report_type
from ..semantics import FiniteStructure, compile_formula, eval_sentence
from ..syntax.ast import Const, Eq, Exists, In, Not, Var, is_atomic
from ..syntax.sexpr import to_sexpr
from .generators import X, Y, Z, epsilon_induction_instance, replacement_instance
from .theory import REPL_BATTERY

KINDS = {"repl": replacement_instance, "eind": epsilon_induction_instance}


@report_type
@dataclass(frozen=True)
class InstanceVerdict:
    formula: str
    depth: int
    status: str
    detail: str = ""


@report_type
@dataclass(frozen=True)
class InternalAudit:
    kind: str
    domain: str
    reach: int
    rows: list = field(default_factory=list)

    def count(self, status):
        return sum(1 for r in self.rows if r.status == status)

    @property
    def ok(self):
        return self.count("fails") == 0

    def render_text(self):
        lines = [f"{self.kind} instances against T_Most over {self.domain} (reach {self.reach})"]
        for r in self.rows:
            lines.append(f"  {r.status:18} depth {r.depth:3}  {r.formula}" + (f"  [{r.detail}]" if r.detail else ""))
        counts = ", ".join(f"{s} {self.count(s)}" for s in ("holds", "fails at boundary", "reach-exceeded", "fails"))
        return "\n".join(lines + [f"  {counts}"])


def _boundary(phi, structure):
    """``(v, z, rank)`` for the first v whose image set lies outside the domain, else None."""
    if structure.kind != "code":
        return None
    elems = structure.elements
    has_z = Z in phi.fv
    img = compile_formula(phi, structure, memo=True)
    for z in (elems if has_z else [None]):
        for v in elems:
            env = {2: z} if has_z else {}
            image = 0
            for y in elems:
                if any(structure.mem(x, v) and img({**env, X: x, Y: y}) for x in elems):
                    image |= 1 << y
            if not structure.has(image):
                return v, z, rank_of_code(image)
    return None


def audit_internal(tower, kind, battery) -> InternalAudit:
    """Generate each instance and classify it by T_Most membership.

    ``fails at boundary`` means the instance is false because a required image
    set has rank past the top of the domain; ``fails`` would be a genuine
    counterexample.
    """
    generate = KINDS[kind]
    structure = tower.structure
    rows = []
    for phi in battery:
        inst = generate(phi)
        try:
            member, depth = tower.t_most_membership(inst)
        except ReachExceeded as exc:
            rows.append(InstanceVerdict(to_sexpr(phi), inst.depth, "reach-exceeded", str(exc)))
            continue
        if member:
            rows.append(InstanceVerdict(to_sexpr(phi), depth, "holds"))
            continue
        edge = _boundary(phi, structure) if kind == "repl" else None
        if edge is None:
            rows.append(InstanceVerdict(to_sexpr(phi), depth, "fails"))
        else:
            v, z, r = edge
            where = f"v = c{v}" + (f", z = c{z}" if z is not None else "")
            rows.append(InstanceVerdict(to_sexpr(phi), depth, "fails at boundary", f"{where}: image set has rank {r}"))
    domain = str(structure.domain) if structure.domain is not None else f"{len(structure)} elements"
    return InternalAudit(kind, domain, tower.reach, rows)


# -- consistency probe ----------------------------------------------------------------


def atomic_facts(structure, constants=range(4)) -> list:
    """Every true literal ``c_a ∈ c_b`` / ``¬ c_a ∈ c_b`` / ``c_a = c_b`` / ``¬ c_a = c_b`` over the constants."""
    out = []
    for a, b in itertools.product(constants, repeat=2):
        for atom in (In(Const(a), Const(b)), Eq(Const(a), Const(b))):
            out.append(atom if eval_sentence(atom, structure) else Not(atom))
    return out


def true_axiom_battery(structure=None, constants=range(4), repl=None) -> list:
    """Atomic facts plus the replacement instances that hold in the structure."""
    structure = structure or FiniteStructure.rank_cap(4)
    axioms = atomic_facts(structure, constants)
    for phi in (REPL_BATTERY if repl is None else repl):
        inst = replacement_instance(phi)
        if eval_sentence(inst, structure, memo=True):
            axioms.append(inst)
    return axioms


FALSUM = Exists(0, Not(Eq(Var(0), Var(0))))


@report_type
@dataclass(frozen=True)
class ProbeReport:
    axioms: int
    literals: int
    size: int
    found: bool
    seconds: float

    def render_text(self):
        verdict = "PROOF FOUND" if self.found else "no proof"
        return (
            f"consistency probe: {verdict} of ∃x (x ≠ x) up to size {self.size} from {self.axioms} true axioms "
            f"({self.literals} atomic facts) in {self.seconds:.2f}s"
        )


def consistency_probe(axioms=None, size=20) -> ProbeReport:
    axioms = true_axiom_battery() if axioms is None else list(axioms)
    start = time.perf_counter()
    proof = bounded_search(axioms, FALSUM, size)
    literals = sum(1 for a in axioms if is_atomic(a) or (isinstance(a, Not) and is_atomic(a.body)))
    return ProbeReport(len(axioms), literals, size, proof is not None, time.perf_counter() - start)


__all__ = [
    "InstanceVerdict", "InternalAudit", "ProbeReport", "FALSUM", "atomic_facts", "audit_internal",
    "consistency_probe", "true_axiom_battery",
]
