"""Uniform reflection instances, audited with bounded search standing in for Prov_U."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ArityError
from ..proofs import bounded_search, check_proof
from ..reports import report_type
from ..semantics import FiniteStructure, eval_arith, eval_sentence
from ..syntax.ast import Const, Implies, Forall, Pred, Var, instantiate, numeral, signature_of
from ..syntax.coding import godel_code
from ..syntax.sexpr import to_sexpr
from .generators import SchemeInstance
from .theory import TheorySpec

DEFAULT_VALUES = range(6)
DEFAULT_SIZE = 12
ARITH_BOUND = 16


def prov_symbol(theory: TheorySpec, phi) -> str:
    """Name of the designated predicate Prov_U(⌜φ(ẋ)⌝), read as a predicate of x."""
    return f"prov_{theory.label}_{godel_code(phi)}"


def _variable(phi):
    if len(phi.fv) != 1:
        raise ArityError(f"reflection needs exactly one free variable, found {sorted(phi.fv)}")
    return next(iter(phi.fv))


def reflection_instance(theory: TheorySpec, phi, level=0) -> SchemeInstance:
    """``∀x (Prov_U(⌜φ(ẋ)⌝) → φ(x))``."""
    x = _variable(phi)
    prov = Pred(prov_symbol(theory, phi), (Var(x),))
    return SchemeInstance("reflection", phi, Forall(x, Implies(prov, phi)), level, theory.label)


def _signature(theory, phi):
    return signature_of(phi) or theory.signature or "arith"


def name_of(n, signature):
    return Const(n) if signature == "set" else numeral(n)


@report_type
@dataclass(frozen=True)
class ReflectionRow:
    formula: str
    instance: str
    provable: list
    failing: list
    status: str


@report_type
@dataclass(frozen=True)
class ReflectionReport:
    theory: str
    size: int
    values: list
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.status != "fail" for r in self.rows)

    @property
    def failures(self):
        return [r for r in self.rows if r.status == "fail"]

    def render_text(self):
        lines = [f"reflection over {self.theory}, proofs of size <= {self.size}, x in {self.values}"]
        for r in self.rows:
            extra = f" failing at {r.failing}" if r.failing else ""
            lines.append(f"  {r.status:7} {r.formula}  provable at {r.provable}{extra}")
        return "\n".join(lines)


def audit_reflection(theory, phi, size=DEFAULT_SIZE, values=DEFAULT_VALUES, structure=None):
    """``(instance, row)``: every provable φ(n) must be true."""
    inst = reflection_instance(theory, phi)
    x = _variable(phi)
    sig = _signature(theory, phi)
    provable, failing = [], []
    for n in values:
        sentence = instantiate(phi, {x: name_of(n, sig)})
        proof = bounded_search(theory.axioms, sentence, size)
        if proof is None:
            continue
        if not check_proof(proof, theory.axioms, sentence):
            raise AssertionError("bounded_search returned a proof that does not check")
        provable.append(n)
        if sig == "set":
            true = eval_sentence(sentence, structure or FiniteStructure.rank_cap(4))
        else:
            true = eval_arith(sentence, ARITH_BOUND)
        if not true:
            failing.append(n)
    status = "fail" if failing else "pass" if provable else "vacuous"
    return inst, ReflectionRow(to_sexpr(phi), to_sexpr(inst.formula), provable, failing, status)


def reflection_instances(theory, battery, size=DEFAULT_SIZE, values=DEFAULT_VALUES, structure=None):
    """``(instances, report)`` for one application of REF to ``theory``."""
    instances, rows = [], []
    for phi in battery:
        inst, row = audit_reflection(theory, phi, size, values, structure)
        instances.append(inst)
        rows.append(row)
    return instances, ReflectionReport(theory.label, size, list(values), rows)


def ref_tower(theory: TheorySpec, battery, levels=1):
    """``[U, REF(U), REF(REF(U)), …]``; each level adds the reflection instances of the one below."""
    out = [theory]
    for k in range(1, levels + 1):
        below = out[-1]
        new = [reflection_instance(below, phi, k).formula for phi in battery]
        out.append(below.extend(f"REF{k}-{theory.label}", new))
    return out
