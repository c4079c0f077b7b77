"""Finite theories and formula batteries, with their artifact forms."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .. import artifacts
from ..errors import ArtifactError, ParseError, SignatureError
from ..syntax.ast import signature_of
from ..syntax.sexpr import parse, to_sexpr

_LABEL = re.compile(r"[A-Za-z0-9_\-]+$")


@dataclass(frozen=True)
class TheorySpec:
    label: str
    axioms: tuple = ()
    schemes: tuple = ()

    def __post_init__(self):
        if not _LABEL.match(self.label):
            raise ValueError(f"theory label {self.label!r} must be letters, digits, '_' or '-'")
        object.__setattr__(self, "axioms", tuple(self.axioms))
        object.__setattr__(self, "schemes", tuple(self.schemes))
        self.signature  # noqa: B018  (mixed signatures fail here)

    @property
    def signature(self):
        sigs = {s for s in map(_plain_signature, self.axioms) if s is not None}
        if len(sigs) > 1:
            raise SignatureError(f"theory {self.label} mixes signatures {sorted(sigs)}")
        return sigs.pop() if sigs else None

    def extend(self, label, axioms):
        return TheorySpec(label, self.axioms + tuple(a for a in axioms if a not in self.axioms), self.schemes)


def _plain_signature(phi):
    # provability predicates are signature-neutral
    from ..syntax.ast import Pred, subformulas

    if any(isinstance(f, Pred) for f in subformulas(phi)):
        return None
    return signature_of(phi)


def theory_payload(t: TheorySpec) -> dict:
    return {"label": t.label, "axioms": [to_sexpr(a) for a in t.axioms], "schemes": list(t.schemes)}


def theory_from_payload(payload) -> TheorySpec:
    try:
        return TheorySpec(payload["label"], [parse(s) for s in payload["axioms"]], payload.get("schemes", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ArtifactError(f"malformed theory: {exc}") from None
    except ParseError as exc:
        raise ParseError(f"theory axiom: {exc}") from None


def battery_payload(formulas) -> dict:
    return {"formulas": [to_sexpr(f) for f in formulas]}


def battery_from_payload(payload) -> list:
    try:
        return [parse(s) for s in payload["formulas"]]
    except (KeyError, TypeError) as exc:
        raise ArtifactError(f"malformed battery: {exc}") from None


def load_theory(path) -> TheorySpec:
    return theory_from_payload(artifacts.read(path, "theory"))


def load_battery(path) -> list:
    return battery_from_payload(artifacts.read(path, "battery"))


# -- shipped samples -----------------------------------------------------------------

IDENTITY = TheorySpec("ID", [parse("(forall v0 (= v0 v0))")], ("reflection",))
# a small sound fragment of arithmetic: reflexivity, 0 is no successor, and x + 0 = x
SAMPLE_ARITH = TheorySpec(
    "PA-fragment",
    [
        parse("(forall v0 (= v0 v0))"),
        parse("(forall v0 (not (= (S v0) (num 0))))"),
        parse("(forall v0 (= (+ v0 (num 0)) v0))"),
    ],
    ("reflection",),
)
UNSOUND = TheorySpec("BAD", [parse("(= (num 0) (S (num 0)))")], ("reflection",))

SAMPLE_BATTERY = [
    parse("(= v0 v0)"),
    parse("(= (+ v0 (num 0)) v0)"),
    parse("(not (= (S v0) (num 0)))"),
    parse("(= v0 (S v0))"),
]

# replacement battery over V4: identity, constant, and the singleton map that overflows the top rank
REPL_BATTERY = [
    parse("(= v1 v0)"),
    parse("(and (= v0 v0) (= v1 (c 0)))"),
    parse("(and (in v0 v2) (= v1 v0))"),
    parse("(and (= v0 v0) (= v1 v1))"),
    parse("(forall v5 (iff (in v5 v1) (= v5 v0)))"),
]

EIND_BATTERY = [
    parse("(= v0 v0)"),
    parse("(not (in v0 v0))"),
    parse("(or (= v0 (c 0)) (exists v3 (in v3 v0)))"),
    parse("(imp (in v0 v2) (in v0 v2))"),
]
