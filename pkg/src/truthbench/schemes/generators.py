"""Scheme instances, desugared to ¬, ∨, ∃."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ArityError
from ..syntax.ast import (
    And, Eq, Exists, Forall, Iff, Implies, In, Succ, Var, ZERO, instantiate, signature_of, var_indices,
)

X, Y, Z = 0, 1, 2


@dataclass(frozen=True)
class SchemeInstance:
    kind: str
    source: object
    formula: object
    level: int = 0
    theory: str = ""


def _fresh(phi, start):
    top = max(var_indices(phi) | {start - 1})
    return top + 1


def induction_instance(phi):
    """``φ(0) ∧ ∀x (φ(x) → φ(Sx)) → ∀x φ(x)`` for the single free variable x of φ."""
    if len(phi.fv) != 1:
        raise ArityError(f"induction needs exactly one free variable, found {sorted(phi.fv)}")
    if signature_of(phi) == "set":
        raise ArityError("induction instances are arithmetic; use the ∈-induction generator for sets")
    (x,) = phi.fv
    base = instantiate(phi, {x: ZERO})
    step = Forall(x, Implies(phi, instantiate(phi, {x: Succ(Var(x))})))
    return Implies(And(base, step), Forall(x, phi))


def epsilon_induction_instance(phi):
    """``∀x (∀y (y ∈ x → φ(y)) → φ(x)) → ∀x φ(x)``, closed over any parameter v2.

    The set-theoretic analog of internal induction: in every V_r the membership
    relation is well founded, so every instance holds.
    """
    if X not in phi.fv or not phi.fv <= {X, Z}:
        raise ArityError(f"∈-induction takes φ(v0) with optional parameter v2, found {sorted(phi.fv)}")
    y = _fresh(phi, 3)
    below = Forall(y, Implies(In(Var(y), Var(X)), instantiate(phi, {X: Var(y)})))
    inst = Implies(Forall(X, Implies(below, phi)), Forall(X, phi))
    return Forall(Z, inst) if Z in phi.fv else inst


def replacement_instance(phi):
    """The local replacement sentence for φ(x, y, z) with x = v0, y = v1, z = v2:

    ∀z ∀v [∀x ∈ v ∀y ∀y' (φ(x,y,z) ∧ φ(x,y',z) → y = y')
            → ∃w ∀y (y ∈ w ↔ ∃x ∈ v φ(x,y,z))]

    The parameter z is optional; without it the outer quantifier is dropped.
    """
    if not ({X, Y} <= phi.fv <= {X, Y, Z}):
        raise ArityError(f"replacement takes φ(v0, v1) or φ(v0, v1, v2), found {sorted(phi.fv)}")
    v = _fresh(phi, 3)
    w, y2 = v + 1, v + 2
    other = instantiate(phi, {Y: Var(y2)})
    functional = Forall(X, Implies(
        In(Var(X), Var(v)),
        Forall(Y, Forall(y2, Implies(And(phi, other), Eq(Var(Y), Var(y2))))),
    ))
    image = Exists(X, And(In(Var(X), Var(v)), phi))
    collect = Exists(w, Forall(Y, Iff(In(Var(Y), Var(w)), image)))
    inst = Forall(v, Implies(functional, collect))
    return Forall(Z, inst) if Z in phi.fv else inst


GENERATORS = {
    "ind": induction_instance,
    "eind": epsilon_induction_instance,
    "repl": replacement_instance,
}
