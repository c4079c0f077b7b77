"""Depth-stratified truth classes over a finite structure.

Level 1 holds exactly the true atomic sentences ``c_a = c_b`` / ``c_a ∈ c_b``.
Level k+1 answers sentences of depth at most k from level k, and a sentence
of depth exactly k+1 by one compositional step: a negation is in iff its body
is out, a disjunction iff a disjunct is in, an existential iff some instance
``psi(c_a)`` is in, witnesses tried in ascending code order.

Levels are membership oracles with per-level memo tables rather than
enumerated sets; the set of sentences of bounded depth is infinite even over
a finite domain.
"""
from __future__ import annotations

import threading

from ..errors import DepthError, DomainError, ReachExceeded, SignatureError, TruthbenchError
from ..hf import ack_mem
from ..semantics import FiniteStructure
from ..syntax.ast import (
    Const, Eq, Exists, In, Not, Or, Pred, constants_of, signature_of, subformulas, substitute,
)

DEFAULT_REACH = 8


class NotASentence(TruthbenchError):
    pass


def check_query(phi, structure: FiniteStructure):
    """Raise unless ``phi`` is a set-signature sentence whose constants denote."""
    if phi.fv:
        raise NotASentence(f"free variables {sorted(phi.fv)}")
    try:
        sig = signature_of(phi)
    except SignatureError:
        sig = "mixed"
    if sig not in ("set", None) or any(isinstance(f, Pred) for f in subformulas(phi)):
        raise NotASentence("not a sentence of the set-theoretic language with constants")
    for a in constants_of(phi):
        if not structure.has(a):
            raise DomainError(f"constant c{a} is outside the domain")


class Level:
    """Common surface of level oracles: ``k``, ``structure``, ``member``."""

    k: int
    structure: FiniteStructure

    def member(self, phi) -> bool:
        raise NotImplementedError

    def __contains__(self, phi) -> bool:
        try:
            check_query(phi, self.structure)
        except (NotASentence, DomainError):
            return False
        return self.member(phi)

    def __call__(self, phi) -> bool:
        return phi in self


class AtomicLevel(Level):
    """The level-1 class: true atomic sentences with constants."""

    def __init__(self, structure: FiniteStructure):
        if structure.kind != "code":
            raise TypeError("truth towers need a structure whose elements are Ackermann codes")
        self.structure = structure
        self.k = 1
        self.chain = [self]

    def member(self, phi) -> bool:
        if phi.depth > 1:
            raise DepthError(f"level 1 does not decide depth-{phi.depth} sentences")
        if isinstance(phi, Eq):
            return phi.left == phi.right
        if isinstance(phi, In):
            return ack_mem(phi.left.code, phi.right.code)
        return False


class ExtendedLevel(Level):
    """The level-(k+1) class obtained from a level-k class by one compositional step."""

    def __init__(self, prev: Level):
        self.prev = prev
        self.structure = prev.structure
        self.k = prev.k + 1
        self.chain = prev.chain + [self]
        self._memo = {}
        self._witness = {}
        self._lock = threading.Lock()

    def member(self, phi) -> bool:
        d = phi.depth
        if d < self.k:
            return self.chain[d - 1].member(phi)
        if d > self.k:
            raise DepthError(f"level {self.k} does not decide depth-{d} sentences")
        hit = self._memo.get(phi)
        if hit is None:
            hit, witness = self._step(phi)
            with self._lock:
                self._memo.setdefault(phi, hit)
                if witness is not None:
                    self._witness.setdefault(phi, witness)
        return hit

    def _step(self, phi):
        below = self.prev
        if isinstance(phi, Not):
            return not below.member(phi.body), None
        if isinstance(phi, Or):
            return below.member(phi.left) or below.member(phi.right), None
        if isinstance(phi, Exists):
            for a in self.structure.elements:
                if below.member(substitute(phi.body, phi.var, Const(a))):
                    return True, a
            return False, None
        raise DepthError("atomic sentences have depth 1")

    def witness(self, phi):
        """First witness code recorded for a member existential of depth k."""
        if self.member(phi) and isinstance(phi, Exists):
            return self._witness.get(phi)
        return None

    @property
    def memo_size(self) -> int:
        return len(self._memo)


def atomic_level(structure: FiniteStructure) -> AtomicLevel:
    return AtomicLevel(structure)


def extend_level(level: Level) -> ExtendedLevel:
    return ExtendedLevel(level)


def build_level(structure: FiniteStructure, k: int) -> Level:
    """Level k from scratch: the atomic level extended k-1 times."""
    if k < 1:
        raise ValueError("levels start at 1")
    level = atomic_level(structure)
    for _ in range(k - 1):
        level = extend_level(level)
    return level


class TruthTower:
    """Levels 1..reach over one structure, plus the union predicate T_Most.

    ``reach`` is a resource bound, the finite stand-in for the Mostowski cut:
    over a finite standard structure every depth has a truth class.
    """

    def __init__(self, structure: FiniteStructure, reach: int = DEFAULT_REACH, budget_nodes: int = 5):
        if reach < 1:
            raise ValueError("reach must be at least 1")
        self.structure = structure
        self.reach = reach
        self.budget_nodes = budget_nodes
        self.top = build_level(structure, reach)
        self.levels = {lvl.k: lvl for lvl in self.top.chain}

    @classmethod
    def build(cls, domain="rank:4", reach=DEFAULT_REACH, budget_nodes=5):
        return cls(FiniteStructure.from_spec(domain), reach, budget_nodes)

    def level(self, k) -> Level:
        if k > self.reach:
            raise ReachExceeded(f"level {k} is beyond the reach {self.reach}")
        return self.levels[k]

    def t_most_membership(self, phi):
        """``(in T_Most?, certificate depth)``; the certificate is the minimal level."""
        check_query(phi, self.structure)
        if phi.depth > self.reach:
            raise ReachExceeded(f"depth {phi.depth} exceeds the tower reach {self.reach}")
        return self.top.member(phi), phi.depth

    def member(self, phi) -> bool:
        return self.t_most_membership(phi)[0]

    def __contains__(self, phi) -> bool:
        try:
            check_query(phi, self.structure)
        except (NotASentence, DomainError):
            return False
        if phi.depth > self.reach:
            raise ReachExceeded(f"depth {phi.depth} exceeds the tower reach {self.reach}")
        return self.top.member(phi)

    def __call__(self, phi) -> bool:
        return phi in self

    def in_reach(self, k: int) -> bool:
        """The cut: 1..reach, closed downward."""
        return 1 <= k <= self.reach
