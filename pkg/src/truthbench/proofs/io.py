"""Proof documents and proof codes."""
from __future__ import annotations

from .. import artifacts
from ..errors import ParseError, ProofStructureError
from ..syntax.coding import decode, decode_term, godel_code, term_code
from ..syntax.sexpr import parse, parse_term, term_str, to_sexpr
from .tree import ARITY, RULES, ProofTree

KIND = "proof"


def node_to_plain(node: ProofTree) -> dict:
    out = {
        "rule": node.rule,
        "conclusion": sorted(to_sexpr(f) for f in node.conclusion),
        "principal": to_sexpr(node.principal),
    }
    if node.term is not None:
        out["term"] = term_str(node.term)
    if node.eigen is not None:
        out["eigen"] = node.eigen
    if node.children:
        out["children"] = [node_to_plain(c) for c in node.children]
    return out


def node_from_plain(obj, path=()) -> ProofTree:
    if not isinstance(obj, dict):
        raise ProofStructureError("proof node must be an object", path)
    rule = obj.get("rule")
    if rule not in RULES:
        raise ProofStructureError(f"unknown rule {rule!r}", path)
    kids = obj.get("children", [])
    if not isinstance(kids, list) or len(kids) != ARITY[rule]:
        raise ProofStructureError(f"{rule} takes {ARITY[rule]} premise(s)", path)
    try:
        principal = parse(obj["principal"])
        concl = frozenset(parse(s) for s in obj.get("conclusion", []))
        term = parse_term(obj["term"]) if "term" in obj else None
    except (KeyError, TypeError) as exc:
        raise ProofStructureError(f"missing or malformed field {exc}", path) from None
    except ParseError as exc:
        raise ProofStructureError(f"bad formula: {exc}", path) from None
    eigen = obj.get("eigen")
    if eigen is not None and (not isinstance(eigen, int) or eigen < 0):
        raise ProofStructureError("eigenvariable must be a variable index", path)
    children = tuple(node_from_plain(c, path + (i,)) for i, c in enumerate(kids))
    return ProofTree(rule, concl, principal, children, term, eigen)


def proof_payload(proof, assumptions, goal) -> dict:
    return {
        "assumptions": [to_sexpr(a) for a in assumptions],
        "goal": to_sexpr(goal),
        "proof": node_to_plain(proof),
    }


def proof_from_payload(payload) -> tuple:
    """``(proof, assumptions, goal)``."""
    if not isinstance(payload, dict) or "proof" not in payload or "goal" not in payload:
        raise ProofStructureError("proof document needs 'proof' and 'goal'")
    try:
        assumptions = [parse(s) for s in payload.get("assumptions", [])]
        goal = parse(payload["goal"])
    except ParseError as exc:
        raise ProofStructureError(f"bad formula: {exc}") from None
    return node_from_plain(payload["proof"]), assumptions, goal


def save_proof(path, proof, assumptions, goal):
    artifacts.write(path, KIND, proof_payload(proof, assumptions, goal))


def load_proof(path) -> tuple:
    return proof_from_payload(artifacts.read(path, KIND))


def _gamma(x: int) -> str:
    bits = bin(x + 1)[2:]
    return "0" * (len(bits) - 1) + bits


def encode_naturals(seq) -> int:
    """Self-delimiting Elias-gamma concatenation behind a leading 1 bit."""
    return int("1" + "".join(_gamma(x) for x in seq), 2)


def decode_naturals(code: int) -> list:
    bits, i, out = bin(code)[3:], 0, []
    while i < len(bits):
        zeros = 0
        while bits[i + zeros] == "0":
            zeros += 1
        out.append(int(bits[i + zeros: i + 2 * zeros + 1], 2) - 1)
        i += 2 * zeros + 1
    return out


def proof_code(proof: ProofTree) -> int:
    """Code of a proof tree, linear in its printed size.

    The pre-order node records embed the code of every formula in the proof,
    so the result exceeds the code of each assumption (leaf formulas appear as
    principals, assumptions discharged into the end sequent appear negated).
    """
    seq = []
    for _, node in proof.walk():
        concl = sorted(godel_code(f) for f in node.conclusion)
        seq += [
            RULES.index(node.rule),
            godel_code(node.principal),
            0 if node.term is None else 1 + term_code(node.term),
            0 if node.eigen is None else 1 + node.eigen,
            len(concl),
            *concl,
        ]
    return encode_naturals(seq)


def decode_proof_code(code: int) -> ProofTree:
    nums = iter(decode_naturals(code))

    def node():
        rule = RULES[next(nums)]
        principal = decode(next(nums))
        t, e = next(nums), next(nums)
        concl = frozenset(decode(next(nums)) for _ in range(next(nums)))
        kids = tuple(node() for _ in range(ARITY[rule]))
        return ProofTree(rule, concl, principal, kids, None if t == 0 else decode_term(t - 1), None if e == 0 else e - 1)

    return node()
