"""Gödel numbering of terms and formulas.

Codes are built from Cantor pairing with a tag in the low residue class:

    term    = 6 * payload + tag            (Var 0, Const 1, Zero 2, Succ 3, Add 4, Mul 5)
    formula = 6 * payload + tag + 1        (Eq 0, In 1, Not 2, Or 3, Exists 4, Pred 5)

Because pairing dominates both components and every formula adds at least one
to its largest child, a formula's code exceeds the codes of its immediate
subformulas and is at least its depth.  Formula codes start at 1; 0 codes
nothing.
"""
from __future__ import annotations

from math import isqrt

from .ast import Add, Const, Eq, Exists, In, Mul, Not, Or, Pred, Succ, Var, ZERO, Zero


def pair(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> tuple:
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def encode_list(codes) -> int:
    out = 0
    for c in reversed(list(codes)):
        out = 1 + pair(c, out)
    return out


def decode_list(z: int) -> list:
    out = []
    while z:
        head, z = unpair(z - 1)
        out.append(head)
    return out


def _name_code(name: str) -> int:
    return int.from_bytes(name.encode("utf-8"), "big")


def _name_decode(n: int) -> str:
    return n.to_bytes((n.bit_length() + 7) // 8, "big").decode("utf-8")


def term_code(t) -> int:
    if isinstance(t, Var):
        return 6 * t.index
    if isinstance(t, Const):
        return 6 * t.code + 1
    if isinstance(t, Zero):
        return 2
    # numerals nest deeply: walk the Succ chain without recursion
    n = 0
    while isinstance(t, Succ):
        t, n = t.arg, n + 1
    if n:
        c = term_code(t)
        for _ in range(n):
            c = 6 * c + 3
        return c
    tag = 4 if isinstance(t, Add) else 5
    return 6 * pair(term_code(t.left), term_code(t.right)) + tag


def decode_term(c: int):
    """Inverse of :func:`term_code`; None if ``c`` codes no term."""
    succs = 0
    while c % 6 == 3:
        c, succs = c // 6, succs + 1
    payload, tag = divmod(c, 6)
    if tag == 0:
        t = Var(payload)
    elif tag == 1:
        t = Const(payload)
    elif tag == 2:
        if payload:
            return None
        t = ZERO
    else:
        a, b = unpair(payload)
        left, right = decode_term(a), decode_term(b)
        if left is None or right is None:
            return None
        t = (Add if tag == 4 else Mul)(left, right)
    for _ in range(succs):
        t = Succ(t)
    return t


def godel_code(phi) -> int:
    if isinstance(phi, Eq):
        return 6 * pair(term_code(phi.left), term_code(phi.right)) + 1
    if isinstance(phi, In):
        return 6 * pair(term_code(phi.left), term_code(phi.right)) + 2
    if isinstance(phi, Not):
        return 6 * godel_code(phi.body) + 3
    if isinstance(phi, Or):
        return 6 * pair(godel_code(phi.left), godel_code(phi.right)) + 4
    if isinstance(phi, Exists):
        return 6 * pair(phi.var, godel_code(phi.body)) + 5
    if isinstance(phi, Pred):
        return 6 * pair(_name_code(phi.name), encode_list(term_code(a) for a in phi.args)) + 6
    raise TypeError(f"not a formula: {phi!r}")


def decode(c: int):
    """Inverse of :func:`godel_code`; None if ``c`` codes no formula."""
    if c < 1:
        return None
    payload, tag = divmod(c - 1, 6)
    if tag in (0, 1):
        a, b = unpair(payload)
        left, right = decode_term(a), decode_term(b)
        if left is None or right is None:
            return None
        return (Eq if tag == 0 else In)(left, right)
    if tag == 2:
        body = decode(payload)
        return None if body is None else Not(body)
    if tag == 3:
        a, b = unpair(payload)
        left, right = decode(a), decode(b)
        if left is None or right is None:
            return None
        return Or(left, right)
    if tag == 4:
        var, b = unpair(payload)
        body = decode(b)
        return None if body is None else Exists(var, body)
    name_c, args_c = unpair(payload)
    if name_c == 0:
        return None
    try:
        name = _name_decode(name_c)
    except UnicodeDecodeError:
        return None
    args = [decode_term(a) for a in decode_list(args_c)]
    if any(a is None for a in args) or not name or name != name.strip() or " " in name or "(" in name or ")" in name:
        return None
    return Pred(name, tuple(args))
