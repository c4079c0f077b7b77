"""S-expression reader and printer for formulas, terms and HF set literals.

Grammar::

    f ::= (= t t) | (in t t) | (not f) | (or f f) | (exists vN f)
        | (and f f ...) | (imp f f) | (iff f f) | (forall vN f) | (pred NAME t ...)
    t ::= vN | (c NAT) | (num NAT) | (S t) | (+ t t) | (* t t)

``(num n)`` denotes the numeral ``S^n(0)``.  ``and``/``imp``/``iff``/``forall``
are expanded while reading, so the printer never emits them.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .ast import (
    Add, And, Const, Eq, Exists, Forall, Iff, Implies, In, Mul, Not, Or, Pred, Succ,
    Var, Zero, check_signature, numeral, numeral_value, signature_of,
)

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_VAR = re.compile(r"v(\d+)$")
_NAT = re.compile(r"\d+$")


def tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("unexpected character", pos)
            break
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    return out


def read(text: str):
    """Read one s-expression into nested lists of ``(atom, offset)`` tokens."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)
    expr, i = _read(tokens, 0)
    if i != len(tokens):
        raise ParseError("trailing input", tokens[i][1])
    return expr


def _read(tokens, i):
    if i >= len(tokens):
        raise ParseError("unexpected end of input", tokens[-1][1] if tokens else 0)
    tok, pos = tokens[i]
    if tok == "(":
        items = []
        i += 1
        while True:
            if i >= len(tokens):
                raise ParseError("unclosed parenthesis", pos)
            if tokens[i][0] == ")":
                return _List(items, pos), i + 1
            item, i = _read(tokens, i)
            items.append(item)
    if tok == ")":
        raise ParseError("unexpected ')'", pos)
    return _Atom(tok, pos), i + 1


class _Atom:
    __slots__ = ("text", "pos")

    def __init__(self, text, pos):
        self.text, self.pos = text, pos


class _List:
    __slots__ = ("items", "pos")

    def __init__(self, items, pos):
        self.items, self.pos = items, pos


def _head(node):
    if not isinstance(node, _List) or not node.items or not isinstance(node.items[0], _Atom):
        raise ParseError("expected a parenthesised form", node.pos)
    return node.items[0].text, node.items[1:]


def _var(node) -> int:
    if isinstance(node, _Atom):
        m = _VAR.match(node.text)
        if m:
            return int(m.group(1))
    raise ParseError("expected a variable vN", node.pos)


def _nat(node) -> int:
    if isinstance(node, _Atom) and _NAT.match(node.text):
        return int(node.text)
    raise ParseError("expected a natural number", node.pos)


def _arity(node, args, n):
    if len(args) != n:
        raise ParseError(f"expected {n} argument(s)", node.pos)


def to_term(node):
    if isinstance(node, _Atom):
        return Var(_var(node))
    head, args = _head(node)
    if head == "c":
        _arity(node, args, 1)
        return Const(_nat(args[0]))
    if head == "num":
        _arity(node, args, 1)
        return numeral(_nat(args[0]))
    if head == "S":
        _arity(node, args, 1)
        return Succ(to_term(args[0]))
    if head in ("+", "*"):
        _arity(node, args, 2)
        cls = Add if head == "+" else Mul
        return cls(to_term(args[0]), to_term(args[1]))
    raise ParseError(f"unknown term constructor {head!r}", node.pos)


def to_formula(node):
    head, args = _head(node)
    if head in ("=", "in"):
        _arity(node, args, 2)
        cls = Eq if head == "=" else In
        return cls(to_term(args[0]), to_term(args[1]))
    if head == "pred":
        if not args or not isinstance(args[0], _Atom):
            raise ParseError("pred needs a name", node.pos)
        return Pred(args[0].text, tuple(to_term(a) for a in args[1:]))
    if head == "not":
        _arity(node, args, 1)
        return Not(to_formula(args[0]))
    if head in ("or", "and"):
        if len(args) < 2:
            raise ParseError(f"{head} needs at least two arguments", node.pos)
        parts = [to_formula(a) for a in args]
        join = Or if head == "or" else And
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = join(p, out)
        return out
    if head in ("imp", "iff"):
        _arity(node, args, 2)
        join = Implies if head == "imp" else Iff
        return join(to_formula(args[0]), to_formula(args[1]))
    if head in ("exists", "forall"):
        _arity(node, args, 2)
        q = Exists if head == "exists" else Forall
        return q(_var(args[0]), to_formula(args[1]))
    raise ParseError(f"unknown connective {head!r}", node.pos)


def parse(text: str, signature: str | None = None):
    """Parse a formula; with ``signature`` given, reject symbols from the other one."""
    phi = to_formula(read(text))
    if signature is not None:
        check_signature(phi, signature)
    else:
        signature_of(phi)  # mixed formulas are rejected either way
    return phi


def parse_term(text: str):
    return to_term(read(text))


def term_str(t) -> str:
    if isinstance(t, Var):
        return f"v{t.index}"
    if isinstance(t, Const):
        return f"(c {t.code})"
    n = numeral_value(t)
    if n is not None:
        return f"(num {n})"
    if isinstance(t, Zero):
        return "(num 0)"
    if isinstance(t, Succ):
        return f"(S {term_str(t.arg)})"
    op = "+" if isinstance(t, Add) else "*"
    return f"({op} {term_str(t.left)} {term_str(t.right)})"


def to_sexpr(phi) -> str:
    """Print with primitive connectives only; ``parse(to_sexpr(f)) == f``."""
    parts = []
    stack = [phi]
    while stack:
        f = stack.pop()
        if isinstance(f, str):
            parts.append(f)
        elif isinstance(f, Eq):
            parts.append(f"(= {term_str(f.left)} {term_str(f.right)})")
        elif isinstance(f, In):
            parts.append(f"(in {term_str(f.left)} {term_str(f.right)})")
        elif isinstance(f, Pred):
            args = "".join(" " + term_str(a) for a in f.args)
            parts.append(f"(pred {f.name}{args})")
        elif isinstance(f, Not):
            parts.append("(not ")
            stack.extend([")", f.body])
        elif isinstance(f, Or):
            parts.append("(or ")
            stack.extend([")", f.right, " ", f.left])
        elif isinstance(f, Exists):
            parts.append(f"(exists v{f.var} ")
            stack.extend([")", f.body])
        else:
            raise TypeError(f"not a formula: {f!r}")
    return "".join(parts)


def to_pretty(phi) -> str:
    """Readable infix rendering that re-folds the usual abbreviations."""
    if isinstance(phi, Eq):
        return f"{_pt(phi.left)} = {_pt(phi.right)}"
    if isinstance(phi, In):
        return f"{_pt(phi.left)} ∈ {_pt(phi.right)}"
    if isinstance(phi, Pred):
        return f"{phi.name}({', '.join(_pt(a) for a in phi.args)})"
    if isinstance(phi, Not):
        b = phi.body
        if isinstance(b, Exists) and isinstance(b.body, Not):
            return f"∀v{b.var} {to_pretty(b.body.body)}"
        if isinstance(b, Or) and isinstance(b.left, Not) and isinstance(b.right, Not):
            return f"({to_pretty(b.left.body)} ∧ {to_pretty(b.right.body)})"
        if isinstance(b, Eq):
            return f"{_pt(b.left)} ≠ {_pt(b.right)}"
        return f"¬{to_pretty(b)}"
    if isinstance(phi, Or):
        if isinstance(phi.left, Not):
            return f"({to_pretty(phi.left.body)} → {to_pretty(phi.right)})"
        return f"({to_pretty(phi.left)} ∨ {to_pretty(phi.right)})"
    return f"∃v{phi.var} {to_pretty(phi.body)}"


def _pt(t) -> str:
    if isinstance(t, Var):
        return f"v{t.index}"
    if isinstance(t, Const):
        return f"c{t.code}"
    n = numeral_value(t)
    if n is not None:
        return str(n)
    if isinstance(t, Succ):
        return f"S({_pt(t.arg)})"
    op = "+" if isinstance(t, Add) else "×"
    return f"({_pt(t.left)} {op} {_pt(t.right)})"


# -- HF set literals --------------------------------------------------------

_SET_TOKEN = re.compile(r"\s*([{},]|\d+)")


def parse_set_literal(text: str):
    """Parse ``{}``, ``{0,1}`` or nested ``{{},{{}}}``; integers stand for Ackermann codes.

    Returns the Ackermann code of the denoted set.
    """
    pos = 0
    tokens = []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _SET_TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character in set literal", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    code, i = _set(tokens, 0)
    if i != len(tokens):
        raise ParseError("trailing input in set literal", tokens[i][1])
    return code


def _set(tokens, i):
    if i >= len(tokens):
        raise ParseError("unexpected end of set literal", tokens[-1][1] if tokens else 0)
    tok, pos = tokens[i]
    if tok.isdigit():
        return int(tok), i + 1
    if tok != "{":
        raise ParseError("expected '{' or a code", pos)
    i += 1
    code = 0
    if i < len(tokens) and tokens[i][0] == "}":
        return 0, i + 1
    while True:
        member, i = _set(tokens, i)
        code |= 1 << member
        if i >= len(tokens):
            raise ParseError("unclosed '{'", pos)
        if tokens[i][0] == "}":
            return code, i + 1
        if tokens[i][0] != ",":
            raise ParseError("expected ',' or '}'", tokens[i][1])
        i += 1
