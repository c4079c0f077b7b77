"""Hereditarily finite sets under Ackermann coding.

The code of a set is the sum of ``2**code(x)`` over its members, so
``x in c`` holds exactly when bit ``x`` of ``c`` is set.  Codes are the
canonical representation; :class:`HFSet` trees are built on demand.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from .errors import ParseError, ResourceError

DEFAULT_DOMAIN_BUDGET = 1 << 16


class HFSet(frozenset):
    """A hereditarily finite set: a frozenset whose members are HFSets."""

    __slots__ = ()

    def __repr__(self):
        if not self:
            return "{}"
        return "{" + ", ".join(map(repr, self.sorted_members())) + "}"

    def sorted_members(self):
        return sorted(self, key=ack_key)


EMPTY = HFSet()


def ack_encode(s: HFSet) -> int:
    return _encode(s)


@lru_cache(maxsize=1 << 17)
def _encode(s):
    code = 0
    for t in s:
        code |= 1 << _encode(t)
    return code


def bits(n: int):
    """Positions of the set bits of ``n``, ascending."""
    i = 0
    while n:
        if n & 1:
            yield i
        n >>= 1
        i += 1


def members(code: int) -> list:
    """Codes of the members of the set coded by ``code``."""
    if code < 1 << 64:
        return list(bits(code))
    out = []
    while code:
        low = code & -code
        out.append(low.bit_length() - 1)
        code ^= low
    return out


@lru_cache(maxsize=1 << 17)
def ack_decode(n: int) -> HFSet:
    if n < 0:
        raise ValueError("Ackermann codes are natural numbers")
    return HFSet(ack_decode(i) for i in members(n))


def ack_mem(x: int, c: int) -> bool:
    return (c >> x) & 1 == 1


def ack_compare(a: HFSet, b: HFSet) -> int:
    """Order sets by their Ackermann codes without computing the codes.

    The larger code belongs to whichever set owns the code-largest member of
    the symmetric difference.
    """
    if a == b:
        return 0
    diff = a ^ b
    top = max(diff, key=ack_key)
    return 1 if top in a else -1


ack_key = cmp_to_key(ack_compare)


def transitive_closure(s: HFSet) -> HFSet:
    seen = set()
    stack = list(s)
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(x)
    return HFSet(seen)


def transitive_closure_code(n: int) -> int:
    out = 0
    stack = [n]
    while stack:
        for m in members(stack.pop()):
            if not (out >> m) & 1:
                out |= 1 << m
                stack.append(m)
    return out


def rank(s: HFSet) -> int:
    return _rank(s)


@lru_cache(maxsize=1 << 17)
def _rank(s):
    return 1 + max(map(_rank, s)) if s else 0


def rank_of_code(n: int) -> int:
    return _rank_code(n)


@lru_cache(maxsize=1 << 17)
def _rank_code(n):
    # the top bit is the code-largest member, but not necessarily of highest rank
    return 1 + max(map(_rank_code, members(n))) if n else 0


def is_transitive(s: HFSet) -> bool:
    return all(x <= s for x in s)


def vn_size(r: int, cap: int | None = None):
    """``|V_r|``; returns None once it would exceed ``cap``."""
    size = 0
    for _ in range(r):
        if cap is not None and size >= cap.bit_length():
            return None
        size = 1 << size
    if cap is not None and size > cap:
        return None
    return size


@dataclass(frozen=True)
class DomainSpec:
    """``rank_cap(r)``: sets of rank < r.  ``code_cap(n)``: sets with code < n."""

    kind: str
    bound: int

    def __post_init__(self):
        if self.kind not in ("rank", "code"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.bound < 0:
            raise ValueError("domain bound must be non-negative")

    @classmethod
    def rank_cap(cls, r):
        return cls("rank", r)

    @classmethod
    def code_cap(cls, n):
        return cls("code", n)

    @classmethod
    def parse(cls, text: str):
        m = re.fullmatch(r"\s*(rank|code)\s*:\s*(\d+)\s*", text)
        if not m:
            raise ParseError(f"domain must look like rank:R or code:N, got {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.kind}:{self.bound}"

    def size(self, budget=DEFAULT_DOMAIN_BUDGET):
        if self.kind == "code":
            return self.bound if self.bound <= budget else None
        return vn_size(self.bound, budget)

    def contains(self, code: int) -> bool:
        if self.kind == "code":
            return code < self.bound
        return rank_of_code(code) < self.bound if code < (1 << 64) else _rank_big(code) < self.bound


def _rank_big(code):
    return 1 + max(_rank_big(m) if m >= (1 << 64) else rank_of_code(m) for m in members(code)) if code else 0


def enumerate_domain(d: DomainSpec, budget: int = DEFAULT_DOMAIN_BUDGET) -> list:
    """Ascending codes of the domain; raises if it holds more than ``budget`` sets."""
    n = d.size(budget)
    if n is None:
        if d.kind == "rank":
            size, r = 0, 0
            while r < d.bound and (1 << size) <= budget:
                size, r = 1 << size, r + 1
            need = f"2**{size}" if r < d.bound and r == d.bound - 1 else f"|V_{d.bound}| >= 2**{size}"
            raise ResourceError(
                f"rank_cap({d.bound}) requires {need} elements, more than the budget of {budget}"
            )
        raise ResourceError(f"code_cap({d.bound}) exceeds the budget of {budget} elements")
    # V_r is exactly the codes below |V_r|, since |V_{r}| = 2**|V_{r-1}|
    return list(range(n))
