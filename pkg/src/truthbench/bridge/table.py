"""The translation table: set-signature definitions of the arithmetic vocabulary."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..errors import ParseError
from ..syntax.ast import Eq, Exists, In, Not, Or, Pred, instantiate, rename_bound, var_indices
from ..syntax.sexpr import _Atom, _List, _var, read, to_formula

TABLE_VERSION = 1
REQUIRED = ("empty", "succ", "ord", "pair", "app", "fn", "add", "mul")


@dataclass(frozen=True)
class Definition:
    name: str
    params: tuple
    body: object

    def apply(self, args, fresh):
        """The body with bound variables renamed from ``fresh`` and parameters replaced by ``args``."""
        if len(args) != len(self.params):
            raise ValueError(f"{self.name} takes {len(self.params)} arguments")
        # binders must not land on a parameter index, or the parameter would be captured
        renamed = rename_bound(self.body, (i for i in fresh if i not in self.params))
        return instantiate(renamed, dict(zip(self.params, args)))


class TranslationTable:
    def __init__(self, definitions, version=TABLE_VERSION):
        self.version = version
        self.defs = {d.name: d for d in definitions}
        missing = [n for n in REQUIRED if n not in self.defs]
        if missing:
            raise ParseError(f"translation table lacks {', '.join(missing)}")

    def __getitem__(self, name) -> Definition:
        return self.defs[name]

    def names(self):
        return list(self.defs)

    def formula(self, name, *args, fresh=None):
        """Instance of a definition at the given argument terms."""
        if fresh is None:
            used = set().union(*(a.fv for a in args)) if args else set()
            fresh = itertools.count(max(used, default=0) + 1000)
        return self.defs[name].apply(args, fresh)


def _strip_comments(text):
    return re.sub(r";[^\n]*", "", text)


def expand(phi, defs, fresh):
    """Replace every ``Pred`` naming a definition by that definition's instance."""
    if isinstance(phi, Pred):
        d = defs.get(phi.name)
        if d is None:
            raise ParseError(f"reference to undefined table entry {phi.name!r}")
        return d.apply(phi.args, fresh)
    if isinstance(phi, (Eq, In)):
        return phi
    if isinstance(phi, Not):
        return Not(expand(phi.body, defs, fresh))
    if isinstance(phi, Or):
        return Or(expand(phi.left, defs, fresh), expand(phi.right, defs, fresh))
    return Exists(phi.var, expand(phi.body, defs, fresh))


def parse_table(text: str) -> TranslationTable:
    forms = read("(" + _strip_comments(text) + ")").items
    version, defs, fresh = None, {}, itertools.count(1000)
    for form in forms:
        if not isinstance(form, _List) or not form.items or not isinstance(form.items[0], _Atom):
            raise ParseError("expected (version N) or (def NAME (PARAMS) BODY)", form.pos)
        head = form.items[0].text
        if head == "version":
            version = int(form.items[1].text)
            continue
        if head != "def" or len(form.items) != 4:
            raise ParseError("expected (def NAME (PARAMS) BODY)", form.pos)
        name = form.items[1].text
        params = tuple(_var(p) for p in form.items[2].items)
        body = expand(to_formula(form.items[3]), defs, fresh)
        if body.fv != set(params):
            raise ParseError(f"{name}: free variables {sorted(body.fv)} differ from parameters {list(params)}", form.pos)
        defs[name] = Definition(name, params, body)
    if version != TABLE_VERSION:
        raise ParseError(f"translation table version {version!r}, expected {TABLE_VERSION}")
    return TranslationTable(defs.values(), version)


@lru_cache(maxsize=1)
def default_table() -> TranslationTable:
    text = resources.files("truthbench.data").joinpath("translation_table.sexp").read_text(encoding="utf-8")
    return parse_table(text)


def max_var(phi) -> int:
    return max(var_indices(phi), default=0)
