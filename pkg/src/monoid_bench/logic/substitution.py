from __future__ import annotations

from typing import Iterable, Mapping

from monoid_bench.logic.formula import (
    And, Concat, Equal, Exists, Forall, Formula, Implies, Not, Num, Or, Plus, Pred, Term,
    Times, Var, WordConst, all_vars, cat, free_vars, term_vars,
)


class NameSupply:
    """Deterministic fresh variable names of the form base_k."""

    def __init__(self, reserved: Iterable[str] = ()):
        self._used = set(reserved)
        self._counter = 0

    def reserve(self, names: Iterable[str]) -> None:
        self._used.update(names)

    def claim(self, name: str) -> str:
        """`name` itself when still free, otherwise a fresh variant of it."""
        if name in self._used:
            return self.fresh(name)
        self._used.add(name)
        return name

    def fresh(self, base: str = "v") -> str:
        base = base.split("_")[0] or "v"
        while True:
            self._counter += 1
            name = f"{base}_{self._counter}"
            if name not in self._used:
                self._used.add(name)
                return name


def substitute_term(term: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if isinstance(term, (WordConst, Num)):
        return term
    if isinstance(term, Concat):
        return cat(*(substitute_term(p, mapping) for p in term.parts))
    if isinstance(term, Plus):
        return Plus(substitute_term(term.left, mapping), substitute_term(term.right, mapping))
    assert isinstance(term, Times)
    return Times(substitute_term(term.left, mapping), substitute_term(term.right, mapping))


def substitute(f: Formula, mapping: Mapping[str, Term],
               names: NameSupply | None = None) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    if names is None:
        reserved = all_vars(f)
        for term in mapping.values():
            reserved |= term_vars(term)
        names = NameSupply(reserved)
    return _substitute(f, dict(mapping), names)


def _substitute(f: Formula, mapping: dict[str, Term], names: NameSupply) -> Formula:
    if isinstance(f, Equal):
        return Equal(substitute_term(f.left, mapping), substitute_term(f.right, mapping))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(substitute_term(a, mapping) for a in f.args))
    if isinstance(f, Not):
        return Not(_substitute(f.body, mapping, names))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_substitute(f.left, mapping, names), _substitute(f.right, mapping, names))
    assert isinstance(f, (Exists, Forall))
    inner = {k: v for k, v in mapping.items() if k != f.var and k in free_vars(f.body)}
    if not inner:
        return f
    incoming: set[str] = set()
    for term in inner.values():
        incoming |= term_vars(term)
    if f.var in incoming:
        renamed = names.fresh(f.var)
        inner[f.var] = Var(renamed)
        return type(f)(renamed, _substitute(f.body, inner, names))
    return type(f)(f.var, _substitute(f.body, inner, names))
