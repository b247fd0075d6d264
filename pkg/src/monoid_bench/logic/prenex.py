from __future__ import annotations

from typing import Type, Union

from monoid_bench.logic.formula import (
    And, Equal, Exists, Forall, Formula, Implies, Not, Or, Pred, Var, all_vars, free_vars,
    has_quantifier,
)
from monoid_bench.logic.substitution import NameSupply, substitute

QuantifierType = Type[Union[Exists, Forall]]
Prefix = list[tuple[QuantifierType, str]]


def prenex_normal_form(f: Formula) -> Formula:
    """Converts the given formula into prenex normal form"""
    return PrenexNormalizer().normalize(f)


def is_prenex(f: Formula) -> bool:
    while isinstance(f, (Exists, Forall)):
        f = f.body
    return not has_quantifier(f)


def to_nnf(f: Formula, negate: bool = False) -> Formula:
    """Eliminate implications and push negations down to the atoms."""
    if isinstance(f, (Equal, Pred)):
        return Not(f) if negate else f
    if isinstance(f, Not):
        return to_nnf(f.body, not negate)
    if isinstance(f, Implies):
        return to_nnf(Or(Not(f.left), f.right), negate)
    if isinstance(f, And):
        op: type = Or if negate else And
        return op(to_nnf(f.left, negate), to_nnf(f.right, negate))
    if isinstance(f, Or):
        op = And if negate else Or
        return op(to_nnf(f.left, negate), to_nnf(f.right, negate))
    if isinstance(f, Exists):
        return (Forall if negate else Exists)(f.var, to_nnf(f.body, negate))
    assert isinstance(f, Forall)
    return (Exists if negate else Forall)(f.var, to_nnf(f.body, negate))


class PrenexNormalizer:
    """
    Rebuilds a formula in prenex normal form.

    The walk returns a pair (prefix, matrix): the formula is equivalent to the matrix
    under the quantifiers of the prefix, outermost first. Quantifiers are pulled out left
    to right; a quantified variable clashing with a reserved name is renamed with a fresh
    name from a deterministic counter.
    """

    def __init__(self) -> None:
        self.names = NameSupply()

    def normalize(self, f: Formula) -> Formula:
        if is_prenex(f):
            return f
        self.names = NameSupply(all_vars(f))
        prefix, matrix = self.walk(self._unshadow(to_nnf(f), frozenset()))
        result = matrix
        for quantifier, name in reversed(prefix):
            result = quantifier(name, result)
        return result

    def _unshadow(self, f: Formula, bound: frozenset[str]) -> Formula:
        """Rename quantifiers that rebind a variable already bound above them."""
        if isinstance(f, (Equal, Pred, Not)):
            return f
        if isinstance(f, (And, Or)):
            return type(f)(self._unshadow(f.left, bound), self._unshadow(f.right, bound))
        assert isinstance(f, (Exists, Forall))
        if f.var in bound:
            fresh = self.names.fresh(f.var)
            f = type(f)(fresh, substitute(f.body, {f.var: Var(fresh)}, self.names))
        return type(f)(f.var, self._unshadow(f.body, bound | {f.var}))

    def walk(self, f: Formula) -> tuple[Prefix, Formula]:
        if isinstance(f, (Equal, Pred, Not)):
            return [], f
        if isinstance(f, (Exists, Forall)):
            prefix, matrix = self.walk(f.body)
            return [(type(f), f.var)] + prefix, matrix
        assert isinstance(f, (And, Or))
        return self.walk_conj_disj(f)

    def walk_conj_disj(self, f: Union[And, Or]) -> tuple[Prefix, Formula]:
        quantifiers: Prefix = []
        matrices: list[Formula] = []
        # names already in use by the final matrix
        reserved = free_vars(f)
        for part in (f.left, f.right):
            sub_prefix, sub_matrix = self.walk(part)
            for quantifier, name in sub_prefix:
                if name in reserved:
                    fresh = self.names.fresh(name)
                    sub_matrix = substitute(sub_matrix, {name: Var(fresh)}, self.names)
                    name = fresh
                quantifiers.append((quantifier, name))
                reserved.add(name)
            matrices.append(sub_matrix)
        return quantifiers, type(f)(matrices[0], matrices[1])
