"""Shared plumbing for gadget words and their defining formulas."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Optional

from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.logic.formula import Formula, Term, Var, const
from monoid_bench.logic.substitution import NameSupply
from monoid_bench.models.base_model import Structure
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.words import Alphabet, Word


class UnknownGadgetError(ValueError):
    """No gadget of that name in the catalogue."""


class GadgetParameterError(ValueError):
    """Gadget instance parameters out of range."""


@dataclass(frozen=True)
class Params:
    """
    Parameter constants a gadget formula is written with.

    p1 plays the role of x1 (the cyclic generator) and p2 of x2. With divisor_form set,
    "v is a power of p1" is rendered as commuting with p1 and having p1 as its only
    irreducible divisor; needed in trace monoids, where the centralizer of p1 is larger
    than the cyclic submonoid.
    """
    p1: Term = const("x1")
    p2: Term = const("x2")
    divisor_form: bool = False

    def values(self, assignment: Mapping[str, Any], structure: Structure) -> tuple[Word, Word]:
        return structure.evaluate_term(self.p1, assignment), structure.evaluate_term(self.p2, assignment)

    @classmethod
    def of(cls, p1: str, p2: str, divisor_form: bool = False) -> Params:
        return cls(const(p1), const(p2), divisor_form)


@dataclass
class Instance:
    """A defining formula together with the witness hints of its existentials."""
    formula: Formula
    hints: dict[str, WitnessHint] = field(default_factory=dict)


class FormulaContext:
    """Fresh bound-variable names and witness hints collected while building a formula."""

    def __init__(self, reserved: Iterable[str] = (), names: Optional[NameSupply] = None):
        self.names = names if names is not None else NameSupply(reserved)
        self.names.reserve(reserved)
        self.hints: dict[str, WitnessHint] = {}

    def child(self) -> FormulaContext:
        """A context drawing names from the same supply, with hints of its own."""
        return FormulaContext(names=self.names)

    def fresh(self, base: str = "v") -> str:
        return self.names.fresh(base)

    def var(self, base: str = "v") -> Var:
        return Var(self.fresh(base))

    def hint(self, name: str, hint: WitnessHint) -> None:
        self.hints[name] = hint

    def finish(self, formula: Formula) -> Instance:
        return Instance(formula, dict(self.hints))


def default_pair(p1: Optional[Word], p2: Optional[Word]) -> tuple[Word, Word]:
    if p1 is not None and p2 is not None:
        return p1, p2
    x1, x2 = Alphabet.standard(2).generators()
    return p1 or x1, p2 or x2


def exponent(structure: Structure, value: Word, base: Word) -> Optional[int]:
    """k with value = base^k in the structure, or None."""
    if base.is_identity:
        return None
    k, rest = divmod(len(value), len(base))
    if rest or not structure.equal(base ** k, value):
        return None
    return k


def normalized(structure: Structure, w: Word) -> Word:
    if isinstance(structure, MonoidModel):
        return structure.normal_form(w)
    return w
