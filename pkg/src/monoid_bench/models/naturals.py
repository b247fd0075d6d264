from __future__ import annotations

from typing import Callable, Iterator, Mapping, Optional

from monoid_bench.arith.coding import CODE_PREDICATES
from monoid_bench.logic.formula import Num, Plus, Pred, Term, Times, Var
from monoid_bench.logic.signature import Signature, SortError
from monoid_bench.models.base_model import Assignment, Structure


class NaturalNumbers(Structure):
    """The standard model <N, +, *, 0, 1>, quantifiers bounded by magnitude."""

    kind = "nat"

    def __init__(self, relations: Optional[Mapping[str, Callable[..., bool]]] = None):
        super().__init__(Signature.arithmetic())
        self.relations = dict(CODE_PREDICATES if relations is None else relations)

    def domain(self, bound: int) -> Iterator[int]:
        self._validate_bound(bound)
        return iter(range(bound + 1))

    def domain_size(self, bound: int) -> int:
        return bound + 1

    def evaluate_term(self, term: Term, assignment: Assignment) -> int:
        if isinstance(term, Var):
            return int(assignment[term.name])
        if isinstance(term, Num):
            return term.value
        if isinstance(term, Plus):
            return self.evaluate_term(term.left, assignment) + self.evaluate_term(term.right, assignment)
        if isinstance(term, Times):
            return self.evaluate_term(term.left, assignment) * self.evaluate_term(term.right, assignment)
        raise SortError(f"Not an arithmetic term: {term!r}")

    def holds(self, atom: Pred, assignment: Assignment) -> bool:
        relation = self.relations.get(atom.name)
        if relation is None:
            raise SortError(f"Relation {atom.name} is not interpreted in N")
        return relation(*(self.evaluate_term(arg, assignment) for arg in atom.args))

    def parse_element(self, text: str) -> int:
        value = int(text)
        if value < 0:
            raise ValueError(f"Not a natural number: {text}")
        return value

    def __str__(self) -> str:
        return "nat"
