from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterator, Mapping, Optional, Sequence, Union

from monoid_bench.logic.formula import Pred, Term
from monoid_bench.logic.signature import Signature, SortError
from monoid_bench.models.words import Word

Element = Union[Word, int, tuple[int, ...]]
Assignment = Mapping[str, Any]


class ModelKindError(ValueError):
    """Operation not available for this kind of structure."""


class _Target:
    def __repr__(self) -> str:
        return "TARGET"


# Marks the occurrence of the variable being pinned inside a flattened equation side.
TARGET = _Target()
Item = Union[Word, _Target, None]


class Structure(ABC):
    """Base class for all structures formulas are evaluated in."""

    def __init__(self, signature: Signature):
        self.signature = signature

    @abstractmethod
    def domain(self, bound: int) -> Iterator[Any]:
        """
        Enumerate the quantifier domain.

        Parameters:
        -----------
        bound : int
            Maximum word length (monoids) or magnitude (arithmetic)

        Returns:
        --------
        Iterator
            Elements in the fixed enumeration order (length, then lexicographic; naturals
            ascending)
        """
        pass

    @abstractmethod
    def domain_size(self, bound: int) -> int:
        """Upper bound on the number of elements domain(bound) yields."""
        pass

    @abstractmethod
    def evaluate_term(self, term: Term, assignment: Assignment) -> Any:
        pass

    def equal(self, a: Any, b: Any) -> bool:
        return bool(a == b)

    def holds(self, atom: Pred, assignment: Assignment) -> bool:
        raise SortError(f"Relation {atom.name} is not interpreted in {self}")

    def pin_candidates(self, items: Sequence[Item], ground: Any) -> Optional[list[Any]]:
        """Candidates for the TARGET occurrence in `items` so that their product can equal
        `ground`; None when the structure cannot narrow the domain."""
        if len(items) == 1 and items[0] is TARGET:
            return [ground]
        return None

    def commuting_candidates(self, c: Any, bound: int) -> Optional[list[Any]]:
        """Elements of length <= bound commuting with c, when computable."""
        return None

    def size(self, element: Any) -> int:
        return int(element)

    def format_element(self, element: Any, pretty: bool = False) -> str:
        return str(element)

    def parse_element(self, text: str) -> Any:
        raise NotImplementedError

    def _validate_bound(self, bound: int) -> None:
        if bound < 0:
            raise ValueError("Bound must be non-negative")
