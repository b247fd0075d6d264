"""The list superstructure over the naturals: two sorts (naturals and finite tuples of
naturals) with position, length and concatenation."""
from __future__ import annotations

from itertools import product
from typing import Any, Iterator, Sequence

from monoid_bench.arith.coding import NatTuple
from monoid_bench.logic.formula import Num, Pred, Term, Var
from monoid_bench.logic.signature import Signature, SortError
from monoid_bench.models.base_model import Assignment, Structure


def lss_position(s: Sequence[int], i: int) -> int:
    """The i-th entry of s, 1-based."""
    if not 1 <= i <= len(s):
        raise ValueError(f"Position {i} out of range 1..{len(s)}")
    return s[i - 1]


def lss_length(s: Sequence[int]) -> int:
    return len(s)


def lss_concat(s: Sequence[int], r: Sequence[int]) -> NatTuple:
    return tuple(s) + tuple(r)


def format_nat_tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in t) + ")"


def parse_nat_tuple(text: str) -> NatTuple:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"Not a tuple: {text}")
    body = body[1:-1].strip()
    if not body:
        return ()
    entries = tuple(int(part) for part in body.split(","))
    if any(e < 0 for e in entries):
        raise ValueError(f"Tuple entries must be natural numbers: {text}")
    return entries


class ListSuperstructure(Structure):
    """
    Naturals and tuples of naturals in one domain, told apart by the sort relations
    Nat and Seq. Pos(s, i, a), Len(s, n) and Cat(s, r, u) hold only for well-sorted
    arguments. Quantifiers at bound B range over the naturals up to B and the tuples of
    length at most B with entries at most B.
    """

    kind = "lists"

    def __init__(self) -> None:
        super().__init__(Signature.lists())

    def domain(self, bound: int) -> Iterator[Any]:
        self._validate_bound(bound)
        yield from range(bound + 1)
        for length in range(bound + 1):
            for entries in product(range(bound + 1), repeat=length):
                yield tuple(entries)

    def domain_size(self, bound: int) -> int:
        return (bound + 1) + sum((bound + 1) ** length for length in range(bound + 1))

    def evaluate_term(self, term: Term, assignment: Assignment) -> Any:
        if isinstance(term, Var):
            return assignment[term.name]
        if isinstance(term, Num):
            return term.value
        raise SortError(f"Not a list-superstructure term: {term!r}")

    def equal(self, a: Any, b: Any) -> bool:
        return type(a) is type(b) and a == b

    def holds(self, atom: Pred, assignment: Assignment) -> bool:
        args = [self.evaluate_term(arg, assignment) for arg in atom.args]
        if atom.name == "Seq":
            return isinstance(args[0], tuple)
        if atom.name == "Nat":
            return isinstance(args[0], int)
        if atom.name == "Pos":
            s, i, a = args
            return (isinstance(s, tuple) and isinstance(i, int) and isinstance(a, int)
                    and 1 <= i <= len(s) and s[i - 1] == a)
        if atom.name == "Len":
            s, n = args
            return isinstance(s, tuple) and isinstance(n, int) and len(s) == n
        if atom.name == "Cat":
            s, r, u = args
            return all(isinstance(v, tuple) for v in args) and s + r == u
        raise SortError(f"Relation {atom.name} is not interpreted in the list superstructure")

    def size(self, element: Any) -> int:
        if isinstance(element, tuple):
            return max([len(element), *element])
        return int(element)

    def format_element(self, element: Any, pretty: bool = False) -> str:
        if isinstance(element, tuple):
            return format_nat_tuple(element)
        return str(element)

    def parse_element(self, text: str) -> Any:
        if text.strip().startswith("("):
            return parse_nat_tuple(text)
        value = int(text)
        if value < 0:
            raise ValueError(f"Not a natural number: {text}")
        return value

    def __str__(self) -> str:
        return "lists"
