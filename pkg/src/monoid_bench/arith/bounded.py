"""Bounded evaluation of arithmetic formulas and the sentence corpus used to check
translations of the naturals."""
from __future__ import annotations

from typing import Any, Mapping, Optional

from monoid_bench.checker.evaluator import Mode, evaluate
from monoid_bench.logic.formula import Formula
from monoid_bench.logic.parser import parse
from monoid_bench.logic.signature import Signature
from monoid_bench.models.naturals import NaturalNumbers

# Every witness is at most 8; products stay small so the multiplication gadget words
# the translated sentences build remain short.
CORPUS: list[tuple[str, bool]] = [
    ("1 + 1 = 2", True),
    ("2 * 3 = 6", True),
    ("2 * 2 = 5", False),
    ("2 * 2 = 2 + 2", True),
    ("3 * 2 = 5", False),
    ("E x. x + x = 4", True),
    ("E x. x + x = 7", False),
    ("E x. x * x = 4", True),
    ("E x. (x + 1 = 3 & x * x = 3)", False),
    ("E x. (x + x = 6 & x * x = 9)", True),
    ("E x. 3 * x = 6", True),
    ("E x. x + 2 = 1", False),
    ("E x. (x + x = x & !x = 0)", False),
    ("E x. (!x = 0 & x + x = x * x)", True),
    ("E x. E y. (x + y = 5 & x * y = 6)", True),
    ("E x. (x + 3 = 5 & 2 * x = 4)", True),
    ("A x. x + 0 = x", True),
    ("A x. (x + 1 = 1 -> x = 0)", True),
    ("A x. (x + x = 0 -> x = 0)", True),
    ("A x. A y. x + y = y + x", True),
]

CORPUS_BOUND = 8


def bounded_arith_eval(f: Formula, assignment: Optional[Mapping[str, Any]] = None,
                       bound: int = CORPUS_BOUND) -> bool:
    """Truth of an arithmetic formula with every quantifier ranging over 0..bound."""
    return evaluate(NaturalNumbers(), f, dict(assignment or {}), bound, Mode.EXHAUSTIVE)


def corpus() -> list[Formula]:
    signature = Signature.arithmetic()
    return [parse(text, signature) for text, _ in CORPUS]
