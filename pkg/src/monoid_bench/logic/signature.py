from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from monoid_bench.logic.formula import (
    ONE, And, Concat, Equal, Exists, Forall, Formula, Implies, Not, Num, Or, Plus,
    Pred, Term, Times, Var, WordConst, subformulas,
)
from monoid_bench.models.words import Alphabet


class SortError(ValueError):
    """A term or atom uses a symbol outside the signature."""


class SignatureKind(str, Enum):
    MONOID = "monoid"
    ARITHMETIC = "arithmetic"
    LISTS = "lists"


# Relations of the list superstructure: sort tests, position, length, concatenation.
LIST_RELATIONS = {"Seq": 1, "Nat": 1, "Pos": 3, "Len": 2, "Cat": 3}
# Coding predicates decided on codes by the arithmetic structure.
CODE_RELATIONS = {"IsCode": 1, "IsWordCode": 2, "CatCode": 3, "PosCode": 3, "LenCode": 2}


@dataclass(frozen=True)
class Signature:
    kind: SignatureKind
    alphabet: Optional[Alphabet] = None

    @classmethod
    def monoid(cls, alphabet: Alphabet) -> Signature:
        return cls(SignatureKind.MONOID, alphabet)

    @classmethod
    def arithmetic(cls) -> Signature:
        return cls(SignatureKind.ARITHMETIC)

    @classmethod
    def lists(cls) -> Signature:
        return cls(SignatureKind.LISTS)

    @property
    def relations(self) -> dict[str, int]:
        if self.kind is SignatureKind.ARITHMETIC:
            return CODE_RELATIONS
        if self.kind is SignatureKind.LISTS:
            return LIST_RELATIONS
        return {}

    def __str__(self) -> str:
        if self.kind is SignatureKind.MONOID and self.alphabet is not None:
            return f"monoid({self.alphabet})"
        return self.kind.value


def apply_signature(f: Formula, signature: Signature) -> Formula:
    """Resolve the numeral 1 for the signature and reject foreign symbols."""
    if isinstance(f, Equal):
        return Equal(_term(f.left, signature), _term(f.right, signature))
    if isinstance(f, Pred):
        arity = signature.relations.get(f.name)
        if arity is None:
            raise SortError(f"Relation {f.name} is not in the {signature} signature")
        if arity != len(f.args):
            raise SortError(f"Relation {f.name} takes {arity} arguments, got {len(f.args)}")
        return Pred(f.name, tuple(_term(a, signature) for a in f.args))
    if isinstance(f, Not):
        return Not(apply_signature(f.body, signature))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(apply_signature(f.left, signature), apply_signature(f.right, signature))
    if isinstance(f, (Exists, Forall)):
        return type(f)(f.var, apply_signature(f.body, signature))
    raise TypeError(f"Not a formula: {f!r}")


def _term(term: Term, signature: Signature) -> Term:
    kind = signature.kind
    if isinstance(term, Var):
        return term
    if kind is SignatureKind.MONOID:
        if isinstance(term, Num):
            if term.value != 1:
                raise SortError(f"Numeral {term.value} is not a monoid term{_at(term)}")
            return WordConst((), term.pos)
        if isinstance(term, (Plus, Times)):
            raise SortError(f"Arithmetic operation in a monoid formula: {term!r}")
        if isinstance(term, WordConst):
            assert signature.alphabet is not None
            for name in term.letters:
                if name not in signature.alphabet:
                    raise SortError(
                        f"Generator {name!r} is not in alphabet {signature.alphabet}{_at(term)}")
            return term
        assert isinstance(term, Concat)
        return Concat(tuple(_term(p, signature) for p in term.parts))
    if isinstance(term, WordConst):
        if term == ONE and kind is SignatureKind.ARITHMETIC:
            return Num(1, term.pos)
        raise SortError(f"Word constant in a {kind.value} formula{_at(term)}")
    if isinstance(term, Concat):
        raise SortError(f"Concatenation in a {kind.value} formula")
    if kind is SignatureKind.LISTS and not isinstance(term, Num):
        raise SortError("List formulas take variables and numerals only")
    if isinstance(term, Num):
        return term
    return type(term)(_term(term.left, signature), _term(term.right, signature))


def _at(term: Term) -> str:
    pos = getattr(term, "pos", None)
    return f" at line {pos.line}, column {pos.column}" if pos is not None else ""


def infer_signature(f: Formula, alphabet: Optional[Alphabet] = None) -> Signature:
    """Arithmetic when the formula uses +, * or numerals other than 1; lists when it uses
    a list relation; monoid otherwise."""
    def terms(g: Formula) -> list[Term]:
        if isinstance(g, Equal):
            return [g.left, g.right]
        if isinstance(g, Pred):
            return list(g.args)
        return []

    def arithmetic_term(t: Term) -> bool:
        if isinstance(t, (Plus, Times)):
            return True
        if isinstance(t, Num):
            return t.value != 1
        if isinstance(t, Concat):
            return any(arithmetic_term(p) for p in t.parts)
        return False

    for g in subformulas(f):
        if isinstance(g, Pred):
            if g.name in LIST_RELATIONS:
                return Signature.lists()
            return Signature.arithmetic()
        if any(arithmetic_term(t) for t in terms(g)):
            return Signature.arithmetic()
    if alphabet is None:
        letters: list[str] = []
        for g in subformulas(f):
            for t in terms(g):
                letters.extend(_letters(t))
        names = tuple(dict.fromkeys(letters)) or ("x1", "x2")
        alphabet = Alphabet(names)
    return Signature.monoid(alphabet)


def _letters(term: Term) -> list[str]:
    if isinstance(term, WordConst):
        return list(term.letters)
    if isinstance(term, Concat):
        return [name for p in term.parts for name in _letters(p)]
    return []
