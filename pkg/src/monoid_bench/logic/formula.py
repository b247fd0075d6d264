"""First-order terms and formulas over the monoid and arithmetic signatures."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union


@dataclass(frozen=True)
class Position:
    line: int
    column: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: Optional[Position] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class WordConst:
    """A word constant; the empty letter tuple is the identity."""
    letters: tuple[str, ...]
    pos: Optional[Position] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Concat:
    parts: tuple[Term, ...]


@dataclass(frozen=True)
class Num:
    value: int
    pos: Optional[Position] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Plus:
    left: Term
    right: Term


@dataclass(frozen=True)
class Times:
    left: Term
    right: Term


Term = Union[Var, WordConst, Concat, Num, Plus, Times]


@dataclass(frozen=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True)
class Pred:
    """Atom of a named relation interpreted by the structure (e.g. CatCode(a, b, c))."""
    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


Formula = Union[Equal, Pred, Not, And, Or, Implies, Exists, Forall]
Quantifier = Union[Exists, Forall]

ONE = WordConst(())
BOTTOM = Not(Equal(ONE, ONE))


def var(name: str) -> Var:
    return Var(name)


def const(*letters: str) -> WordConst:
    return WordConst(tuple(letters))


def cat(*terms: Term) -> Term:
    """Concatenation with nested Concat nodes flattened."""
    parts: list[Term] = []
    for term in terms:
        if isinstance(term, Concat):
            parts.extend(term.parts)
        else:
            parts.append(term)
    if not parts:
        return ONE
    if len(parts) == 1:
        return parts[0]
    return Concat(tuple(parts))


def power(term: Term, exponent: int) -> Term:
    if exponent < 0:
        raise ValueError("Exponent must be non-negative")
    if isinstance(term, WordConst):
        return WordConst(term.letters * exponent)
    return cat(*([term] * exponent))


def eq(left: Term, right: Term) -> Equal:
    return Equal(left, right)


def neq(left: Term, right: Term) -> Not:
    return Not(Equal(left, right))


def conj(*formulas: Formula) -> Formula:
    """Right-nested conjunction; the empty conjunction is 1 = 1."""
    if not formulas:
        return Equal(ONE, ONE)
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = And(f, result)
    return result


def disj(*formulas: Formula) -> Formula:
    if not formulas:
        return BOTTOM
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = Or(f, result)
    return result


def exists(names: Union[str, Iterable[str]], body: Formula) -> Formula:
    if isinstance(names, str):
        names = [names]
    for name in reversed(list(names)):
        body = Exists(name, body)
    return body


def forall(names: Union[str, Iterable[str]], body: Formula) -> Formula:
    if isinstance(names, str):
        names = [names]
    for name in reversed(list(names)):
        body = Forall(name, body)
    return body


def term_vars(term: Term) -> set[str]:
    if isinstance(term, Var):
        return {term.name}
    if isinstance(term, (WordConst, Num)):
        return set()
    if isinstance(term, Concat):
        result: set[str] = set()
        for part in term.parts:
            result |= term_vars(part)
        return result
    return term_vars(term.left) | term_vars(term.right)


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, Equal):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Pred):
        result: set[str] = set()
        for arg in f.args:
            result |= term_vars(arg)
        return result
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def all_vars(f: Formula) -> set[str]:
    """Free and bound variable names."""
    if isinstance(f, (Equal, Pred)):
        return free_vars(f)
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return all_vars(f.left) | all_vars(f.right)
    return all_vars(f.body) | {f.var}


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, (And, Or, Implies)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, (Exists, Forall)):
        yield from subformulas(f.body)


def quantifier_count(f: Formula) -> int:
    return sum(1 for g in subformulas(f) if isinstance(g, (Exists, Forall)))


def has_quantifier(f: Formula) -> bool:
    return any(isinstance(g, (Exists, Forall)) for g in subformulas(f))


def term_to_text(term: Term) -> str:
    if isinstance(term, Var):
        return term.name
    if isinstance(term, WordConst):
        return "'" + ".".join(term.letters) + "'" if term.letters else "1"
    if isinstance(term, Num):
        return str(term.value)
    if isinstance(term, Concat):
        return ".".join(_concat_operand(part) for part in term.parts)
    if isinstance(term, Plus):
        return f"{term_to_text(term.left)} + {_operand(term.right, Plus)}"
    return f"{_operand(term.left, Plus)} * {_operand(term.right, (Plus, Times))}"


def _operand(term: Term, wrap: Union[type, tuple[type, ...]]) -> str:
    text = term_to_text(term)
    return f"({text})" if isinstance(term, wrap) else text


def _concat_operand(term: Term) -> str:
    return _operand(term, (Plus, Times, Concat))


def to_text(f: Formula) -> str:
    """Render in the workbench grammar; parse(to_text(f)) == f."""
    if isinstance(f, Equal):
        return f"{term_to_text(f.left)} = {term_to_text(f.right)}"
    if isinstance(f, Pred):
        return f"{f.name}({', '.join(term_to_text(a) for a in f.args)})"
    if isinstance(f, Not):
        return f"!{to_text(f.body)}"
    if isinstance(f, And):
        return f"({to_text(f.left)} & {to_text(f.right)})"
    if isinstance(f, Or):
        return f"({to_text(f.left)} | {to_text(f.right)})"
    if isinstance(f, Implies):
        return f"({to_text(f.left)} -> {to_text(f.right)})"
    letter = "E" if isinstance(f, Exists) else "A"
    return f"{letter} {f.var}. {to_text(f.body)}"
