from __future__ import annotations

import re
from typing import Optional

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from monoid_bench.logic.formula import (
    And, Equal, Exists, Forall, Formula, Implies, Not, Num, Or, Plus, Position, Pred,
    Term, Times, Var, WordConst, cat,
)
from monoid_bench.logic.signature import Signature, apply_signature, infer_signature

GRAMMAR = r"""
    ?start: formula

    ?formula: "A" VAR "." formula              -> forall
            | "E" VAR "." formula              -> exists
            | "!" formula                      -> negation
            | "(" formula BINOP formula ")"    -> binary
            | sum "=" sum                      -> equal
            | PRED "(" sum ("," sum)* ")"      -> relation

    ?sum: prod
        | sum "+" prod                         -> plus
    ?prod: chain
        | prod "*" chain                       -> times
    ?chain: atom
        | chain "." atom                       -> concat
    ?atom: VAR                                 -> variable
         | WORD                                -> word
         | NUMBER                              -> number
         | "(" sum ")"

    BINOP: "&" | "|" | "->"
    VAR: /[a-z][A-Za-z0-9_]*/
    PRED: /[A-Z][A-Za-z0-9_]+/
    WORD: /'[A-Za-z][A-Za-z0-9_]*(\.[A-Za-z][A-Za-z0-9_]*)*'/
    NUMBER: /[0-9]+/

    %import common.WS
    %ignore WS
"""


_QUOTED = re.compile(r"'[^']*'")
_UPPER_NAME = re.compile(r"\b([A-Z][A-Za-z0-9_]*)\b(?!\s*\()")


class FormulaSyntaxError(ValueError):
    """Formula text outside the grammar, with a 1-based location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


def _pos(token: Token) -> Position:
    return Position(token.line or 1, token.column or 1)


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """Turns the parse tree into formula dataclasses."""

    def forall(self, name: Token, body: Formula) -> Formula:
        return Forall(str(name), body)

    def exists(self, name: Token, body: Formula) -> Formula:
        return Exists(str(name), body)

    def negation(self, body: Formula) -> Formula:
        return Not(body)

    def binary(self, left: Formula, op: Token, right: Formula) -> Formula:
        if op == "&":
            return And(left, right)
        if op == "|":
            return Or(left, right)
        return Implies(left, right)

    def equal(self, left: Term, right: Term) -> Formula:
        return Equal(left, right)

    def relation(self, name: Token, *args: Term) -> Formula:
        return Pred(str(name), tuple(args))

    def plus(self, left: Term, right: Term) -> Term:
        return Plus(left, right)

    def times(self, left: Term, right: Term) -> Term:
        return Times(left, right)

    def concat(self, left: Term, right: Term) -> Term:
        return cat(left, right)

    def variable(self, token: Token) -> Term:
        return Var(str(token), _pos(token))

    def word(self, token: Token) -> Term:
        return WordConst(tuple(str(token)[1:-1].split(".")), _pos(token))

    def number(self, token: Token) -> Term:
        return Num(int(token), _pos(token))


def _capitalised_names(text: str) -> list[str]:
    """Capitalised identifiers outside word constants that are neither quantifiers nor
    predicate applications."""
    return [name for name in _UPPER_NAME.findall(_QUOTED.sub(" ", text)) if name not in ("A", "E")]


_parser = Lark(GRAMMAR, parser="earley", start="start")


def parse(text: str, signature: Optional[Signature] = None) -> Formula:
    """Parse formula text.

    Parameters:
    -----------
    text : str
        Formula in the workbench grammar, e.g. "A y. A z. (x = y.z -> (y = 1 | z = 1))"
        Variables start with a lowercase letter; capitalised names are predicates
    signature : Signature, optional
        Signature to check against; inferred from the symbols used when omitted

    Returns:
    --------
    Formula
        The AST, with "1" resolved to the identity (monoid) or the numeral (arithmetic)
    """
    try:
        tree = _parser.parse(text)
        formula = FormulaBuilder().transform(tree)
    except UnexpectedEOF:
        lines = text.splitlines() or [""]
        raise FormulaSyntaxError("Unexpected end of formula", len(lines), len(lines[-1]) + 1) from None
    except UnexpectedInput as e:
        line = e.line if e.line and e.line > 0 else 1
        column = e.column if e.column and e.column > 0 else 1
        message = "Unexpected input"
        names = _capitalised_names(text)
        if names:
            message += f" (variables start with a lowercase letter, got {names[0]!r})"
        raise FormulaSyntaxError(message, line, column) from None
    except VisitError as e:
        raise FormulaSyntaxError(f"Invalid formula: {e.orig_exc}", 1, 1) from None
    if signature is None:
        signature = infer_signature(formula)
    return apply_signature(formula, signature)
