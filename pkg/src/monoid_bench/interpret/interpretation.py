"""Interpretations of one structure in another: the defining formulas, executable element
coders, formula translation, and composition."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.gadgets.base import FormulaContext
from monoid_bench.logic.formula import (
    And, Concat, Equal, Exists, Forall, Formula, Implies, Not, Num, Or, Plus, Pred, Term,
    Times, Var, WordConst, all_vars, conj, eq, exists, forall, free_vars, term_vars,
)
from monoid_bench.logic.signature import Signature, SignatureKind, apply_signature
from monoid_bench.models.base_model import Structure
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.words import Word

logger = logging.getLogger(__name__)

Group = Sequence[Term]
DomainBuilder = Callable[[FormulaContext, Group], Formula]
EquivalenceBuilder = Callable[[FormulaContext, Group, Group], Formula]
OperationBuilder = Callable[[FormulaContext, Sequence[Group], Group], Formula]
RelationBuilder = Callable[[FormulaContext, Sequence[Group]], Formula]
ConstantBuilder = Callable[[FormulaContext, Any, Group], Formula]

# Source operation symbols: arithmetic + and *, monoid concatenation.
PLUS, TIMES, CONCAT = "+", "*", "."


class TranslationError(ValueError):
    """A source symbol has no defining formula in the interpretation."""


class SignatureMismatchError(ValueError):
    """Interpretations whose signatures do not chain."""


@dataclass
class Interpretation:
    """
    A source structure interpreted in a target structure.

    Elements of the source are represented by `dimension`-tuples of target elements. The
    builders produce target formulas over given target terms; `encode` and `decode` map
    between source elements and representing tuples.
    """
    name: str
    source: Structure
    target: Structure
    dimension: int
    domain: DomainBuilder
    equivalence: EquivalenceBuilder
    operations: dict[str, OperationBuilder]
    relations: dict[str, RelationBuilder]
    constant: ConstantBuilder
    encode: Callable[[Any], tuple[Any, ...]]
    decode: Callable[[Sequence[Any]], Any]
    description: str = ""

    @property
    def source_signature(self) -> Signature:
        return self.source.signature

    @property
    def target_signature(self) -> Signature:
        return self.target.signature

    def operation(self, symbol: str) -> OperationBuilder:
        try:
            return self.operations[symbol]
        except KeyError:
            raise TranslationError(
                f"Operation {symbol} has no translation in {self.name}") from None

    def relation(self, name: str) -> RelationBuilder:
        try:
            return self.relations[name]
        except KeyError:
            raise TranslationError(
                f"Relation {name} has no translation in {self.name}") from None

    def target_bound(self, source_bound: int) -> int:
        """Largest size of a representing element over the source domain up to the bound."""
        sizes = [self.target.size(c) for v in self.source.domain(source_bound)
                 for c in self.encode(v)]
        return max(sizes, default=0)


@dataclass
class Translation:
    formula: Formula
    hints: dict[str, WitnessHint]
    variables: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def encode_assignment(self, interpretation: Interpretation,
                          assignment: Mapping[str, Any]) -> dict[str, Any]:
        """Target assignment representing a source assignment of the free variables."""
        result: dict[str, Any] = {}
        for name, targets in self.variables.items():
            result.update(zip(targets, interpretation.encode(assignment[name])))
        return result


def _constant_value(term: Term, source: Structure) -> Any:
    if isinstance(term, Num):
        return term.value
    assert isinstance(term, WordConst)
    if isinstance(source, MonoidModel):
        return Word(term.letters, source.alphabet)
    raise TranslationError(f"Word constant in a {source.signature} formula")


class _Translator:
    def __init__(self, interpretation: Interpretation, ctx: FormulaContext,
                 source_hints: Mapping[str, WitnessHint]):
        self.i = interpretation
        self.ctx = ctx
        self.source_hints = source_hints

    def bind(self, name: str) -> tuple[str, ...]:
        if self.i.dimension == 1:
            return (self.ctx.names.claim(name),)
        return tuple(self.ctx.fresh(name) for _ in range(self.i.dimension))

    # -- terms ------------------------------------------------------------------------

    def term(self, t: Term, env: Mapping[str, Group], names: list[str],
             defs: list[Formula]) -> Group:
        if isinstance(t, Var):
            return env[t.name]
        if isinstance(t, (Num, WordConst)):
            value = _constant_value(t, self.i.source)
            us = self._results("c", t, env, names)
            defs.append(self.i.constant(self.ctx, value, us))
            return us
        if isinstance(t, Concat):
            builder = self.i.operation(CONCAT)
            whole: Term = t.parts[0]
            acc = self.term(whole, env, names, defs)
            for part in t.parts[1:]:
                args = [acc, self.term(part, env, names, defs)]
                whole = Concat((whole, part))
                acc = self._results("u", whole, env, names)
                defs.append(builder(self.ctx, args, acc))
            return acc
        if isinstance(t, (Plus, Times)):
            symbol = PLUS if isinstance(t, Plus) else TIMES
            return self._operation(symbol, t.left, t.right, t, env, names, defs)
        raise TypeError(f"Not a term: {t!r}")

    def _operation(self, symbol: str, left: Term, right: Term, whole: Term,
                   env: Mapping[str, Group], names: list[str], defs: list[Formula]) -> Group:
        builder = self.i.operation(symbol)
        args = [self.term(left, env, names, defs), self.term(right, env, names, defs)]
        us = self._results("u", whole, env, names)
        defs.append(builder(self.ctx, args, us))
        return us

    def _results(self, base: str, t: Term, env: Mapping[str, Group],
                 names: list[str]) -> tuple[Var, ...]:
        us = tuple(self.ctx.var(base) for _ in range(self.i.dimension))
        for index, u in enumerate(us):
            self.ctx.hint(u.name, self._value_hint(t, env, index))
        names.extend(u.name for u in us)
        return us

    def _value_hint(self, t: Term, env: Mapping[str, Group], index: int) -> WitnessHint:
        i = self.i
        groups = {v: tuple(env[v]) for v in term_vars(t)}

        def hint(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
            try:
                source_a = {v: i.decode([structure.evaluate_term(x, a) for x in group])
                            for v, group in groups.items()}
                value = i.source.evaluate_term(t, source_a)
                return [i.encode(value)[index]]
            except (KeyError, ValueError):
                return []
        return hint

    # -- formulas ---------------------------------------------------------------------

    def formula(self, f: Formula, env: dict[str, Group]) -> Formula:
        if isinstance(f, Equal):
            names: list[str] = []
            defs: list[Formula] = []
            left = self.term(f.left, env, names, defs)
            right = self.term(f.right, env, names, defs)
            return exists(names, conj(self.i.equivalence(self.ctx, left, right), *defs))
        if isinstance(f, Pred):
            names, defs = [], []
            args = [self.term(a, env, names, defs) for a in f.args]
            builder = self.i.relation(f.name)
            return exists(names, conj(builder(self.ctx, args), *defs))
        if isinstance(f, Not):
            return Not(self.formula(f.body, env))
        if isinstance(f, (And, Or, Implies)):
            return type(f)(self.formula(f.left, env), self.formula(f.right, env))
        assert isinstance(f, (Exists, Forall))
        targets = self.bind(f.var)
        group = tuple(Var(n) for n in targets)
        self._lift_hint(f.var, targets, env)
        inner = dict(env)
        inner[f.var] = group
        body = self.formula(f.body, inner)
        domain = self.i.domain(self.ctx, group)
        if isinstance(f, Exists):
            return exists(targets, conj(domain, body))
        return forall(targets, Implies(domain, body))

    def _lift_hint(self, name: str, targets: tuple[str, ...], env: Mapping[str, Group]) -> None:
        source_hint = self.source_hints.get(name)
        if source_hint is None:
            return
        i = self.i
        groups = {v: tuple(g) for v, g in env.items()}

        for index, target in enumerate(targets):
            def hint(a: Mapping[str, Any], structure: Structure, index: int = index) -> Iterable[Any]:
                source_a: dict[str, Any] = {}
                for v, group in groups.items():
                    try:
                        source_a[v] = i.decode([structure.evaluate_term(x, a) for x in group])
                    except (KeyError, ValueError):
                        continue
                try:
                    return [i.encode(value)[index] for value in source_hint(source_a, i.source)]
                except (KeyError, ValueError):
                    return []
            self.ctx.hint(target, hint)


def translate(psi: Formula, interpretation: Interpretation,
              ctx: Optional[FormulaContext] = None,
              env: Optional[Mapping[str, Group]] = None,
              source_hints: Optional[Mapping[str, WitnessHint]] = None) -> Translation:
    """
    Translate a source formula into the target signature.

    Parameters:
    -----------
    psi : Formula
        Formula over the source signature
    interpretation : Interpretation
        The interpretation to translate through
    ctx : FormulaContext, optional
        Name supply and hint collector to share with an enclosing construction
    env : Mapping[str, Sequence[Term]], optional
        Target terms for free variables; free variables without one get fresh target
        variables
    source_hints : Mapping[str, WitnessHint], optional
        Witness hints for bound source variables, lifted to their target variables

    Returns:
    --------
    Translation
        Quantifiers relativized to the domain formula, equality replaced by the
        equivalence formula, and every compound term or constant bound to target
        variables defined by its operation or constant formula
    """
    psi = apply_signature(psi, interpretation.source_signature)
    if ctx is None:
        ctx = FormulaContext(all_vars(psi))
    translator = _Translator(interpretation, ctx, source_hints or {})
    bindings: dict[str, Group] = dict(env or {})
    variables: dict[str, tuple[str, ...]] = {}
    for name in sorted(free_vars(psi)):
        if name not in bindings:
            targets = translator.bind(name)
            variables[name] = targets
            bindings[name] = tuple(Var(n) for n in targets)
    formula = translator.formula(psi, bindings)
    logger.debug("Translated through %s: %d free variables", interpretation.name, len(variables))
    return Translation(formula, dict(ctx.hints), variables)


def identity_interpretation(structure: Structure) -> Interpretation:
    """The structure in itself, every symbol standing for itself."""
    signature = structure.signature
    operations: dict[str, OperationBuilder] = {}
    if signature.kind is SignatureKind.ARITHMETIC:
        operations[PLUS] = lambda ctx, args, r: eq(Plus(args[0][0], args[1][0]), r[0])
        operations[TIMES] = lambda ctx, args, r: eq(Times(args[0][0], args[1][0]), r[0])
    elif signature.kind is SignatureKind.MONOID:
        operations[CONCAT] = lambda ctx, args, r: eq(Concat((args[0][0], args[1][0])), r[0])
    relations: dict[str, RelationBuilder] = {
        name: (lambda ctx, args, name=name: Pred(name, tuple(g[0] for g in args)))
        for name in signature.relations}

    def constant(ctx: FormulaContext, value: Any, xs: Group) -> Formula:
        if isinstance(value, Word):
            return eq(xs[0], WordConst(value.letters))
        return eq(xs[0], Num(int(value)))

    return Interpretation(
        name=f"identity({structure})", source=structure, target=structure, dimension=1,
        domain=lambda ctx, xs: eq(xs[0], xs[0]),
        equivalence=lambda ctx, xs, ys: eq(xs[0], ys[0]),
        operations=operations, relations=relations, constant=constant,
        encode=lambda v: (v,), decode=lambda t: t[0],
        description="every symbol stands for itself")


def _chunks(terms: Group, size: int) -> list[Group]:
    return [tuple(terms[k:k + size]) for k in range(0, len(terms), size)]


def compose(first: Interpretation, second: Interpretation) -> Interpretation:
    """
    Interpret the source of `first` in the target of `second`, given `first` (A in B) and
    `second` (B in C). Every formula of `first` is translated through `second`.
    """
    if first.target_signature != second.source_signature:
        raise SignatureMismatchError(
            f"Cannot compose {first.name} ({first.target_signature}) with "
            f"{second.name} ({second.source_signature})")
    n = second.dimension

    def through(ctx: FormulaContext, groups: Sequence[Group],
                build: Callable[[FormulaContext, list[list[Var]]], Formula],
                shape: Sequence[int]) -> Formula:
        inner = ctx.child()
        middle = [[inner.var("b") for _ in range(size)] for size in shape]
        f = build(inner, middle)
        flat = [v for block in middle for v in block]
        env = {v.name: group for v, group in zip(flat, groups)}
        result = translate(f, second, ctx, env, inner.hints)
        return result.formula

    def split(terms: Group) -> list[Group]:
        return _chunks(terms, n)

    def domain(ctx: FormulaContext, xs: Group) -> Formula:
        groups = split(xs)
        outer = through(ctx, groups, lambda c, m: first.domain(c, m[0]), [first.dimension])
        return conj(*(second.domain(ctx, g) for g in groups), outer)

    def equivalence(ctx: FormulaContext, xs: Group, ys: Group) -> Formula:
        return through(ctx, split(xs) + split(ys),
                       lambda c, m: first.equivalence(c, m[0], m[1]),
                       [first.dimension, first.dimension])

    def operation(symbol: str) -> OperationBuilder:
        def build(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
            groups = [g for arg in args for g in split(arg)] + split(result)
            shape = [first.dimension] * (len(args) + 1)
            return through(ctx, groups,
                           lambda c, m: first.operation(symbol)(c, m[:-1], m[-1]), shape)
        return build

    def relation(name: str) -> RelationBuilder:
        def build(ctx: FormulaContext, args: Sequence[Group]) -> Formula:
            groups = [g for arg in args for g in split(arg)]
            return through(ctx, groups, lambda c, m: first.relation(name)(c, m),
                           [first.dimension] * len(args))
        return build

    def constant(ctx: FormulaContext, value: Any, xs: Group) -> Formula:
        return through(ctx, split(xs), lambda c, m: first.constant(c, value, m[0]),
                       [first.dimension])

    def encode(value: Any) -> tuple[Any, ...]:
        return tuple(c for b in first.encode(value) for c in second.encode(b))

    def decode(values: Sequence[Any]) -> Any:
        return first.decode([second.decode(g) for g in _chunks(tuple(values), n)])

    return Interpretation(
        name=f"{first.name}+{second.name}", source=first.source, target=second.target,
        dimension=first.dimension * n, domain=domain, equivalence=equivalence,
        operations={symbol: operation(symbol) for symbol in first.operations},
        relations={name: relation(name) for name in first.relations},
        constant=constant, encode=encode, decode=decode,
        description=f"{first.name} followed by {second.name}")
