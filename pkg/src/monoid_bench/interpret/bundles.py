"""The named interpretations between the naturals, the list superstructure and monoids."""
from __future__ import annotations

from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from monoid_bench.arith.coding import (
    decode_tuple, decode_word, encode_tuple, monomial_to_tuple, tuple_to_monomial, word_code,
)
from monoid_bench.arith.superstructure import ListSuperstructure
from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.gadgets.base import FormulaContext, Params, exponent
from monoid_bench.gadgets.catalogue import params_for
from monoid_bench.gadgets.common import basis, centralizer, in_p1
from monoid_bench.gadgets.mult import mult_formula
from monoid_bench.gadgets.trans import trans_noparam_formula
from monoid_bench.gadgets.tuples import (
    concat_formula, length_formula, position_formula, read_tuple_word, tuple_formula,
    tuple_word,
)
from monoid_bench.interpret.interpretation import (
    CONCAT, PLUS, TIMES, Group, Interpretation, RelationBuilder,
)
from monoid_bench.logic.formula import (
    ONE, Formula, Implies, Num, Pred, Term, Var, cat, conj, disj, eq, exists, forall, neq,
    power,
)
from monoid_bench.models.base_model import ModelKindError, Structure
from monoid_bench.models.free_monoid import FreeMonoid
from monoid_bench.models.monoid_factory import create_monoid
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.naturals import NaturalNumbers
from monoid_bench.models.trace_monoid import TraceMonoid
from monoid_bench.models.words import Word


class UnknownInterpretationError(ValueError):
    """No interpretation of that name."""


DEFAULT_FREE = "free:x1,x2"
DEFAULT_TRACE = "trace:x1,x2,x3;edges=x1-x3"


# -- the naturals in a monoid, with the parameters x1, x2 -------------------------------

def nat_in_monoid(model: MonoidModel, params: Optional[Params] = None,
                  name: str = "nat-in-monoid") -> Interpretation:
    """N as the powers of p1: addition is concatenation, multiplication the gadget formula."""
    params = params or params_for(model)
    p1, _ = params.values({}, model)

    def add(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        return eq(cat(args[0][0], args[1][0]), result[0])

    def times(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        return mult_formula(ctx, args[0][0], args[1][0], result[0], params)

    def decode(values: Sequence[Any]) -> int:
        k = exponent(model, values[0], p1)
        if k is None:
            raise ValueError(f"{values[0]} is not a power of {p1}")
        return k

    return Interpretation(
        name=name, source=NaturalNumbers(), target=model, dimension=1,
        domain=lambda ctx, xs: in_p1(ctx, params, xs[0]),
        equivalence=lambda ctx, xs, ys: eq(xs[0], ys[0]),
        operations={PLUS: add, TIMES: times}, relations={},
        constant=lambda ctx, value, xs: eq(xs[0], power(params.p1, int(value))),
        encode=lambda n: (model.normal_form(p1 ** int(n)),), decode=decode,
        description=f"N as the powers of {p1} in {model.spec()}")


def nat_in_free(model: Optional[MonoidModel] = None) -> Interpretation:
    model = model or create_monoid(DEFAULT_FREE)
    if not isinstance(model, FreeMonoid):
        raise ModelKindError(f"nat-in-free needs a free monoid, got {model.spec()}")
    return nat_in_monoid(model, name="nat-in-free")


def nat_in_trace(model: Optional[MonoidModel] = None) -> Interpretation:
    model = model or create_monoid(DEFAULT_TRACE)
    if not isinstance(model, TraceMonoid):
        raise ModelKindError(f"nat-in-trace needs a trace monoid, got {model.spec()}")
    return nat_in_monoid(model, name="nat-in-trace")


# -- the naturals in a free monoid without parameters ------------------------------------

def _letter_power(value: Word) -> Optional[int]:
    """k when value is the k-th power of a single letter."""
    if len(set(value.letters)) > 1:
        return None
    return len(value)


def _representative_hint(x: Term, g: str) -> WitnessHint:
    def hint(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
        k = _letter_power(structure.evaluate_term(x, a))
        if k is None or g not in a:
            return []
        return [a[g] ** k]
    return hint


def nat_in_free_noparam(model: Optional[MonoidModel] = None) -> Interpretation:
    """N as the powers of all basis letters, x_i^k identified with x_j^k."""
    model = model or create_monoid(DEFAULT_FREE)
    if not isinstance(model, FreeMonoid) or len(model.alphabet) < 2:
        raise ModelKindError("nat-in-free-noparam needs a free monoid of rank at least 2")
    gens = model.alphabet.generators()

    def letters(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
        return gens

    def domain(ctx: FormulaContext, xs: Group) -> Formula:
        g = ctx.var("g")
        return disj(eq(xs[0], ONE), exists(g.name, conj(basis(ctx, g), centralizer(g, xs[0]))))

    def representatives(ctx: FormulaContext, g: Var, terms: Sequence[Term]) -> tuple[list[Var], list[Formula]]:
        reps = [ctx.var("r") for _ in terms]
        conditions: list[Formula] = []
        for rep, term in zip(reps, terms):
            ctx.hint(rep.name, _representative_hint(term, g.name))
            conditions += [centralizer(g, rep), trans_noparam_formula(ctx, term, rep)]
        return reps, conditions

    def add(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        g = ctx.var("g")
        ctx.hint(g.name, letters)
        (a, b, c), conditions = representatives(ctx, g, [args[0][0], args[1][0], result[0]])
        return exists([g.name, a.name, b.name, c.name],
                      conj(basis(ctx, g), *conditions, eq(cat(a, b), c)))

    def times(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        g1, g2 = ctx.var("g"), ctx.var("g")
        ctx.hint(g1.name, letters)
        ctx.hint(g2.name, letters)
        (a, b, c), conditions = representatives(ctx, g1, [args[0][0], args[1][0], result[0]])
        params = Params(g1, g2)
        return exists([g1.name, g2.name, a.name, b.name, c.name],
                      conj(basis(ctx, g1), basis(ctx, g2), neq(g1, g2), *conditions,
                           mult_formula(ctx, a, b, c, params)))

    def constant(ctx: FormulaContext, value: Any, xs: Group) -> Formula:
        k = int(value)
        if k == 0:
            return eq(xs[0], ONE)
        g = ctx.var("g")
        return exists(g.name, conj(basis(ctx, g), eq(xs[0], power(g, k))))

    def decode(values: Sequence[Any]) -> int:
        k = _letter_power(values[0])
        if k is None:
            raise ValueError(f"{values[0]} is not a power of a basis letter")
        return k

    return Interpretation(
        name="nat-in-free-noparam", source=NaturalNumbers(), target=model, dimension=1,
        domain=domain,
        equivalence=lambda ctx, xs, ys: trans_noparam_formula(ctx, xs[0], ys[0]),
        operations={PLUS: add, TIMES: times}, relations={}, constant=constant,
        encode=lambda n: (gens[0] ** int(n),), decode=decode,
        description=f"N as powers of basis letters in {model.spec()}, no parameters")


# -- monoids in N and in the list superstructure -----------------------------------------

def _free_model(model: Optional[MonoidModel]) -> FreeMonoid:
    model = model or create_monoid(DEFAULT_FREE)
    if not isinstance(model, FreeMonoid):
        raise ModelKindError(f"Monoids are coded as free monoids, got {model.spec()}")
    return model


def monoid_in_nat(model: Optional[MonoidModel] = None) -> Interpretation:
    """Words as the codes of their index tuples."""
    source = _free_model(model)
    alphabet = source.alphabet
    n = len(alphabet)

    def concat(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        return Pred("CatCode", (args[0][0], args[1][0], result[0]))

    return Interpretation(
        name="monoid-in-nat", source=source, target=NaturalNumbers(), dimension=1,
        domain=lambda ctx, xs: Pred("IsWordCode", (xs[0], Num(n))),
        equivalence=lambda ctx, xs, ys: eq(xs[0], ys[0]),
        operations={CONCAT: concat}, relations={},
        constant=lambda ctx, value, xs: eq(xs[0], Num(word_code(value))),
        encode=lambda w: (word_code(w),),
        decode=lambda values: decode_word(int(values[0]), alphabet),
        description=f"{source.spec()} as codes of index tuples in N")


def monoid_in_snn(model: Optional[MonoidModel] = None) -> Interpretation:
    """Words x_i1...x_im as the tuples (i1, ..., im) with entries in 1..|X|."""
    source = _free_model(model)
    alphabet = source.alphabet
    n = len(alphabet)

    def domain(ctx: FormulaContext, xs: Group) -> Formula:
        i, a = ctx.var("i"), ctx.var("a")
        entries = disj(*(eq(a, Num(k)) for k in range(1, n + 1)))
        return conj(Pred("Seq", (xs[0],)),
                    forall([i.name, a.name], Implies(Pred("Pos", (xs[0], i, a)), entries)))

    def concat(ctx: FormulaContext, args: Sequence[Group], result: Group) -> Formula:
        return Pred("Cat", (args[0][0], args[1][0], result[0]))

    def constant(ctx: FormulaContext, value: Any, xs: Group) -> Formula:
        t = monomial_to_tuple(value)
        return conj(Pred("Seq", (xs[0],)), Pred("Len", (xs[0], Num(len(t)))),
                    *(Pred("Pos", (xs[0], Num(j), Num(e))) for j, e in enumerate(t, start=1)))

    def decode(values: Sequence[Any]) -> Word:
        if not isinstance(values[0], tuple):
            raise ValueError(f"{values[0]} is not a tuple")
        return tuple_to_monomial(values[0], alphabet)

    return Interpretation(
        name="monoid-in-snn", source=source, target=ListSuperstructure(), dimension=1,
        domain=domain, equivalence=lambda ctx, xs, ys: eq(xs[0], ys[0]),
        operations={CONCAT: concat}, relations={}, constant=constant,
        encode=lambda w: (monomial_to_tuple(w),), decode=decode,
        description=f"{source.spec()} as the index tuples with entries in 1..{n}")


# -- the list superstructure in N and in a free monoid -----------------------------------

def snn_in_nat() -> Interpretation:
    """Pairs (sort, value): (0, k) for the natural k, (1, code) for a tuple."""
    zero, one = Num(0), Num(1)

    def relation(tags: Sequence[Num], predicate: Optional[str]) -> RelationBuilder:
        def build(ctx: FormulaContext, args: Sequence[Group]) -> Formula:
            parts = [eq(arg[0], tag) for arg, tag in zip(args, tags)]
            if predicate is not None:
                parts.append(Pred(predicate, tuple(arg[1] for arg in args)))
            return conj(*parts)
        return build

    def encode(value: Any) -> tuple[int, int]:
        if isinstance(value, tuple):
            return 1, encode_tuple(value)
        return 0, int(value)

    def decode(values: Sequence[Any]) -> Any:
        tag, value = values
        if tag == 0:
            return int(value)
        if tag == 1:
            return decode_tuple(int(value))
        raise ValueError(f"Invalid sort tag {tag}")

    return Interpretation(
        name="snn-in-nat", source=ListSuperstructure(), target=NaturalNumbers(), dimension=2,
        domain=lambda ctx, xs: disj(eq(xs[0], zero),
                                    conj(eq(xs[0], one), Pred("IsCode", (xs[1],)))),
        equivalence=lambda ctx, xs, ys: conj(eq(xs[0], ys[0]), eq(xs[1], ys[1])),
        operations={},
        relations={
            "Nat": relation([zero], None),
            "Seq": relation([one], None),
            "Pos": relation([one, zero, zero], "PosCode"),
            "Len": relation([one, zero], "LenCode"),
            "Cat": relation([one, one, one], "CatCode"),
        },
        constant=lambda ctx, value, xs: conj(eq(xs[0], zero), eq(xs[1], Num(int(value)))),
        encode=encode, decode=decode,
        description="tuples as (1, code) and naturals as (0, value) in N")


def snn_in_free(model: Optional[MonoidModel] = None) -> Interpretation:
    """Naturals as powers of x1, nonempty tuples as tuple words, the empty tuple as x2."""
    source = ListSuperstructure()
    model = _free_model(model)
    params = params_for(model)
    p1, p2 = params.values({}, model)
    marker = params.p2

    def seq(ctx: FormulaContext, x: Term) -> Formula:
        return disj(eq(x, marker), tuple_formula(ctx, x, params))

    def length(ctx: FormulaContext, args: Sequence[Group]) -> Formula:
        s, k = args[0][0], args[1][0]
        return disj(conj(eq(s, marker), eq(k, ONE)), length_formula(ctx, s, k, params))

    def concatenation(ctx: FormulaContext, args: Sequence[Group]) -> Formula:
        s, r, u = args[0][0], args[1][0], args[2][0]
        return disj(conj(eq(s, marker), seq(ctx, r), eq(r, u)),
                    conj(eq(r, marker), tuple_formula(ctx, s, params), eq(s, u)),
                    concat_formula(ctx, s, r, u, params))

    def encode(value: Any) -> tuple[Word]:
        if isinstance(value, tuple):
            return (tuple_word(value, p1, p2),) if value else (p2,)
        return (p1 ** int(value),)

    def decode(values: Sequence[Any]) -> Any:
        w = values[0]
        if w == p2:
            return ()
        k = exponent(model, w, p1)
        if k is not None:
            return k
        t = read_tuple_word(w, p1, p2)
        if t is None:
            raise ValueError(f"{w} represents no element of the list superstructure")
        return t

    relations: dict[str, RelationBuilder] = {
        "Nat": lambda ctx, args: in_p1(ctx, params, args[0][0]),
        "Seq": lambda ctx, args: seq(ctx, args[0][0]),
        "Pos": lambda ctx, args: position_formula(ctx, args[0][0], args[1][0], args[2][0], params),
        "Len": length,
        "Cat": concatenation,
    }
    return Interpretation(
        name="snn-in-free", source=source, target=model, dimension=1,
        domain=lambda ctx, xs: disj(in_p1(ctx, params, xs[0]), seq(ctx, xs[0])),
        equivalence=lambda ctx, xs, ys: eq(xs[0], ys[0]),
        operations={}, relations=relations,
        constant=lambda ctx, value, xs: eq(xs[0], power(params.p1, int(value))),
        encode=encode, decode=decode,
        description=f"naturals as powers of {p1} and tuples as tuple words in {model.spec()}")


BUNDLES: dict[str, Callable[[Optional[MonoidModel]], Interpretation]] = {
    "nat-in-free": nat_in_free,
    "nat-in-free-noparam": nat_in_free_noparam,
    "nat-in-trace": nat_in_trace,
    "monoid-in-nat": monoid_in_nat,
    "monoid-in-snn": monoid_in_snn,
    "snn-in-nat": lambda model: snn_in_nat(),
    "snn-in-free": snn_in_free,
}


def get_interpretation(name: str, model: Optional[MonoidModel] = None) -> Interpretation:
    """
    Build a named interpretation.

    Parameters:
    -----------
    name : str
        Bundle name
    model : MonoidModel, optional
        Monoid the bundle works in (default: the bundle's own); ModelKindError when the
        bundle cannot work in a monoid of that kind

    Returns:
    --------
    Interpretation
    """
    factory = BUNDLES.get(name)
    if factory is None:
        raise UnknownInterpretationError(
            f"Unknown interpretation: {name}. Available: {', '.join(BUNDLES)}")
    return factory(model)
