"""Named gadgets: parameter parsing, the built element, the defining formula and its
witness bound."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from monoid_bench.checker.evaluator import EvalStats, Evaluator, Mode, WitnessHint
from monoid_bench.gadgets.base import (
    FormulaContext, GadgetParameterError, Params, UnknownGadgetError,
)
from monoid_bench.gadgets.common import basis, centralizer, cyclic, in_s, letters_only
from monoid_bench.gadgets.isomorphism import (
    a_word, b_formula, decode_iso, iso_formula, iso_trace_formula, iso_word, iso_word_trace,
    relation_r,
)
from monoid_bench.gadgets.mult import mult_gadget_formula, mult_gadget_word
from monoid_bench.gadgets.orbit import orbit_formula, orbit_variables
from monoid_bench.gadgets.trans import f_word, trans_formula, trans_noparam_formula
from monoid_bench.gadgets.tuples import (
    concat_formula, length_formula, membership_formula, position_formula, shift_formula,
    shift_word, tuple_formula, tuple_word,
)
from monoid_bench.logic.formula import Exists, Formula, Term, Var, to_text
from monoid_bench.models.base_model import ModelKindError
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.trace_monoid import TraceMonoid
from monoid_bench.models.words import Word

logger = logging.getLogger(__name__)

Define = Callable[[FormulaContext, Sequence[Term], Params, MonoidModel, Sequence[str]], Formula]


@dataclass
class Built:
    """The intended element of a gadget instance and the values of its free variables."""
    word: Word
    assignment: dict[str, Word]


@dataclass
class GadgetInstance:
    name: str
    args: tuple[str, ...]
    word: Word
    assignment: dict[str, Word]
    formula: Formula
    hints: dict[str, WitnessHint]
    witness_bound: int
    stats: EvalStats = field(default_factory=EvalStats)

    @property
    def text(self) -> str:
        return to_text(self.formula)

    def holds(self, model: MonoidModel, mode: Mode = Mode.WITNESS,
              max_domain: int = 200_000) -> bool:
        """Evaluate the defining formula at the built assignment."""
        evaluator = Evaluator(model, self.witness_bound, mode, self.hints, max_domain)
        result = evaluator.evaluate(self.formula, self.assignment)
        self.stats = evaluator.stats
        return result


@dataclass(frozen=True)
class Gadget:
    name: str
    description: str
    usage: str
    variables: Callable[[Sequence[str]], tuple[str, ...]]
    define: Define
    build: Callable[[Sequence[str], MonoidModel, tuple[Word, Word]], Built]
    level: Optional[str] = None

    def instantiate(self, args: Sequence[str], model: MonoidModel,
                    terms: Optional[Sequence[Term]] = None,
                    params: Optional[Params] = None) -> GadgetInstance:
        """
        Build the element and the defining formula for one instance.

        Parameters:
        -----------
        args : Sequence[str]
            Instance parameters as given on the command line
        model : MonoidModel
            Monoid the gadget is built in
        terms : Sequence[Term], optional
            Terms for the free variables (default: variables named after the gadget's)
        params : Params, optional
            Parameter constants (default: chosen from the model)

        Returns:
        --------
        GadgetInstance
        """
        args = tuple(args)
        params = params or params_for(model)
        pair = params.values({}, model)
        built = self.build(args, model, pair)
        names = self.variables(args)
        if terms is None:
            terms = [Var(name) for name in names]
        ctx = FormulaContext(names)
        instance = ctx.finish(self.define(ctx, terms, params, model, args))
        sizes = [len(built.word)] + [len(v) for v in built.assignment.values()]
        bound = max(sizes)
        logger.debug("Instantiated %s%s with witness bound %d", self.name, list(args), bound)
        return GadgetInstance(self.name, args, built.word, built.assignment,
                              instance.formula, instance.hints, bound)


def params_for(model: MonoidModel) -> Params:
    """x1, x2 roles: the first two generators, or in a trace monoid the first
    non-commuting pair written in divisor form."""
    if len(model.alphabet) < 2:
        raise GadgetParameterError(f"Gadgets need at least two generators, got {model.alphabet}")
    if isinstance(model, TraceMonoid):
        pairs = model.non_commuting_pairs()
        if not pairs:
            raise ModelKindError(f"{model.spec()} is commutative; no parameter pair exists")
        return Params.of(pairs[0][0], pairs[0][1], divisor_form=True)
    names = model.alphabet.names
    return Params.of(names[0], names[1])


# -- parameter parsing ------------------------------------------------------------------

def _count(args: Sequence[str], expected: int, usage: str) -> None:
    if len(args) != expected:
        raise GadgetParameterError(f"Expected {expected} parameter(s): {usage}")


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise GadgetParameterError(f"Not a natural number: {text}") from None
    if value < 0:
        raise GadgetParameterError(f"Parameters must be non-negative, got {value}")
    return value


def _naturals(args: Sequence[str], expected: int, usage: str) -> list[int]:
    _count(args, expected, usage)
    return [_natural(a) for a in args]


def _tuple(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        raise GadgetParameterError("Tuple must be nonempty")
    return tuple(_natural(part) for part in text.split(","))


def _word(text: str, model: MonoidModel) -> Word:
    try:
        return model.parse_element(text)
    except ValueError as e:
        raise GadgetParameterError(str(e)) from None


def _positive(value: int, what: str) -> int:
    if value < 1:
        raise GadgetParameterError(f"{what} must be at least 1, got {value}")
    return value


def _fixed(*names: str) -> Callable[[Sequence[str]], tuple[str, ...]]:
    return lambda args: names


# -- builders ---------------------------------------------------------------------------

def _build_power(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (k,) = _naturals(args, 1, "k")
    p1 = pair[0] ** k
    return Built(p1, {"y": p1})


def _build_in_s(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    n, m = _naturals(args, 2, "n m")
    w = model.normal_form(mult_gadget_word(n, m, *pair))
    return Built(w, {"y": w})


def _build_mult(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    n, m = _naturals(args, 2, "n m")
    p1, p2 = pair
    w = model.normal_form(mult_gadget_word(n, m, p1, p2))
    return Built(w, {"x": p1 ** n, "y": p1 ** m, "w": w})


def _build_trans(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (s,) = _naturals(args, 1, "s")
    p1, p2 = pair
    w = model.normal_form(f_word(_positive(s, "s"), p1, p2))
    return Built(w, {"x": p2 ** s, "y": p1 ** s})


def _build_basis(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (i,) = _naturals(args, 1, "i")
    if not 1 <= i <= len(model.alphabet):
        raise GadgetParameterError(f"Generator index {i} out of range 1..{len(model.alphabet)}")
    g = model.alphabet.generator(model.alphabet.names[i - 1])
    return Built(g, {"x": g})


def _build_tuple(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 1, "t")
    w = tuple_word(_tuple(args[0]), *pair)
    return Built(w, {"x": w})


def _entry_index(t: tuple[int, ...], text: str) -> int:
    i = _natural(text)
    if not 1 <= i <= len(t):
        raise GadgetParameterError(f"Position {i} out of range 1..{len(t)}")
    return i


def _build_position(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 2, "t i")
    t = _tuple(args[0])
    i = _entry_index(t, args[1])
    p1 = pair[0]
    w = tuple_word(t, *pair)
    return Built(w, {"x": w, "y": p1 ** i, "z": p1 ** t[i - 1]})


def _build_in(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 2, "t i")
    t = _tuple(args[0])
    i = _entry_index(t, args[1])
    w = tuple_word(t, *pair)
    return Built(w, {"x": pair[0] ** t[i - 1], "y": w})


def _build_length(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 1, "t")
    t = _tuple(args[0])
    w = tuple_word(t, *pair)
    return Built(w, {"x": w, "y": pair[0] ** len(t)})


def _build_concat(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 2, "t1 t2")
    t1, t2 = _tuple(args[0]), _tuple(args[1])
    z = tuple_word(t1 + t2, *pair)
    return Built(z, {"x": tuple_word(t1, *pair), "y": tuple_word(t2, *pair), "z": z})


def _build_shift(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 2, "t1 t2")
    t1, t2 = _tuple(args[0]), _tuple(args[1])
    u = shift_word(t1, t2, *pair)
    return Built(u, {"x": tuple_word(t1, *pair), "y": tuple_word(t2, *pair), "u": u})


def _build_a_word(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (m,) = _naturals(args, 1, "m")
    w = a_word(_positive(m, "m"), *pair)
    return Built(w, {"x": w})


def _build_b_pair(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (m,) = _naturals(args, 1, "m")
    w = a_word(_positive(m, "m"), *pair)
    return Built(w, {"x": w, "y": pair[0] ** m})


def _build_relation_r(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    (i,) = _naturals(args, 1, "i")
    if not 1 <= i <= len(model.alphabet):
        raise GadgetParameterError(f"Generator index {i} out of range 1..{len(model.alphabet)}")
    c = model.alphabet.generator(model.alphabet.names[i - 1])
    return Built(c, {"c": c, "q": pair[0] ** i})


def _build_iso(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 1, "t")
    t = _tuple(args[0])
    z = iso_word(t, model.alphabet, *pair)
    return Built(z, {"x": tuple_word(t, *pair), "y": decode_iso(t, model.alphabet)})


def _build_iso_trace(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 1, "t")
    t = _tuple(args[0])
    z = iso_word_trace(t, model, *pair)
    x = model.normal_form(tuple_word(t, *pair))
    return Built(z, {"x": x, "y": model.normal_form(decode_iso(t, model.alphabet))})


def _build_orbit(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    if not args:
        raise GadgetParameterError("Expected at least one word")
    words = [_word(text, model) for text in args]
    names = orbit_variables(len(words))
    return Built(words[0], dict(zip(names, words)))


def _build_letters(args: Sequence[str], model: MonoidModel, pair: tuple[Word, Word]) -> Built:
    _count(args, 1, "word")
    w = _word(args[0], model)
    return Built(w, {"y": w})


# -- definitions ------------------------------------------------------------------------

def _orbit_define(ctx: FormulaContext, terms: Sequence[Term], params: Params,
                  model: MonoidModel, args: Sequence[str]) -> Formula:
    return orbit_formula(ctx, [_word(text, model) for text in args], terms)


def _a_word_define(ctx: FormulaContext, terms: Sequence[Term], params: Params,
                   model: MonoidModel, args: Sequence[str]) -> Formula:
    y = ctx.var("y")
    return Exists(y.name, b_formula(ctx, terms[0], y, params))


GADGETS: dict[str, Gadget] = {g.name: g for g in [
    Gadget("centralizer", "y commutes with x1", "k", _fixed("y"),
           lambda ctx, ts, p, m, a: centralizer(p.p1, ts[0]), _build_power, level="QF"),
    Gadget("cyclic", "x1 is the only irreducible factor of y", "k", _fixed("y"),
           lambda ctx, ts, p, m, a: cyclic(ctx, p.p1, ts[0]), _build_power, level="Pi_2"),
    Gadget("letters", "only x1 and x2 occur in y", "word", _fixed("y"),
           lambda ctx, ts, p, m, a: letters_only(ctx, ts[0], p), _build_letters, level="Pi_2"),
    Gadget("in-s", "factors of multiplication words", "n m", _fixed("y"),
           lambda ctx, ts, p, m, a: in_s(ctx, ts[0], p), _build_in_s),
    Gadget("mult", "w is the multiplication word of x = x1^n, y = x1^m", "n m",
           _fixed("x", "y", "w"),
           lambda ctx, ts, p, m, a: mult_gadget_formula(ctx, ts[0], ts[1], ts[2], p),
           _build_mult),
    Gadget("trans", "Trans(x, y): (x, y) = (x2^s, x1^s)", "s", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: trans_formula(ctx, ts[0], ts[1], p), _build_trans),
    Gadget("basis", "x is irreducible", "i", _fixed("x"),
           lambda ctx, ts, p, m, a: basis(ctx, ts[0]), _build_basis, level="Pi_1"),
    Gadget("trans-noparam", "x, y are equal powers of basis letters", "s", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: trans_noparam_formula(ctx, ts[0], ts[1]), _build_trans),
    Gadget("tuple", "x is a tuple word", "t", _fixed("x"),
           lambda ctx, ts, p, m, a: tuple_formula(ctx, ts[0], p), _build_tuple),
    Gadget("position", "entry y of the tuple word x is z", "t i", _fixed("x", "y", "z"),
           lambda ctx, ts, p, m, a: position_formula(ctx, ts[0], ts[1], ts[2], p),
           _build_position),
    Gadget("in", "x is an entry of the tuple word y", "t i", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: membership_formula(ctx, ts[0], ts[1], p), _build_in),
    Gadget("length", "the tuple word x has length y", "t", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: length_formula(ctx, ts[0], ts[1], p), _build_length),
    Gadget("concat", "z is the concatenation of the tuple words x and y", "t1 t2",
           _fixed("x", "y", "z"),
           lambda ctx, ts, p, m, a: concat_formula(ctx, ts[0], ts[1], ts[2], p),
           _build_concat),
    Gadget("shift", "u is y with its runs lengthened by the length of x", "t1 t2",
           _fixed("x", "y", "u"),
           lambda ctx, ts, p, m, a: shift_formula(ctx, ts[0], ts[1], ts[2], p), _build_shift),
    Gadget("a-word", "x is some a_m", "m", _fixed("x"), _a_word_define, _build_a_word),
    Gadget("b-pairs", "B(x, y): x = a_m and y = x1^m", "m", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: b_formula(ctx, ts[0], ts[1], p), _build_b_pair),
    Gadget("relation-r", "R(c, q): c = x_i and q = x1^i", "i", _fixed("c", "q"),
           lambda ctx, ts, p, m, a: relation_r(ts[0], ts[1], m.alphabet, p),
           _build_relation_r, level="QF"),
    Gadget("iso", "y is the monomial coded by the tuple word x", "t", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: iso_formula(ctx, ts[0], ts[1], m.alphabet, p), _build_iso),
    Gadget("iso-trace", "y is the monomial coded by x, in a trace monoid with trivial center",
           "t", _fixed("x", "y"),
           lambda ctx, ts, p, m, a: iso_trace_formula(ctx, ts[0], ts[1], m, p),
           _build_iso_trace),
    Gadget("orbit", "the tuple x lies in the orbit of the given words", "word...",
           lambda args: orbit_variables(max(len(args), 1)), _orbit_define, _build_orbit),
]}


def get_gadget(name: str) -> Gadget:
    try:
        return GADGETS[name]
    except KeyError:
        raise UnknownGadgetError(
            f"Unknown gadget: {name}. Available: {', '.join(GADGETS)}") from None


def witness_bound(name: str, args: Sequence[str], model: MonoidModel) -> int:
    """Exact length of the largest element the instance needs."""
    return get_gadget(name).instantiate(args, model).witness_bound
