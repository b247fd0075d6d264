"""The words a_m, the pairs (a_m, p1^m), and the isomorphism words that pair a tuple word
w_t with the monomial x_t1 ... x_tm."""
from __future__ import annotations

from typing import Any, Iterable, Mapping, Optional, Sequence

from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.gadgets.base import FormulaContext, GadgetParameterError, Params, default_pair
from monoid_bench.gadgets.common import (
    basis, centralizer, ends_with, in_p1, in_p2, letters_only, starts_with,
)
from monoid_bench.gadgets.trans import trans_formula
from monoid_bench.gadgets.tuples import length_formula, position_formula, read_tuple_word
from monoid_bench.logic.formula import (
    ONE, Exists, Formula, Implies, Not, Term, cat, conj, const, disj, eq, exists, forall, neq,
    power,
)
from monoid_bench.models.base_model import ModelKindError, Structure
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.trace_monoid import TraceMonoid
from monoid_bench.models.words import Alphabet, Word, concat_all


def a_word(m: int, p1: Optional[Word] = None, p2: Optional[Word] = None) -> Word:
    """a_m = p2 p1 p2 p1^2 ... p2 p1^m."""
    if m < 1:
        raise GadgetParameterError(f"a-words start at m = 1, got {m}")
    p1, p2 = default_pair(p1, p2)
    parts: list[Word] = []
    for i in range(1, m + 1):
        parts += [p2, p1 ** i]
    return concat_all(p1.alphabet, *parts)


def b_formula(ctx: FormulaContext, x: Term, y: Term, params: Params,
              separator: Optional[Term] = None) -> Formula:
    """B(x, y): x = a_m and y = p1^m for some m >= 1, with `separator` (default p2) between
    the runs of p1."""
    p1 = params.p1
    sep = separator if separator is not None else params.p2
    g, k, u, v = ctx.var("g"), ctx.var("g"), ctx.var("u"), ctx.var("v")
    u1, v1, u2, u3 = ctx.var("u"), ctx.var("v"), ctx.var("u"), ctx.var("u")
    runs = forall(
        [u1.name, v1.name, u2.name],
        Implies(conj(eq(x, cat(u1, sep, v1, sep, u2)), in_p1(ctx, params, v1)),
                disj(Exists(u3.name, eq(u2, cat(v1, p1, sep, u3))),
                     eq(u2, cat(v1, p1)))))
    return conj(
        in_p1(ctx, params, y), neq(y, ONE),
        disj(Exists(g.name, eq(x, cat(sep, p1, sep, g))), eq(x, cat(sep, p1))),
        Exists(k.name, eq(x, cat(k, sep, y))),
        Not(exists([u.name, v.name], eq(x, cat(u, sep, sep, v)))),
        runs,
        letters_only(ctx, x, params) if separator is None
        else _separator_blocks(ctx, x, p1, separator),
    )


def _separator_blocks(ctx: FormulaContext, x: Term, p1: Term, separator: Term) -> Formula:
    """Every irreducible factor of x other than p1 lies inside an occurrence of the separator."""
    u, g, v = ctx.var("u"), ctx.var("g"), ctx.var("v")
    s, r, u1, v1 = ctx.var("s"), ctx.var("r"), ctx.var("u"), ctx.var("v")
    return forall(
        [u.name, g.name, v.name],
        Implies(conj(eq(x, cat(u, g, v)), basis(ctx, g), neq(g, p1)),
                exists([s.name, r.name, u1.name, v1.name],
                       conj(eq(separator, cat(s, g, r)), eq(u, cat(u1, s)), eq(v, cat(r, v1))))))


def relation_r(c: Term, q: Term, alphabet: Alphabet, params: Params) -> Formula:
    """R(c, q): c = x_i and q = p1^i for a generator x_i."""
    return disj(*(conj(eq(c, const(name)), eq(q, power(params.p1, i)))
                  for i, name in enumerate(alphabet.names, start=1)))


def iso_word(t: Sequence[int], alphabet: Alphabet, p1: Optional[Word] = None,
             p2: Optional[Word] = None) -> Word:
    """S_1 M_1 S_2 M_2 ... S_m M_m S_(m+1) with S_j = a^j p2^j a^j, a = a_m and
    M_j = x_t1 ... x_tj."""
    if p1 is None or p2 is None:
        p1, p2 = alphabet.generator(alphabet.names[0]), alphabet.generator(alphabet.names[1])
    return _iso_word(t, alphabet, a_word(max(len(t), 1), p1, p2), p2)


def _iso_word(t: Sequence[int], alphabet: Alphabet, a: Word, p2: Word) -> Word:
    if not t:
        raise GadgetParameterError("Isomorphism words need a nonempty tuple")
    for entry in t:
        if not 1 <= entry <= len(alphabet):
            raise GadgetParameterError(f"Entry {entry} out of range 1..{len(alphabet)}")
    m = len(t)
    parts: list[Word] = []
    for j in range(1, m + 2):
        parts += [a ** j, p2 ** j, a ** j]
        if j <= m:
            parts += [alphabet.generator(alphabet.names[entry - 1]) for entry in t[:j]]
    return concat_all(alphabet, *parts)


def require_trivial_center(model: MonoidModel) -> TraceMonoid:
    """The trace model itself; ModelKindError or GadgetParameterError when the trace
    isomorphism words are not available in it."""
    if not isinstance(model, TraceMonoid):
        raise ModelKindError(f"iso-trace needs a trace model, got {model.spec()}")
    if len(model.alphabet) < 2:
        raise GadgetParameterError("iso-trace needs at least two generators")
    if not model.center_is_trivial():
        raise GadgetParameterError(
            f"Center of {model.spec()} is not trivial: {','.join(model.central_generators())}")
    return model


def trace_separator(model: MonoidModel, p1: Word) -> Word:
    """Product of all generators but p1, in alphabet order."""
    return concat_all(model.alphabet, *(g for g in model.alphabet.generators() if g != p1))


def iso_word_trace(t: Sequence[int], model: MonoidModel, p1: Optional[Word] = None,
                   p2: Optional[Word] = None) -> Word:
    """Isomorphism word for a trace monoid: inside a_m the letter p2 is replaced by the
    product of all generators but p1, so a_m commutes with no generator."""
    trace = require_trivial_center(model)
    if p1 is None or p2 is None:
        p1, p2 = trace.alphabet.generators()[:2]
    a = a_word(max(len(t), 1), p1, trace_separator(trace, p1))
    return trace.normal_form(_iso_word(t, trace.alphabet, a, p2))


def _no_a_start(ctx: FormulaContext, v: Term, a: Term) -> Formula:
    return Not(starts_with(ctx, v, a))


def _no_a_end(ctx: FormulaContext, v: Term, a: Term) -> Formula:
    return Not(ends_with(ctx, v, a))


def _entry(ctx: FormulaContext, x: Term, index: Term, alphabet: Alphabet,
           params: Params) -> tuple[list[str], Formula, Term]:
    """Names, conditions and the letter term c for "c = x_i where p1^i is entry `index` of x"."""
    c, q = ctx.var("c"), ctx.var("q")
    condition = conj(position_formula(ctx, x, index, q, params),
                     relation_r(c, q, alphabet, params))
    return [c.name, q.name], condition, c


def iso_word_formula(ctx: FormulaContext, x: Term, z: Term, alphabet: Alphabet,
                     params: Params, separator: Optional[Term] = None) -> Formula:
    """theta0(x, z): z is the isomorphism word of the tuple word x."""
    p1, p2 = params.p1, params.p2
    mm, a = ctx.var("m"), ctx.var("a")

    names, first, c = _entry(ctx, x, p1, alphabet, params)
    v1 = ctx.var("v")
    head = exists(names + [v1.name], conj(
        first,
        eq(z, cat(a, p2, a, c, a, a, p2, p2, a, a, v1)),
        _no_a_start(ctx, v1, a)))

    v2, ab, e, v3, v4 = ctx.var("v"), ctx.var("b"), ctx.var("e"), ctx.var("v"), ctx.var("v")
    jj = ctx.var("j")
    names, nxt, c2 = _entry(ctx, x, cat(jj, p1), alphabet, params)
    v5 = ctx.var("v")
    step = forall(
        [v2.name, ab.name, e.name, v3.name, v4.name],
        Implies(conj(eq(z, cat(v2, ab, e, ab, v3, ab, a, e, p2, ab, a, v4)),
                     centralizer(a, ab), neq(ab, ONE),
                     in_p2(ctx, params, e), neq(e, ONE),
                     _no_a_end(ctx, v2, a), _no_a_end(ctx, v3, a),
                     _no_a_start(ctx, v3, a), _no_a_start(ctx, v4, a)),
                Exists(jj.name, conj(
                    trans_formula(ctx, e, jj, params),
                    disj(eq(jj, mm),
                         exists(names + [v5.name], conj(
                             nxt,
                             eq(v4, cat(v3, c2, ab, a, a, e, p2, p2, ab, a, a, v5)),
                             _no_a_start(ctx, v5, a))))))))

    w2, wb, we, w4 = ctx.var("v"), ctx.var("b"), ctx.var("e"), ctx.var("v")
    last = forall(
        [w2.name, wb.name, we.name, w4.name],
        Implies(conj(eq(z, cat(w2, wb, we, wb, w4)),
                     centralizer(a, wb), neq(wb, ONE),
                     _no_a_end(ctx, w2, a), _no_a_start(ctx, w4, a),
                     trans_formula(ctx, we, cat(mm, p1), params)),
                eq(w4, ONE)))

    return exists([mm.name, a.name], conj(
        length_formula(ctx, x, mm, params),
        b_formula(ctx, a, mm, params, separator),
        starts_with(ctx, z, cat(a, p2)),
        head, step, last))


def iso_formula(ctx: FormulaContext, x: Term, y: Term, alphabet: Alphabet, params: Params,
                separator: Optional[Term] = None, hint: Optional[WitnessHint] = None) -> Formula:
    """theta1(x, y): y is the monomial whose index tuple the tuple word x codes.

    `separator` replaces p2 inside the a-words; `hint` then has to build the matching
    isomorphism words.
    """
    p2 = params.p2
    z = ctx.var("z")
    ctx.hint(z.name, hint or iso_hint(x, alphabet, params))
    mm, a, ab, h, k, u, e = (ctx.var("m"), ctx.var("a"), ctx.var("b"), ctx.var("h"),
                             ctx.var("h"), ctx.var("u"), ctx.var("e"))
    closing = exists([mm.name, a.name], conj(
        length_formula(ctx, x, mm, params),
        b_formula(ctx, a, mm, params, separator),
        Exists(h.name, eq(z, cat(a, p2, h))),
        Exists(ab.name, conj(
            centralizer(a, ab),
            Exists(k.name, eq(z, cat(k, p2, ab, a))),
            exists([u.name, e.name], conj(
                eq(z, cat(u, ab, e, ab, y, ab, a, e, p2, ab, a)),
                trans_formula(ctx, e, mm, params))))),
    ))
    return Exists(z.name, conj(iso_word_formula(ctx, x, z, alphabet, params, separator), closing))


def iso_hint(x: Term, alphabet: Alphabet, params: Params, trace: bool = False) -> WitnessHint:
    def hint(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
        p1, p2 = params.values(a, structure)
        t = read_tuple_word(structure.evaluate_term(x, a), p1, p2)
        if t is None or not all(1 <= entry <= len(alphabet) for entry in t):
            return []
        if trace:
            return [iso_word_trace(t, structure, p1, p2)]
        return [iso_word(t, alphabet, p1, p2)]
    return hint


def iso_trace_formula(ctx: FormulaContext, x: Term, y: Term, model: MonoidModel,
                      params: Params) -> Formula:
    """theta1 in a trace monoid with trivial center, over the words of iso_word_trace."""
    trace = require_trivial_center(model)
    p1, _ = params.values({}, trace)
    separator = const(*trace_separator(trace, p1).letters)
    return iso_formula(ctx, x, y, trace.alphabet, params, separator,
                       iso_hint(x, trace.alphabet, params, trace=True))


def decode_iso(t: Sequence[int], alphabet: Alphabet) -> Word:
    """The monomial x_t1 ... x_tm the isomorphism word of t pairs with its tuple word."""
    return Word(tuple(alphabet.names[entry - 1] for entry in t), alphabet)
