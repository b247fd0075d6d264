"""The transfer relation {(p2^s, p1^s)}, its f-words, and the parameter-free equivalence
pairing powers of distinct basis letters."""
from __future__ import annotations

from typing import Any, Iterable, Mapping, Optional

from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.gadgets.base import (
    FormulaContext, GadgetParameterError, Params, default_pair, normalized,
)
from monoid_bench.gadgets.common import (
    basis, ends_with, factor_free, in_p1, in_p2, power_of, starts_with,
)
from monoid_bench.logic.formula import (
    ONE, Exists, Formula, Implies, Not, Term, Var, cat, conj, disj, eq, exists, forall, neq,
    power,
)
from monoid_bench.models.base_model import Structure
from monoid_bench.models.words import Word, concat_all


def a_term(params: Params) -> Term:
    """a = p1 p2 p1 p2^2."""
    return cat(params.p1, params.p2, params.p1, power(params.p2, 2))


def f_word(s: int, p1: Optional[Word] = None, p2: Optional[Word] = None) -> Word:
    """a (p2 p1) a^2 (p2^2 p1^2) a^3 ... (p2^s p1^s) a^(s+1) with a = p1 p2 p1 p2^2."""
    if s < 1:
        raise GadgetParameterError(f"f-words start at s = 1, got {s}")
    p1, p2 = default_pair(p1, p2)
    a = concat_all(p1.alphabet, p1, p2, p1, p2 ** 2)
    parts = [a]
    for k in range(1, s + 1):
        parts += [p2 ** k, p1 ** k, a ** (k + 1)]
    return concat_all(p1.alphabet, *parts)


def f_formula(ctx: FormulaContext, f: Term, params: Params) -> Formula:
    """f is an f-word: it opens with a p2 p1 a^2, and each block b u b.a with b a power of a
    and u a-free is either last or followed by p2 u p1 b a a."""
    p1, p2 = params.p1, params.p2
    a = a_term(params)

    g = ctx.var("g")
    head = Exists(g.name, conj(eq(f, cat(a, p2, p1, a, a, g)), Not(starts_with(ctx, g, a))))

    g1, b, u, g3, g4 = ctx.var("g"), ctx.var("b"), ctx.var("u"), ctx.var("g"), ctx.var("g")
    recursion = forall(
        [g1.name, b.name, u.name, g3.name],
        Implies(conj(eq(f, cat(g1, b, u, b, a, g3)),
                     power_of(ctx, params, a, b), neq(b, ONE),
                     Not(ends_with(ctx, g1, a)),
                     neq(u, ONE), factor_free(ctx, u, a),
                     Not(starts_with(ctx, g3, a))),
                disj(eq(g3, ONE),
                     Exists(g4.name, conj(eq(g3, cat(p2, u, p1, b, a, a, g4)),
                                          Not(starts_with(ctx, g4, a)))))))

    h1, hb, hu = ctx.var("g"), ctx.var("b"), ctx.var("u")
    tail = exists(
        [h1.name, hb.name, hu.name],
        conj(eq(f, cat(h1, hb, hu, hb, a)),
             power_of(ctx, params, a, hb), neq(hb, ONE),
             Not(ends_with(ctx, h1, a)),
             neq(hu, ONE), factor_free(ctx, hu, a)))
    return conj(head, recursion, tail)


def transfer_formula(ctx: FormulaContext, x: Term, params: Params) -> Formula:
    """x = p2^k p1^k for some k >= 1: x sits between a^k and a^(k+1) in an f-word."""
    a = a_term(params)
    f = ctx.var("f")
    ctx.hint(f.name, f_word_hint(x, params))
    g1, b, g2 = ctx.var("g"), ctx.var("b"), ctx.var("g")
    return exists(
        [f.name, g1.name, b.name, g2.name],
        conj(eq(f, cat(g1, b, x, a, b, g2)),
             neq(b, ONE), power_of(ctx, params, a, b),
             Not(ends_with(ctx, g1, a)),
             neq(x, ONE), factor_free(ctx, x, a),
             f_formula(ctx, f, params)))


def trans_formula(ctx: FormulaContext, x: Term, y: Term, params: Params) -> Formula:
    """Trans(x, y): (x, y) = (p2^s, p1^s) for some s >= 0."""
    return disj(
        conj(eq(x, ONE), eq(y, ONE)),
        conj(in_p2(ctx, params, x), in_p1(ctx, params, y),
             transfer_formula(ctx, cat(x, y), params)),
    )


def trans_noparam_formula(ctx: FormulaContext, x: Term, y: Term) -> Formula:
    """x = y, or x and y are equal powers of two distinct basis letters."""
    z1, z2, x1, y1 = ctx.var("z"), ctx.var("z"), ctx.var("x"), ctx.var("y")
    letters = Params(Var(z1.name), Var(z2.name))
    return disj(
        eq(x, y),
        exists([z1.name, z2.name, x1.name, y1.name],
               conj(eq(x, cat(z2, x1)), eq(y, cat(z1, y1)),
                    basis(ctx, z1), basis(ctx, z2), neq(z1, z2),
                    trans_formula(ctx, x, y, letters))),
    )


def f_word_hint(x: Term, params: Params) -> WitnessHint:
    def hint(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
        p1, p2 = params.values(a, structure)
        value = structure.evaluate_term(x, a)
        k, rest = divmod(len(value), len(p1) + len(p2))
        if rest or k < 1 or not structure.equal((p2 ** k) + (p1 ** k), value):
            return []
        return [normalized(structure, f_word(k, p1, p2))]
    return hint
