"""Small definable sets the larger gadgets are assembled from."""
from __future__ import annotations

from monoid_bench.gadgets.base import FormulaContext, Params
from monoid_bench.logic.formula import (
    ONE, Exists, Formula, Implies, Not, Term, cat, conj, disj, eq, exists, forall, neq, power,
)


def basis(ctx: FormulaContext, x: Term) -> Formula:
    """x is irreducible: nontrivial and every factorization has a trivial side."""
    y, z = ctx.var("y"), ctx.var("z")
    return conj(
        neq(x, ONE),
        forall([y.name, z.name], Implies(eq(x, cat(y, z)), disj(eq(y, ONE), eq(z, ONE)))),
    )


def centralizer(c: Term, y: Term) -> Formula:
    return eq(cat(c, y), cat(y, c))


def cyclic(ctx: FormulaContext, c: Term, y: Term) -> Formula:
    """c is the only irreducible factor of y."""
    u, g, v = ctx.var("u"), ctx.var("g"), ctx.var("v")
    return forall([u.name, g.name, v.name],
                  Implies(conj(eq(y, cat(u, g, v)), basis(ctx, g)), eq(g, c)))


def letters_only(ctx: FormulaContext, y: Term, params: Params) -> Formula:
    """Every irreducible factor of y is p1 or p2."""
    u, g, v = ctx.var("u"), ctx.var("g"), ctx.var("v")
    return forall([u.name, g.name, v.name],
                  Implies(conj(eq(y, cat(u, g, v)), basis(ctx, g)),
                          disj(eq(g, params.p1), eq(g, params.p2))))


def in_s(ctx: FormulaContext, y: Term, params: Params) -> Formula:
    """Nonempty {p1, p2}-word without a p2^3 factor."""
    u, v = ctx.var("u"), ctx.var("v")
    return conj(
        neq(y, ONE),
        letters_only(ctx, y, params),
        Not(exists([u.name, v.name], eq(y, cat(u, power(params.p2, 3), v)))),
    )


def in_p1(ctx: FormulaContext, params: Params, v: Term) -> Formula:
    """v is a power of p1."""
    if params.divisor_form:
        return conj(centralizer(params.p1, v), cyclic(ctx, params.p1, v))
    return centralizer(params.p1, v)


def in_p2(ctx: FormulaContext, params: Params, v: Term) -> Formula:
    if params.divisor_form:
        return conj(centralizer(params.p2, v), cyclic(ctx, params.p2, v))
    return centralizer(params.p2, v)


def power_of(ctx: FormulaContext, params: Params, a: Term, b: Term) -> Formula:
    """b commutes with the {p1, p2}-word a (and, in divisor form, is itself a {p1, p2}-word)."""
    if params.divisor_form:
        return conj(centralizer(a, b), letters_only(ctx, b, params))
    return centralizer(a, b)


def starts_with(ctx: FormulaContext, v: Term, prefix: Term) -> Formula:
    h = ctx.var("h")
    return Exists(h.name, eq(v, cat(prefix, h)))


def ends_with(ctx: FormulaContext, v: Term, suffix: Term) -> Formula:
    h = ctx.var("h")
    return Exists(h.name, eq(v, cat(h, suffix)))


def factor_free(ctx: FormulaContext, v: Term, factor: Term) -> Formula:
    h, k = ctx.var("h"), ctx.var("h")
    return Not(exists([h.name, k.name], eq(v, cat(h, factor, k))))
