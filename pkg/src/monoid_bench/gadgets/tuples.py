"""Tuple words w_t = p1 p2^(t1+1) p1^2 p2^(t2+1) ... p1^m p2^(tm+1) and the position,
membership, length and concatenation formulas over them."""
from __future__ import annotations

from typing import Optional, Sequence

from monoid_bench.gadgets.base import FormulaContext, GadgetParameterError, Params, default_pair
from monoid_bench.gadgets.common import ends_with, in_p1, in_p2, letters_only, starts_with
from monoid_bench.gadgets.trans import trans_formula
from monoid_bench.logic.formula import (
    ONE, Exists, Formula, Implies, Not, Term, cat, conj, disj, eq, exists, forall, neq,
)
from monoid_bench.models.words import Word, concat_all


def tuple_word(t: Sequence[int], p1: Optional[Word] = None, p2: Optional[Word] = None) -> Word:
    if not t:
        raise GadgetParameterError("Tuple words need a nonempty tuple")
    if any(entry < 0 for entry in t):
        raise GadgetParameterError(f"Tuple entries must be non-negative: {tuple(t)}")
    p1, p2 = default_pair(p1, p2)
    parts: list[Word] = []
    for i, entry in enumerate(t, start=1):
        parts += [p1 ** i, p2 ** (entry + 1)]
    return concat_all(p1.alphabet, *parts)


def read_tuple_word(w: Word, p1: Word, p2: Word) -> Optional[tuple[int, ...]]:
    """The t with w = w_t over single-letter p1, p2, or None."""
    a, b = p1.letters, p2.letters
    if len(a) != 1 or len(b) != 1:
        return None
    letters = w.letters
    entries: list[int] = []
    i = 0
    while i < len(letters):
        run = 0
        while i < len(letters) and letters[i] == a[0]:
            run += 1
            i += 1
        count = 0
        while i < len(letters) and letters[i] == b[0]:
            count += 1
            i += 1
        if run != len(entries) + 1 or count == 0:
            return None
        entries.append(count - 1)
    return tuple(entries) or None


def shift_word(t1: Sequence[int], t2: Sequence[int], p1: Optional[Word] = None,
               p2: Optional[Word] = None) -> Word:
    """The u with w_t1 . u = w_(t1 t2)."""
    whole = tuple_word(tuple(t1) + tuple(t2), p1, p2)
    return whole[len(tuple_word(t1, p1, p2)):]


def _run_start(ctx: FormulaContext, g: Term, params: Params) -> Formula:
    """g does not end in p1, so what follows starts a maximal p1-run."""
    return Not(ends_with(ctx, g, params.p1))


def tuple_formula(ctx: FormulaContext, x: Term, params: Params) -> Formula:
    """w(x): x is a tuple word."""
    p1, p2 = params.p1, params.p2
    g, k = ctx.var("g"), ctx.var("g")
    head = Exists(g.name, eq(x, cat(p1, p2, g)))
    tail = Exists(k.name, eq(x, cat(k, p2)))
    g3, i, g4, g5, g6 = ctx.var("g"), ctx.var("i"), ctx.var("g"), ctx.var("g"), ctx.var("g")
    recursion = forall(
        [g3.name, i.name, g4.name],
        Implies(conj(eq(x, cat(g3, i, g4)), in_p1(ctx, params, i), neq(i, ONE),
                     _run_start(ctx, g3, params), starts_with(ctx, g4, p2)),
                disj(in_p2(ctx, params, g4),
                     exists([g5.name, g6.name],
                            conj(eq(g4, cat(g5, i, p1, g6)), in_p2(ctx, params, g5),
                                 starts_with(ctx, g6, p2))))))
    return conj(head, tail, recursion, letters_only(ctx, x, params))


def position_formula(ctx: FormulaContext, x: Term, y: Term, z: Term, params: Params) -> Formula:
    """t(x, y, z): x = w_t, y = p1^i and z = p1^(t_i)."""
    p2 = params.p2
    g1, v, g2 = ctx.var("g"), ctx.var("v"), ctx.var("g")
    return conj(
        tuple_formula(ctx, x, params), in_p1(ctx, params, y), neq(y, ONE),
        exists([g1.name, v.name, g2.name],
               conj(eq(x, cat(g1, y, p2, v, g2)),
                    _run_start(ctx, g1, params),
                    Not(starts_with(ctx, g2, p2)),
                    in_p2(ctx, params, v),
                    trans_formula(ctx, v, z, params))),
    )


def membership_formula(ctx: FormulaContext, x: Term, y: Term, params: Params) -> Formula:
    """In(x, y): x = p1^a for an entry a of the tuple coded by y."""
    z = ctx.var("z")
    return Exists(z.name, position_formula(ctx, y, z, x, params))


def length_formula(ctx: FormulaContext, x: Term, y: Term, params: Params) -> Formula:
    """l(x, y): x = w_t and y = p1^|t|."""
    g1, g2 = ctx.var("g"), ctx.var("g")
    return conj(
        tuple_formula(ctx, x, params), in_p1(ctx, params, y), neq(y, ONE),
        exists([g1.name, g2.name],
               conj(eq(x, cat(g1, y, g2)), _run_start(ctx, g1, params),
                    in_p2(ctx, params, g2))),
    )


def shift_formula(ctx: FormulaContext, x: Term, y: Term, u: Term, params: Params) -> Formula:
    """u is the tuple word y with every p1-run lengthened by the length of the tuple x."""
    p1, p2 = params.p1, params.p2
    c = ctx.var("c")
    head = Exists(c.name, conj(length_formula(ctx, x, c, params),
                               starts_with(ctx, u, cat(c, p1, p2))))
    k = ctx.var("g")
    tail = Exists(k.name, eq(u, cat(k, p2)))

    g2, r, g3 = ctx.var("g"), ctx.var("r"), ctx.var("g")
    c2, i, h1, v, h2, g4 = (ctx.var("c"), ctx.var("i"), ctx.var("h"), ctx.var("v"),
                            ctx.var("h"), ctx.var("g"))
    recursion = forall(
        [g2.name, r.name, g3.name],
        Implies(conj(eq(u, cat(g2, r, g3)), in_p1(ctx, params, r), neq(r, ONE),
                     _run_start(ctx, g2, params), starts_with(ctx, g3, p2)),
                exists([c2.name, i.name, h1.name, v.name, h2.name],
                       conj(length_formula(ctx, x, c2, params),
                            eq(r, cat(c2, i)), neq(i, ONE),
                            eq(y, cat(h1, i, p2, v, h2)),
                            _run_start(ctx, h1, params),
                            in_p2(ctx, params, v),
                            Not(starts_with(ctx, h2, p2)),
                            disj(conj(eq(h2, ONE), eq(g3, cat(p2, v))),
                                 Exists(g4.name, conj(eq(g3, cat(p2, v, r, p1, g4)),
                                                      starts_with(ctx, g4, p2))))))))
    return conj(tuple_formula(ctx, y, params), head, recursion, tail)


def concat_formula(ctx: FormulaContext, x: Term, y: Term, z: Term, params: Params) -> Formula:
    """Concat(x, y, z): z codes the concatenation of the tuples coded by x and y."""
    u = ctx.var("u")
    return Exists(u.name, conj(eq(z, cat(x, u)), shift_formula(ctx, x, y, u, params)))
