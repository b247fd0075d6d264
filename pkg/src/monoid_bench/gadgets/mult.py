"""The multiplication gadget: words w(p1^n, p1^m) whose last block carries p1^(nm+1)."""
from __future__ import annotations

from typing import Any, Iterable, Mapping, Optional

from monoid_bench.checker.evaluator import WitnessHint
from monoid_bench.gadgets.base import (
    FormulaContext, GadgetParameterError, Params, default_pair, exponent, normalized,
)
from monoid_bench.gadgets.common import in_p1
from monoid_bench.logic.formula import (
    ONE, Exists, Formula, Implies, Term, cat, conj, disj, eq, exists, forall, neq, power,
)
from monoid_bench.models.base_model import Structure
from monoid_bench.models.words import Word, concat_all


def mult_gadget_word(n: int, m: int, p1: Optional[Word] = None, p2: Optional[Word] = None) -> Word:
    """
    Build w(p1^n, p1^m).

    Parameters:
    -----------
    n, m : int
        Exponents of the two factors, both >= 0
    p1, p2 : Word, optional
        The generators playing x1 and x2 (default x1, x2)

    Returns:
    --------
    Word
        Blocks p2^2 p1^(n+1-i) p2 p1^((i+1)m+1) for i = 0..n-1 and a closing p2^2;
        p2^2 p1 p2 p1^(m+1) p2^2 when n = 0
    """
    if n < 0 or m < 0:
        raise GadgetParameterError(f"Exponents must be non-negative, got n={n}, m={m}")
    p1, p2 = default_pair(p1, p2)
    if n == 0:
        return concat_all(p1.alphabet, p2 ** 2, p1, p2, p1 ** (m + 1), p2 ** 2)
    parts: list[Word] = []
    for i in range(n):
        parts += [p2 ** 2, p1 ** (n + 1 - i), p2, p1 ** ((i + 1) * m + 1)]
    parts.append(p2 ** 2)
    return concat_all(p1.alphabet, *parts)


def mult_gadget_formula(ctx: FormulaContext, x: Term, y: Term, w: Term, params: Params) -> Formula:
    """psi(x, y, w) for x, y powers of p1: w is the multiplication word of (x, y)."""
    p1, p2 = params.p1, params.p2
    pp = power(p2, 2)
    w0 = ctx.var("w")
    head = Exists(w0.name, eq(w, cat(pp, x, p1, p2, y, p1, pp, w0)))

    w1, w3 = ctx.var("w"), ctx.var("w")
    v1, v2, w4 = ctx.var("v"), ctx.var("v"), ctx.var("w")
    blocks = forall(
        [w1.name, w3.name],
        Implies(conj(eq(w, cat(w1, pp, w3)), neq(w3, ONE)),
                exists([v1.name, v2.name, w4.name],
                       conj(eq(w3, cat(v1, p2, v2, pp, w4)),
                            in_p1(ctx, params, v1), neq(v1, ONE),
                            in_p1(ctx, params, v2), neq(v2, ONE)))))

    s1, s2, s3, s4 = ctx.var("w"), ctx.var("v"), ctx.var("v"), ctx.var("w")
    t1, t2, t3 = ctx.var("v"), ctx.var("v"), ctx.var("w")
    succession = forall(
        [s1.name, s2.name, s3.name, s4.name],
        Implies(conj(eq(w, cat(s1, pp, s2, p2, s3, pp, s4)),
                     in_p1(ctx, params, s2), in_p1(ctx, params, s3), neq(s4, ONE)),
                exists([t1.name, t2.name, t3.name],
                       conj(eq(s4, cat(t1, p2, t2, pp, t3)),
                            eq(s2, cat(t1, p1)),
                            eq(t2, cat(s3, y))))))

    e1, e2 = ctx.var("w"), ctx.var("v")
    tail = disj(
        exists([e1.name, e2.name], eq(w, cat(e1, pp, power(p1, 2), p2, e2, pp))),
        conj(eq(x, ONE), eq(w, cat(pp, p1, p2, y, p1, pp))),
    )
    return conj(head, blocks, succession, tail)


def mult_formula(ctx: FormulaContext, x: Term, y: Term, z: Term, params: Params) -> Formula:
    """phi(x, y, z): x, y, z are powers of p1 and z = p1^(nm) for x = p1^n, y = p1^m."""
    p1, p2 = params.p1, params.p2
    pp = power(p2, 2)
    w = ctx.var("w")
    ctx.hint(w.name, mult_hint(x, y, params))
    w4 = ctx.var("w")
    product = Exists(w.name, conj(
        mult_gadget_formula(ctx, x, y, w, params),
        Exists(w4.name, eq(w, cat(w4, pp, power(p1, 2), p2, z, p1, pp))),
    ))
    return conj(
        in_p1(ctx, params, x), in_p1(ctx, params, y), in_p1(ctx, params, z),
        disj(product, conj(eq(x, ONE), eq(z, ONE))),
    )


def mult_hint(x: Term, y: Term, params: Params) -> WitnessHint:
    def hint(a: Mapping[str, Any], structure: Structure) -> Iterable[Any]:
        p1, p2 = params.values(a, structure)
        n = exponent(structure, structure.evaluate_term(x, a), p1)
        m = exponent(structure, structure.evaluate_term(y, a), p1)
        if n is None or m is None:
            return []
        return [normalized(structure, mult_gadget_word(n, m, p1, p2))]
    return hint
