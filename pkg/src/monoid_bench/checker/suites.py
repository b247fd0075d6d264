"""Verification suites: each checks a family of definitions or oracles against an
independent computation on every instance up to a size limit and returns one report."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Callable, Iterable, Optional

import numpy as np

from monoid_bench.arith.bounded import CORPUS, CORPUS_BOUND, bounded_arith_eval, corpus
from monoid_bench.arith.coding import (
    decode_tuple, encode_tuple, monomial_to_tuple, pair, unpair, word_code,
)
from monoid_bench.arith.membership import (
    brute_force_member, random_membership_instance, submonoid_member,
)
from monoid_bench.checker.evaluator import Evaluator, Mode, solutions
from monoid_bench.checker.report import VerificationReport, check_definition, format_tuple
from monoid_bench.gadgets.base import FormulaContext
from monoid_bench.gadgets.catalogue import GADGETS, get_gadget, params_for
from monoid_bench.gadgets.common import basis, in_s
from monoid_bench.gadgets.isomorphism import a_word, b_formula
from monoid_bench.gadgets.mult import mult_formula, mult_gadget_word
from monoid_bench.gadgets.orbit import orbit, orbit_formula
from monoid_bench.gadgets.trans import trans_formula
from monoid_bench.gadgets.tuples import tuple_formula, tuple_word
from monoid_bench.interpret.bi_check import (
    check_bi_interpretation, check_translation, measure_level_inflation, psi_map,
)
from monoid_bench.interpret.bundles import monoid_in_snn, nat_in_free, snn_in_free
from monoid_bench.logic.formula import Var, to_text
from monoid_bench.logic.hierarchy import classify
from monoid_bench.logic.parser import parse
from monoid_bench.logic.prenex import is_prenex, prenex_normal_form
from monoid_bench.models.bs_monoid import BaumslagSolitarMonoid, relation_search_equal
from monoid_bench.models.free_monoid import FreeMonoid, is_in_S
from monoid_bench.models.monoid_factory import create_monoid
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.naturals import NaturalNumbers
from monoid_bench.models.trace_monoid import TraceMonoid, commutation_closure
from monoid_bench.models.words import Alphabet, Word, concat_all

logger = logging.getLogger(__name__)

TWO_LETTERS = "free:x1,x2"
THREE_LETTERS = "free:x1,x2,x3"
# Candidate pools of at most this many words are the whole domain up to the bound.
FULL_POOL_LIMIT = 2048
SAMPLED_LENGTH = 8


class UnknownSuiteError(ValueError):
    """No verification suite of that name."""


@dataclass
class SuiteOptions:
    """Size limit and checker settings for one suite run; `max_size` None means the
    suite's default."""
    max_size: Optional[int] = None
    mode: Mode = Mode.WITNESS
    workers: int = 1
    max_domain: int = 200_000
    seed: int = 0

    def limit(self, default: int) -> int:
        if self.max_size is None:
            return default
        if self.max_size < 0:
            raise ValueError("Size limit must be non-negative")
        return self.max_size


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_max: int
    run: Callable[[SuiteOptions], VerificationReport]


def _compare(report: VerificationReport, structure: Any, found: Iterable[tuple[Any, ...]],
             expected: Iterable[tuple[Any, ...]]) -> None:
    wanted = set(expected)
    seen: set[tuple[Any, ...]] = set()
    for t in found:
        seen.add(t)
        if t not in wanted:
            report.add("FP", format_tuple(t, structure))
    for t in wanted:
        if t not in seen:
            report.add("FN", format_tuple(t, structure))


def _arg(t: tuple[int, ...]) -> str:
    return ",".join(str(e) for e in t)


def _edits(w: Word, alphabet: Alphabet) -> list[Word]:
    """Words one substitution, deletion or insertion away from w."""
    letters = w.letters
    found: dict[tuple[str, ...], None] = {}
    for i in range(len(letters) + 1):
        for name in alphabet.names:
            found.setdefault(letters[:i] + (name,) + letters[i:], None)
            if i < len(letters) and name != letters[i]:
                found.setdefault(letters[:i] + (name,) + letters[i + 1:], None)
        if i < len(letters):
            found.setdefault(letters[:i] + letters[i + 1:], None)
    return [Word(t, alphabet) for t in found]


def candidate_pool(model: MonoidModel, bound: int,
                   extra: Iterable[Word]) -> tuple[list[Word], bool]:
    """Every word of length <= bound when there are at most FULL_POOL_LIMIT of them;
    otherwise the words of length <= SAMPLED_LENGTH followed by `extra`. The flag is True
    for the full domain."""
    if model.domain_size(bound) <= FULL_POOL_LIMIT:
        return list(model.domain(bound)), True
    return list(dict.fromkeys([*model.domain(min(bound, SAMPLED_LENGTH)), *extra])), False


def pool_scope(variable: str, full: int, sampled: int, sample: str) -> str:
    if not sampled:
        return ""
    return (f"{variable} sampled in {sampled} of {full + sampled} instance(s): words of length "
            f"<= {SAMPLED_LENGTH}, {sample}")


# -- gadget suites ----------------------------------------------------------------------

def run_mult(options: SuiteOptions) -> VerificationReport:
    """The multiplication word is the only solution of the gadget formula for x1^n, x1^m,
    and the product formula picks exactly x1^(nm)."""
    top = options.limit(3)
    model = create_monoid(TWO_LETTERS)
    params = params_for(model)
    p1, _ = params.values({}, model)
    gadget = get_gadget("mult")
    all_words = [mult_gadget_word(n, m) for n in range(top + 1) for m in range(top + 1)]
    report = VerificationReport("mult")
    full = 0
    for n, m in product(range(top + 1), repeat=2):
        instance = gadget.instantiate([str(n), str(m)], model)
        x, y, w = p1 ** n, p1 ** m, instance.word
        candidates, complete = candidate_pool(model, instance.witness_bound,
                                              [*all_words, *_edits(w, model.alphabet)])
        full += complete
        found = solutions(model, instance.formula, ["x", "y", "w"], instance.witness_bound,
                          options.mode, instance.hints,
                          domains={"x": [x], "y": [y], "w": candidates},
                          workers=options.workers, max_domain=options.max_domain)
        _compare(report, model, found, [(x, y, w)])

        ctx = FormulaContext(["x", "y", "z"])
        built = ctx.finish(mult_formula(ctx, Var("x"), Var("y"), Var("z"), params))
        found = solutions(model, built.formula, ["x", "y", "z"], max(9, n * m), options.mode,
                          built.hints, domains={"x": [x], "y": [y]},
                          workers=options.workers, max_domain=options.max_domain)
        _compare(report, model, found, [(x, y, p1 ** (n * m))])
        report.instances += 1
    report.scope = pool_scope("w", full, report.instances - full,
                              "the multiplication words and one-letter edits of the instance word")
    return report


def run_trans(options: SuiteOptions) -> VerificationReport:
    top = options.limit(3)
    model = create_monoid(TWO_LETTERS)
    params = params_for(model)
    p1, p2 = params.values({}, model)
    ctx = FormulaContext(["x", "y"])
    built = ctx.finish(trans_formula(ctx, Var("x"), Var("y"), params))
    expected = [(p2 ** s, p1 ** s) for s in range(top + 1)]
    return check_definition(model, built.formula, ["x", "y"], expected, top, options.mode,
                            built.hints, workers=options.workers,
                            max_domain=options.max_domain, name="trans")


def _tuples(max_length: int, max_entry: int) -> list[tuple[int, ...]]:
    return [t for length in range(1, max_length + 1)
            for t in product(range(max_entry + 1), repeat=length)]


def _tuple_words_up_to(bound: int, p1: Word, p2: Word) -> list[Word]:
    """Every tuple word of length at most bound."""
    found: list[Word] = []
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for t in frontier:
            for entry in range(bound + 1):
                longer = t + (entry,)
                w = tuple_word(longer, p1, p2)
                if len(w) > bound:
                    break
                found.append(w)
                nxt.append(longer)
        frontier = nxt
    return found


def run_tuple(options: SuiteOptions) -> VerificationReport:
    """Tuple words, position, length and concatenation on every tuple of length and
    entries at most the limit."""
    top = options.limit(2)
    model = create_monoid(TWO_LETTERS)
    params = params_for(model)
    p1, p2 = params.values({}, model)
    tuples = _tuples(top, top)
    report = VerificationReport("tuple")
    if not tuples:
        return report

    bound = max(len(tuple_word(t, p1, p2)) for t in tuples)
    ctx = FormulaContext(["x"])
    built = ctx.finish(tuple_formula(ctx, Var("x"), params))
    report.extend(check_definition(
        model, built.formula, ["x"], [(w,) for w in _tuple_words_up_to(bound, p1, p2)], bound,
        options.mode, built.hints, workers=options.workers, max_domain=options.max_domain))

    for t in tuples:
        w = tuple_word(t, p1, p2)
        for i in range(1, len(t) + 1):
            instance = get_gadget("position").instantiate([_arg(t), str(i)], model)
            found = solutions(model, instance.formula, ["x", "y", "z"], instance.witness_bound,
                              options.mode, instance.hints,
                              domains={"x": [w], "y": [p1 ** i]},
                              max_domain=options.max_domain)
            _compare(report, model, found, [(w, p1 ** i, p1 ** t[i - 1])])
            report.instances += 1
        instance = get_gadget("length").instantiate([_arg(t)], model)
        found = solutions(model, instance.formula, ["x", "y"], instance.witness_bound,
                          options.mode, instance.hints, domains={"x": [w]},
                          max_domain=options.max_domain)
        _compare(report, model, found, [(w, p1 ** len(t))])
        report.instances += 1

    for t1, t2 in product(tuples, repeat=2):
        instance = get_gadget("concat").instantiate([_arg(t1), _arg(t2)], model)
        rivals = [tuple_word(t1 + r, p1, p2) for r in tuples] + \
                 [tuple_word(r + t2, p1, p2) for r in tuples]
        x, y = tuple_word(t1, p1, p2), tuple_word(t2, p1, p2)
        found = solutions(model, instance.formula, ["x", "y", "z"], instance.witness_bound,
                          options.mode, instance.hints,
                          domains={"x": [x], "y": [y], "z": list(dict.fromkeys(rivals))},
                          max_domain=options.max_domain)
        _compare(report, model, found, [(x, y, instance.word)])
        report.instances += 1
    return report


def run_b_pairs(options: SuiteOptions) -> VerificationReport:
    """B(x, y) holds exactly at the pairs (a_m, x1^m)."""
    top = options.limit(4)
    model = create_monoid(TWO_LETTERS)
    params = params_for(model)
    p1, p2 = params.values({}, model)
    targets = [a_word(m, p1, p2) for m in range(1, top + 1)]
    bound = max([len(a) for a in targets], default=1)
    candidates, complete = candidate_pool(
        model, bound, [*targets, *(e for a in targets for e in _edits(a, model.alphabet))])
    index: dict[Word, int] = {}
    m = 1
    while len(a_word(m, p1, p2)) <= bound:
        index[a_word(m, p1, p2)] = m
        m += 1
    expected = [(w, p1 ** index[w]) for w in candidates if w in index]
    ctx = FormulaContext(["x", "y"])
    built = ctx.finish(b_formula(ctx, Var("x"), Var("y"), params))
    return check_definition(model, built.formula, ["x", "y"], expected, bound, options.mode,
                            built.hints, domains={"x": candidates}, workers=options.workers,
                            max_domain=options.max_domain, name="b-pairs",
                            scope=pool_scope("x", int(complete), int(not complete),
                                             "the a-words and their one-letter edits"))


def run_iso(options: SuiteOptions) -> VerificationReport:
    """The isomorphism formula pairs the tuple word of every monomial with the monomial
    and with none of its one-letter edits."""
    top = options.limit(2)
    model = create_monoid(THREE_LETTERS)
    params = params_for(model)
    p1, p2 = params.values({}, model)
    gadget = get_gadget("iso")

    def check(monomial: Word) -> VerificationReport:
        part = VerificationReport("iso", 1)
        t = monomial_to_tuple(monomial)
        instance = gadget.instantiate([_arg(t)], model)
        x = tuple_word(t, p1, p2)
        rivals = list(dict.fromkeys([monomial, *_edits(monomial, model.alphabet)]))
        found = solutions(model, instance.formula, ["x", "y"], instance.witness_bound,
                          options.mode, instance.hints, domains={"x": [x], "y": rivals},
                          max_domain=options.max_domain)
        _compare(part, model, found, [(x, monomial)])
        return part

    monomials = [w for w in model.domain(top) if not w.is_identity]
    report = VerificationReport("iso")
    with ThreadPoolExecutor(max_workers=options.workers) as pool:
        for part in pool.map(check, monomials):
            report.extend(part)
    return report


def run_orbit(options: SuiteOptions) -> VerificationReport:
    """The orbit formula of every word defines its orbit under basis permutations."""
    top = options.limit(4)
    model = create_monoid(THREE_LETTERS)
    report = VerificationReport("orbit")
    for w in model.domain(top):
        ctx = FormulaContext(["x"])
        built = ctx.finish(orbit_formula(ctx, [w], [Var("x")]))
        expected = [images for images in orbit([w], model.alphabet)]
        report.extend(check_definition(model, built.formula, ["x"], expected, len(w),
                                       options.mode, built.hints,
                                       max_domain=options.max_domain))
    return report


def run_in_s(options: SuiteOptions) -> VerificationReport:
    top = options.limit(6)
    model = create_monoid(TWO_LETTERS)
    params = params_for(model)
    ctx = FormulaContext(["y"])
    built = ctx.finish(in_s(ctx, Var("y"), params))
    expected = [(w,) for w in model.domain(top) if is_in_S(w)]
    return check_definition(model, built.formula, ["y"], expected, top, options.mode,
                            built.hints, workers=options.workers,
                            max_domain=options.max_domain, name="in-s")


# Example instances for gadgets with a documented quantifier level.
LEVEL_EXAMPLES: dict[str, list[str]] = {
    "centralizer": ["2"],
    "cyclic": ["2"],
    "letters": ["x1.x2"],
    "basis": ["1"],
    "relation-r": ["1"],
}


def run_basis(options: SuiteOptions) -> VerificationReport:
    """The basis formula defines the generators in free and trace monoids, and the
    documented gadgets sit at their documented levels."""
    top = options.limit(3)
    report = VerificationReport("basis")
    for spec in (THREE_LETTERS, "trace:x1,x2,x3;edges=x1-x3"):
        model = create_monoid(spec)
        ctx = FormulaContext(["x"])
        f = basis(ctx, Var("x"))
        expected = [(g,) for g in model.alphabet.generators() if top >= 1]
        report.extend(check_definition(model, f, ["x"], expected, top, Mode.EXHAUSTIVE,
                                       workers=options.workers,
                                       max_domain=options.max_domain))
        level = classify(f).ascii
        if level != "Pi_1":
            report.add("FN", f"basis level {level}")
    model = create_monoid(THREE_LETTERS)
    for name, args in LEVEL_EXAMPLES.items():
        gadget = GADGETS[name]
        level = classify(gadget.instantiate(args, model).formula).ascii
        report.instances += 1
        if level != gadget.level:
            report.add("FN", f"{name} level {level}, documented {gadget.level}")
    return report


# -- kernel, coding and membership suites ----------------------------------------------

def _graphs(size: int) -> list[list[tuple[str, str]]]:
    names = Alphabet.standard(size).names
    edges = list(combinations(names, 2))
    return [[e for e, keep in zip(edges, mask) if keep]
            for mask in product([False, True], repeat=len(edges))]


def _relation_neighbours(model: BaumslagSolitarMonoid, w: Word, max_length: int) -> list[Word]:
    left, right = model.relation
    letters = w.letters
    found: list[Word] = []
    for src, dst in ((left, right), (right, left)):
        for i in range(len(letters) - len(src) + 1):
            if letters[i:i + len(src)] == src:
                nxt = letters[:i] + dst + letters[i + len(src):]
                if len(nxt) <= max_length:
                    found.append(Word(nxt, model.alphabet))
    return found


def run_kernel(options: SuiteOptions) -> VerificationReport:
    """Trace equality against the commutation closure on every graph with at most three
    vertices, and Baumslag-Solitar normal forms against relation search on words two
    letters longer than the limit."""
    top = options.limit(6)
    report = VerificationReport("kernel")
    for size in range(1, 4):
        for edges in _graphs(size):
            model = TraceMonoid(Alphabet.standard(size), edges)
            classes: dict[Word, set[tuple[str, ...]]] = {}
            words = list(model.alphabet.words(top))
            for w in words:
                classes.setdefault(model.normal_form(w), set()).add(w.letters)
            for w in words:
                closure = commutation_closure(model, w)
                same = classes[model.normal_form(w)]
                if closure - same:
                    report.add("FN", f"{model.spec()} {w}")
                if same - closure:
                    report.add("FP", f"{model.spec()} {w}")
            report.instances += len(words)
    length = top + 2
    for k, m in ((3, 4), (4, 3)):
        bs = BaumslagSolitarMonoid(k, m)
        for w in bs.alphabet.words(length):
            nf = bs.normal_form(w)
            if not relation_search_equal(bs, w, nf, length):
                report.add("FN", f"{bs.spec()} {w}")
            if any(bs.normal_form(v) != nf for v in _relation_neighbours(bs, w, length)):
                report.add("FP", f"{bs.spec()} {w}")
            report.instances += 1
    return report


def run_coding(options: SuiteOptions) -> VerificationReport:
    """Pairing inverse on pairs up to the limit, tuple codes on tuples of length <= 4 with
    entries <= 10, and injective word codes on words of length <= 3 over three letters."""
    top = options.limit(50)
    report = VerificationReport("coding")
    for a, b in product(range(top + 1), repeat=2):
        if unpair(pair(a, b)) != (a, b):
            report.add("FN", f"pair ({a}, {b})")
        report.instances += 1
    for length in range(5):
        for t in product(range(11), repeat=length):
            if decode_tuple(encode_tuple(t)) != t:
                report.add("FN", f"tuple {t}")
            report.instances += 1
    seen: dict[int, Word] = {}
    for w in Alphabet.standard(3).words(3):
        code = word_code(w)
        if code in seen:
            report.add("FP", f"word code {code}: {seen[code]} and {w}")
        seen[code] = w
        report.instances += 1
    return report


def run_membership(options: SuiteOptions) -> VerificationReport:
    """The membership program against product enumeration on random instances."""
    count = options.limit(500)
    rng = np.random.default_rng(options.seed)
    report = VerificationReport("membership", count)
    for _ in range(count):
        g, gens = random_membership_instance(rng)
        result = submonoid_member(g, gens)
        expected = brute_force_member(g, gens)
        label = f"{g} in <{', '.join(str(h) for h in gens)}>"
        if result.member and not expected:
            report.add("FP", label)
        elif expected and not result.member:
            report.add("FN", label)
        elif result.member:
            if concat_all(g.alphabet, *result.factors) != g:
                report.add("FP", f"{label} witness {result.witness()}")
    return report


# -- logic and interpretation suites ---------------------------------------------------

# Sentences with their truth values, arithmetic ones over 0..3.
ARITHMETIC_PRENEX: list[tuple[str, bool]] = [
    ("(E x. x = 1 & A y. y + 0 = y)", True),
    ("(A x. x = x -> E y. y = 2)", True),
    ("!E x. x + x = 3", True),
    ("!A x. x = 0", True),
    ("(E x. x = 2 | A y. y = 3)", True),
    ("(A x. E y. x + y = 3 -> E z. z * z = 4)", True),
    ("!(A x. E y. y + y = x | E z. z = 3)", False),
    ("(!E x. x * x = 2 & E y. y * y = 1)", True),
    ("A x. (x = 0 | E y. y + 1 = x)", True),
    ("E x. A y. (y + x = y -> x = 0)", True),
    ("(A x. x * 0 = 0 -> !E y. y + 1 = 0)", True),
    ("!!E x. x + x = 2", True),
    ("(E x. x = 3 -> A y. E z. y + z = 3)", True),
    ("A x. (E y. x = y + y | E y. x = y + y + 1)", True),
    ("(A x. A y. x + y = y + x & !A z. z = 1)", True),
    ("E x. (!A y. y * x = y & x * x = x)", True),
    ("(!E x. A y. x + y = y -> E z. z = 1)", True),
    ("A x. (A y. y = x -> x = 0)", True),
    ("(E x. E y. (x + y = 4 & x * y = 4) | !E z. z = z)", True),
    ("!(E x. x = 1 -> A y. y = 1)", True),
]

# Monoid sentences over free:x1,x2 with their truth values over words of length <= 2.
MONOID_PRENEX: list[tuple[str, bool]] = [
    ("A y. A z. ('x1' = y.z -> (y = 1 | z = 1))", True),
    ("E x. (x.x = 'x1.x1' & !x = 1)", True),
    ("(E x. x.'x1' = 'x1'.x -> A y. E z. y.z = z.y)", True),
    ("!E x. x.'x2' = 'x1'", True),
    ("(A x. x = x & E y. !y.'x1' = 'x1'.y)", True),
    ("A x. (E y. x = y.'x1' | !E z. x = z.'x1')", True),
    ("E x. A y. (x.y = y -> E z. z.x = z)", True),
    ("(!A x. x = 1 | E y. y = 'x2')", True),
    ("A x. A y. (x.y = y.x -> E z. (x = z.z | !x = z.z))", True),
    ("(E x. A y. !y.x = 'x2' & A z. E u. u = z)", True),
]


def run_prenex(options: SuiteOptions) -> VerificationReport:
    """Prenex forms keep the bounded truth value of every corpus sentence: arithmetic
    sentences over 0..3, monoid sentences over words of length <= 2."""
    top = options.limit(3)
    monoid = create_monoid(TWO_LETTERS)
    cases: list[tuple[Any, int, str]] = \
        [(NaturalNumbers(), top, text) for text, _ in ARITHMETIC_PRENEX] + \
        [(monoid, min(top, 2), text) for text, _ in MONOID_PRENEX]
    report = VerificationReport("prenex", len(cases))
    for structure, bound, text in cases:
        f = parse(text, structure.signature)
        g = prenex_normal_form(f)
        if not is_prenex(g):
            report.add("FN", f"{to_text(f)} (not prenex)")
            continue
        before = Evaluator(structure, bound, max_domain=options.max_domain).evaluate(f, {})
        after = Evaluator(structure, bound, max_domain=options.max_domain).evaluate(g, {})
        if before and not after:
            report.add("FN", to_text(f))
        elif after and not before:
            report.add("FP", to_text(f))
    return report


def run_translation(options: SuiteOptions) -> VerificationReport:
    """Every corpus sentence has its recorded truth value over 0..8 and keeps it through
    the naturals-in-free-monoid interpretation."""
    interpretation = nat_in_free()
    sentences = corpus()
    report = check_translation(interpretation, sentences, CORPUS_BOUND, options.mode,
                               max_domain=options.max_domain)
    for (_, expected), f in zip(CORPUS, sentences):
        if bounded_arith_eval(f, bound=CORPUS_BOUND) != expected:
            report.add("FN" if expected else "FP", f"source {to_text(f)}")
    inflation = measure_level_inflation(interpretation, sentences)
    logger.info("Measured level inflation of %s: %d", interpretation.name, inflation)
    return report


def round_trip_instances(top: int) -> tuple[list[Word], list[Any]]:
    """Monomials of length <= top over three letters, and naturals <= top with the tuples
    of length and entries <= min(top, 2)."""
    monoid = create_monoid(THREE_LETTERS)
    monomials = list(monoid.domain(top))
    small = min(top, 2)
    elements: list[Any] = list(range(top + 1)) + [()] + _tuples(small, small)
    return monomials, elements


def run_round_trip(options: SuiteOptions) -> VerificationReport:
    """Both round trips of the mutual interpretations between the free monoid on three
    letters and the list superstructure, against their definable graphs."""
    top = options.limit(3)
    model = create_monoid(THREE_LETTERS)
    assert isinstance(model, FreeMonoid)
    params = params_for(model)
    _, p2 = params.values({}, model)
    words_in_lists, lists_in_words = monoid_in_snn(model), snn_in_free(model)
    iso = get_gadget("iso")

    def monoid_graph(monomial: Any, image: tuple[Any, ...]) -> bool:
        if monomial.is_identity:
            return bool(image == (p2,))
        instance = iso.instantiate([_arg(monomial_to_tuple(monomial))], model)
        evaluator = Evaluator(model, instance.witness_bound, options.mode, instance.hints,
                              options.max_domain)
        return evaluator.evaluate(instance.formula, {"x": image[0], "y": monomial})

    def list_graph(value: Any, image: tuple[Any, ...]) -> bool:
        return bool(image[0] == psi_map(value))

    monomials, elements = round_trip_instances(top)
    report = check_bi_interpretation(words_in_lists, lists_in_words, monomials, monoid_graph,
                                     options.workers, name="round-trip")
    report.extend(check_bi_interpretation(lists_in_words, words_in_lists, elements,
                                          list_graph, options.workers))
    return report


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("mult", "multiplication gadget and product formula, n, m <= max", 3, run_mult),
    Suite("trans", "Trans solutions with |x|, |y| <= max", 3, run_trans),
    Suite("kernel", "trace and Baumslag-Solitar word problems, words <= max", 6, run_kernel),
    Suite("coding", "pairing, tuple and word codes, pairs <= max", 50, run_coding),
    Suite("membership", "submonoid membership on max random instances", 500, run_membership),
    Suite("prenex", "prenex forms keep truth, arithmetic bound max", 3, run_prenex),
    Suite("tuple", "tuple words, position, length, concat, tuples <= max", 2, run_tuple),
    Suite("iso", "isomorphism formula on monomials of length <= max", 2, run_iso),
    Suite("b-pairs", "B(x, y) on a_m for m <= max", 4, run_b_pairs),
    Suite("orbit", "orbit formulas of words of length <= max", 4, run_orbit),
    Suite("translation", "arithmetic corpus through nat-in-free", 0, run_translation),
    Suite("basis", "basis formula and documented levels, bound max", 3, run_basis),
    Suite("in-s", "factors of multiplication words, length <= max", 6, run_in_s),
    Suite("round-trip", "monoid/list-superstructure round trips, size <= max", 3, run_round_trip),
]}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuiteError(
            f"Unknown suite: {name}. Available: {', '.join(SUITES)}") from None


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> VerificationReport:
    suite = get_suite(name)
    options = options or SuiteOptions()
    logger.info("Running suite %s (max %s)", name,
                options.max_size if options.max_size is not None else suite.default_max)
    report = suite.run(options)
    logger.info("Suite %s: %d instances, %d failures", name, report.instances, len(report.rows))
    return report
