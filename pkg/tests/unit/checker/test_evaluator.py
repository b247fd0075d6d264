import pytest

from monoid_bench.checker.evaluator import (
    EvaluationError, Evaluator, Mode, UnboundVariableError, evaluate, solutions,
)
from monoid_bench.logic.parser import parse
from monoid_bench.models.monoid_factory import create_monoid
from monoid_bench.models.naturals import NaturalNumbers

BASIS = "A y. A z. (x = y.z -> (y = 1 | z = 1))"


@pytest.fixture
def free():
    return create_monoid("free:x1,x2")


def test_basis_formula_on_a_generator(free):
    f = parse(BASIS, free.signature)
    assert evaluate(free, f, {"x": free.parse_element("x1")}, 3)
    assert not evaluate(free, f, {"x": free.parse_element("x1.x2")}, 3)


def test_guarded_quantifiers_respect_the_bound(free):
    f = parse("E y. (x = y.y & !y = 1)", free.signature)
    x = free.parse_element("x1.x1.x1.x1")
    assert not evaluate(free, f, {"x": x}, 1)
    assert evaluate(free, f, {"x": x}, 2)
    assert evaluate(free, parse(BASIS, free.signature), {"x": free.parse_element("x1.x2")}, 0)


def test_hinted_witness_raises_the_bound_beneath_it(free):
    f = parse("E y. (x = y.y & E z. (y = z.'x1' & !z = 1))", free.signature)
    x = free.parse_element(".".join(["x1"] * 8))
    hints = {"y": lambda a, structure: [structure.parse_element("x1.x1.x1.x1")]}
    assert evaluate(free, f, {"x": x}, 1, Mode.WITNESS, hints)
    assert not evaluate(free, f, {"x": x}, 1, Mode.EXHAUSTIVE)


def test_hints_see_only_the_quantifier_scope(free):
    seen = []

    def hint(a, structure):
        seen.append(set(a))
        return [structure.parse_element("x1")]

    f = parse("E y. x = y.y", free.signature)
    assignment = {"x": free.parse_element("x1.x1"), "w": free.parse_element("x2")}
    assert evaluate(free, f, assignment, 2, Mode.WITNESS, {"y": hint})
    assert seen == [{"x"}]


def test_unbound_free_variable(free):
    f = parse(BASIS, free.signature)
    with pytest.raises(UnboundVariableError) as exc_info:
        evaluate(free, f, {}, 2)
    assert "x" in str(exc_info.value)


def test_negative_bound_is_rejected(free):
    with pytest.raises(ValueError):
        Evaluator(free, -1)


def test_arithmetic_bounded_by_magnitude():
    nat = NaturalNumbers()
    f = parse("E x. x + x = 4")
    assert evaluate(nat, f, {}, 2)
    assert not evaluate(nat, f, {}, 1)


def test_unguarded_domain_limit():
    f = parse("E x. x * x = 49")
    with pytest.raises(EvaluationError) as exc_info:
        evaluate(NaturalNumbers(), f, {}, 10, max_domain=5)
    assert "unguarded domain" in str(exc_info.value)


def test_witness_mode_uses_hints(free):
    f = parse("E y. x = y.y", free.signature)
    x = free.parse_element("x1.x1")
    right = {"y": lambda a, structure: [structure.parse_element("x1")]}
    wrong = {"y": lambda a, structure: [structure.parse_element("x2")]}
    assert evaluate(free, f, {"x": x}, 2, Mode.WITNESS, right)
    assert not evaluate(free, f, {"x": x}, 2, Mode.WITNESS, wrong)
    assert evaluate(free, f, {"x": x}, 2, Mode.EXHAUSTIVE, wrong)


def test_trace_and_baumslag_solitar_equality():
    trace = create_monoid("trace:x1,x2,x3;edges=x1-x3")
    assert evaluate(trace, parse("'x1.x3' = 'x3.x1'", trace.signature), {}, 0)
    assert not evaluate(trace, parse("'x1.x2' = 'x2.x1'", trace.signature), {}, 0)
    bs = create_monoid("bs:1,2")
    assert evaluate(bs, parse("'a.b' = 'b.b.a'", bs.signature), {}, 0)


def test_statistics_are_collected(free):
    evaluator = Evaluator(free, 3)
    evaluator.evaluate(parse(BASIS, free.signature), {"x": free.parse_element("x1")})
    assert evaluator.stats.nodes > 0
    assert evaluator.stats.quantifier_nodes > 0


def test_solutions_of_a_factorization(free):
    f = parse("x.y = 'x1.x2'", free.signature)
    found = {(str(x), str(y)) for x, y in solutions(free, f, ["x", "y"], 2)}
    assert found == {("1", "x1.x2"), ("x1", "x2"), ("x1.x2", "1")}


def test_solutions_with_workers_match(free):
    f = parse("E y. x = y.'x1'", free.signature)
    single = solutions(free, f, ["x"], 3)
    parallel = solutions(free, f, ["x"], 3, workers=3)
    assert single == parallel
    assert len(single) == 7


def test_solutions_with_candidate_domains(free):
    f = parse("E y. x = y.y", free.signature)
    domain = [free.parse_element(t) for t in ("x1", "x1.x1", "x1.x2.x1.x2")]
    found = solutions(free, f, ["x"], 4, domains={"x": domain})
    assert [str(x) for (x,) in found] == ["x1.x1", "x1.x2.x1.x2"]
