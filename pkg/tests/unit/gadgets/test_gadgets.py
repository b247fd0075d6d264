import pytest

from monoid_bench.checker.evaluator import Mode, evaluate, solutions
from monoid_bench.gadgets.base import FormulaContext, GadgetParameterError, UnknownGadgetError
from monoid_bench.gadgets.catalogue import GADGETS, get_gadget, params_for, witness_bound
from monoid_bench.gadgets.isomorphism import a_word, iso_word, iso_word_trace, trace_separator
from monoid_bench.gadgets.mult import mult_formula, mult_gadget_word
from monoid_bench.gadgets.orbit import orbit
from monoid_bench.gadgets.trans import f_word
from monoid_bench.gadgets.tuples import read_tuple_word, shift_word, tuple_word
from monoid_bench.logic.formula import Var
from monoid_bench.models.base_model import ModelKindError
from monoid_bench.models.monoid_factory import create_monoid
from monoid_bench.models.words import Alphabet


@pytest.fixture
def free2():
    return create_monoid("free:x1,x2")


def test_mult_word():
    w = mult_gadget_word(2, 1)
    assert str(w) == "x2.x2.x1.x1.x1.x2.x1.x1.x2.x2.x1.x1.x2.x1.x1.x1.x2.x2"
    assert w.pretty() == "x2^2.x1^3.x2.x1^2.x2^2.x1^2.x2.x1^3.x2^2"


def test_mult_word_with_zero_factor():
    assert mult_gadget_word(0, 2).pretty() == "x2^2.x1.x2.x1^3.x2^2"


def test_mult_word_rejects_negative_exponent():
    with pytest.raises(GadgetParameterError) as exc_info:
        mult_gadget_word(-1, 0)
    assert "non-negative" in str(exc_info.value)


def test_mult_instance(free2):
    instance = get_gadget("mult").instantiate(["2", "1"], free2)
    assert instance.witness_bound == 18
    assert str(instance.word) == "x2.x2.x1.x1.x1.x2.x1.x1.x2.x2.x1.x1.x2.x1.x1.x1.x2.x2"
    assert str(instance.assignment["x"]) == "x1.x1"
    assert str(instance.assignment["y"]) == "x1"
    assert witness_bound("mult", ["2", "1"], free2) == 18


def test_a_word():
    assert str(a_word(2)) == "x2.x1.x2.x1.x1"
    with pytest.raises(GadgetParameterError):
        a_word(0)


def test_a_word_instance(free2):
    instance = get_gadget("a-word").instantiate(["2"], free2)
    assert str(instance.word) == "x2.x1.x2.x1.x1"


def test_tuple_word():
    assert str(tuple_word((1, 2))) == "x1.x2.x2.x1.x1.x2.x2.x2"
    assert tuple_word((0,)).pretty() == "x1.x2"


def test_tuple_word_rejects_bad_tuples():
    with pytest.raises(GadgetParameterError) as exc_info:
        tuple_word(())
    assert "nonempty" in str(exc_info.value)
    with pytest.raises(GadgetParameterError):
        tuple_word((1, -1))


def test_read_tuple_word():
    x1, x2 = Alphabet.standard(2).generators()
    assert read_tuple_word(tuple_word((0, 2, 1)), x1, x2) == (0, 2, 1)
    assert read_tuple_word(x2 + x1, x1, x2) is None
    assert read_tuple_word(Alphabet.standard(2).identity, x1, x2) is None


def test_shift_word():
    assert str(shift_word((1,), (2,))) == "x1.x1.x2.x2.x2"


def test_f_word():
    assert f_word(1).pretty() == "x1.x2.x1.x2^3.x1^2.x2.x1.x2^2.x1.x2.x1.x2^2"
    with pytest.raises(GadgetParameterError):
        f_word(0)


def test_iso_word_entry_range():
    alphabet = Alphabet.standard(2)
    assert len(iso_word((1,), alphabet)) == 16
    with pytest.raises(GadgetParameterError) as exc_info:
        iso_word((3,), alphabet)
    assert "out of range" in str(exc_info.value)


def test_orbit_of_single_word():
    alphabet = Alphabet.standard(2)
    images = {tuple(str(w) for w in image) for image in orbit([alphabet.word("x1.x2")], alphabet)}
    assert images == {("x1.x2",), ("x2.x1",)}


def test_unknown_gadget_lists_available():
    with pytest.raises(UnknownGadgetError) as exc_info:
        get_gadget("square")
    assert "Unknown gadget: square" in str(exc_info.value)
    assert "mult" in str(exc_info.value)


def test_catalogue_names():
    for name in ("mult", "trans", "tuple", "position", "concat", "a-word", "b-pairs", "iso",
                 "orbit", "basis"):
        assert name in GADGETS


@pytest.mark.parametrize("name,args", [
    ("mult", ["-1", "0"]),
    ("mult", ["2"]),
    ("mult", ["two", "1"]),
    ("tuple", ["()"]),
    ("basis", ["3"]),
    ("a-word", ["0"]),
])
def test_bad_parameters(free2, name, args):
    with pytest.raises(GadgetParameterError):
        get_gadget(name).instantiate(args, free2)


def test_gadget_needs_two_generators():
    with pytest.raises(GadgetParameterError) as exc_info:
        get_gadget("mult").instantiate(["1", "1"], create_monoid("free:x1"))
    assert "two generators" in str(exc_info.value)


@pytest.mark.parametrize("name,args", [
    ("basis", ["2"]),
    ("centralizer", ["2"]),
    ("cyclic", ["2"]),
    ("relation-r", ["2"]),
])
def test_small_instances_hold(free2, name, args):
    instance = get_gadget(name).instantiate(args, free2)
    assert instance.holds(free2)


@pytest.fixture
def trace3():
    return create_monoid("trace:x1,x2,x3")


def test_iso_trace_word_uses_the_separator(trace3):
    assert str(trace_separator(trace3, trace3.parse_element("x1"))) == "x2.x3"
    z = iso_word_trace((1,), trace3)
    assert str(z) == ("x2.x3.x1.x2.x2.x3.x1.x1."
                      "x2.x3.x1.x2.x3.x1.x2.x2.x2.x3.x1.x2.x3.x1")
    a = trace3.parse_element("x2.x3.x1")
    assert not any(trace3.equal(a + g, g + a) for g in trace3.alphabet.generators())


def test_iso_trace_instance_holds(trace3):
    instance = get_gadget("iso-trace").instantiate(["(1)"], trace3)
    assert instance.word == iso_word_trace((1,), trace3)
    assert instance.witness_bound == 22
    assert str(instance.assignment["x"]) == "x1.x2.x2"
    assert str(instance.assignment["y"]) == "x1"
    assert instance.holds(trace3)
    instance.assignment["y"] = trace3.parse_element("x2")
    assert not instance.holds(trace3)


def test_iso_trace_needs_a_trivial_center(free2):
    central = create_monoid("trace:x1,x2,x3;edges=x1-x3,x2-x3")
    with pytest.raises(GadgetParameterError) as exc_info:
        get_gadget("iso-trace").instantiate(["(1)"], central)
    assert "not trivial: x3" in str(exc_info.value)
    with pytest.raises(ModelKindError) as exc_info:
        get_gadget("iso-trace").instantiate(["(1)"], free2)
    assert "needs a trace model" in str(exc_info.value)


def test_b_pair_needs_the_full_head(free2):
    instance = get_gadget("b-pairs").instantiate(["1"], free2)
    assert instance.holds(free2)
    instance.assignment.update(x=free2.parse_element("x2.x1.x1"), y=free2.parse_element("x1.x1"))
    assert not instance.holds(free2)


@pytest.mark.parametrize("n,m", [(0, 1), (1, 0), (1, 1)])
def test_mult_relation_agrees_across_modes(free2, n, m):
    ctx = FormulaContext(["x", "y", "z"])
    built = ctx.finish(mult_formula(ctx, Var("x"), Var("y"), Var("z"), params_for(free2)))
    x1 = free2.alphabet.generator("x1")
    bound = len(mult_gadget_word(n, m))
    for k in range(3):
        assignment = {"x": x1 ** n, "y": x1 ** m, "z": x1 ** k}
        witness = evaluate(free2, built.formula, assignment, bound, Mode.WITNESS, built.hints)
        exhaustive = evaluate(free2, built.formula, assignment, bound, Mode.EXHAUSTIVE, built.hints)
        assert witness == exhaustive == (k == n * m)


def test_trans_solutions_do_not_depend_on_the_hint(free2):
    instance = get_gadget("trans").instantiate(["1"], free2)
    pool = [f_word(k) for k in (1, 2, 3)]
    permissive = {name: (lambda a, structure: pool) for name in instance.hints}
    hinted = solutions(free2, instance.formula, ["x", "y"], 2, Mode.WITNESS, instance.hints)
    pooled = solutions(free2, instance.formula, ["x", "y"], 2, Mode.WITNESS, permissive)
    assert set(hinted) == set(pooled)
    assert {(str(x), str(y)) for x, y in hinted} == {
        ("1", "1"), ("x2", "x1"), ("x2.x2", "x1.x1")}


@pytest.mark.parametrize("name,args,variables", [
    ("tuple", ["0,0"], ["x"]),
    ("length", ["0,0"], ["x", "y"]),
    ("position", ["0,0", "1"], ["x", "y", "z"]),
])
def test_tuple_gadgets_agree_across_modes(free2, name, args, variables):
    instance = get_gadget(name).instantiate(args, free2)
    domains = {"x": [instance.assignment["x"]]}
    found = {
        mode: set(solutions(free2, instance.formula, variables, instance.witness_bound, mode,
                            instance.hints, domains=domains))
        for mode in (Mode.WITNESS, Mode.EXHAUSTIVE)
    }
    assert found[Mode.WITNESS] == found[Mode.EXHAUSTIVE]
    assert tuple(instance.assignment[v] for v in variables) in found[Mode.WITNESS]
