import pytest

from monoid_bench.logic.formula import (
    ONE, Concat, Equal, Exists, Forall, Implies, Num, Or, Plus, Var, free_vars, to_text,
)
from monoid_bench.logic.hierarchy import Side, classify
from monoid_bench.logic.parser import FormulaSyntaxError, parse
from monoid_bench.logic.prenex import is_prenex, prenex_normal_form, to_nnf
from monoid_bench.logic.signature import Signature, SignatureKind, SortError, infer_signature
from monoid_bench.logic.substitution import NameSupply, substitute
from monoid_bench.models.words import Alphabet

BASIS = "A y. A z. (x = y.z -> (y = 1 | z = 1))"


@pytest.fixture
def free_signature():
    return Signature.monoid(Alphabet.standard(2))


def test_parse_basis_formula(free_signature):
    f = parse(BASIS, free_signature)
    x, y, z = Var("x"), Var("y"), Var("z")
    expected = Forall("y", Forall("z", Implies(
        Equal(x, Concat((y, z))),
        Or(Equal(y, ONE), Equal(z, ONE)))))
    assert f == expected


def test_render_reparses(free_signature):
    f = parse(BASIS, free_signature)
    assert to_text(f) == BASIS
    assert parse(to_text(f), free_signature) == f


def test_numeral_one_is_the_identity_in_monoids(free_signature):
    f = parse("x = 1", free_signature)
    assert f == Equal(Var("x"), ONE)


def test_arithmetic_is_inferred():
    f = parse("1 + 1 = 2")
    assert f == Equal(Plus(Num(1), Num(1)), Num(2))
    assert infer_signature(f).kind is SignatureKind.ARITHMETIC


def test_alphabet_is_inferred_from_constants():
    f = parse("x = 'a.b'")
    signature = infer_signature(f)
    assert signature.kind is SignatureKind.MONOID
    assert signature.alphabet.names == ("a", "b")


def test_syntax_error_reports_location():
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse("A x. (x = ")
    assert "column" in str(exc_info.value)
    assert exc_info.value.column >= 1


def test_capitalised_variable_is_explained():
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse("E X. X = 'x1'")
    assert "variables start with a lowercase letter, got 'X'" in str(exc_info.value)
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse("A x. (x = ")
    assert "lowercase" not in str(exc_info.value)


def test_arithmetic_in_monoid_signature_is_a_sort_error(free_signature):
    with pytest.raises(SortError):
        parse("E x. x + x = 4", free_signature)


def test_unknown_generator_is_a_sort_error(free_signature):
    with pytest.raises(SortError) as exc_info:
        parse("x = 'x3'", free_signature)
    assert "x3" in str(exc_info.value)


def test_relation_arity_is_checked():
    with pytest.raises(SortError):
        parse("Len(x)", Signature.lists())


def test_classify_levels():
    assert str(classify(parse("A x. E y. x = y"))) == "Π₂"
    assert classify(parse("A x. E y. x = y")).ascii == "Pi_2"
    assert classify(parse("x = y")).side is Side.QUANTIFIER_FREE
    assert classify(parse("E x. E y. x = y")).ascii == "Sigma_1"
    assert classify(parse(BASIS)).rank == 1


def test_classify_goes_through_prenex_form():
    level = classify(parse("(E x. x = y & A z. z = y)"))
    assert level.ascii == "Sigma_2"


def test_nnf_pushes_negations_to_atoms():
    f = to_nnf(parse("!(A x. x = 'a' -> E y. y = 'b')"))
    assert to_text(f) == "(A x. x = 'a' & A y. !y = 'b')"


def test_prenex_renames_clashing_quantifiers():
    f = prenex_normal_form(parse("(E x. x = 'a' & E x. x = 'b')"))
    assert is_prenex(f)
    assert to_text(f) == "E x. E x_1. (x = 'a' & x_1 = 'b')"


def test_prenex_of_negated_disjunction():
    f = prenex_normal_form(parse("!(A x. E y. y + y = x | E z. z = 3)"))
    assert is_prenex(f)
    assert classify(f).ascii == "Sigma_2"


def test_prenex_leaves_prenex_formulas_alone(free_signature):
    f = parse(BASIS, free_signature)
    assert prenex_normal_form(f) is f


def test_substitution_avoids_capture():
    f = parse("E y. x = y.'a'")
    result = substitute(f, {"x": Var("y")})
    assert free_vars(result) == {"y"}
    assert isinstance(result, Exists)
    assert result.var != "y"


def test_name_supply_is_deterministic():
    names = NameSupply({"v_1"})
    assert names.fresh("v") == "v_2"
    assert names.claim("w") == "w"
    assert names.claim("w") == "w_3"
