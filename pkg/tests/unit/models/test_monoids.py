import pytest

from monoid_bench.models.bs_monoid import BaumslagSolitarMonoid, relation_search_equal
from monoid_bench.models.free_monoid import FreeMonoid, is_in_S
from monoid_bench.models.monoid_factory import create_monoid, create_structure
from monoid_bench.models.naturals import NaturalNumbers
from monoid_bench.models.trace_monoid import TraceMonoid, center_is_trivial, commutation_closure
from monoid_bench.models.words import (
    Alphabet, AlphabetMismatchError, Word, concat_all, distinct_factors, parse_word,
    primitive_root,
)


@pytest.fixture
def alphabet():
    return Alphabet.standard(2)


@pytest.fixture
def trace():
    """x1 and x3 commute; x2 commutes with nothing."""
    return create_monoid("trace:x1,x2,x3;edges=x1-x3")


def test_standard_alphabet():
    assert Alphabet.standard(3).names == ("x1", "x2", "x3")
    assert str(Alphabet.standard(2)) == "x1,x2"


def test_invalid_alphabets():
    with pytest.raises(ValueError) as exc_info:
        Alphabet(())
    assert "must not be empty" in str(exc_info.value)
    with pytest.raises(ValueError) as exc_info:
        Alphabet.of("a", "a")
    assert "distinct" in str(exc_info.value)


def test_words_enumeration_order(alphabet):
    words = [str(w) for w in alphabet.words(2)]
    assert words == ["1", "x1", "x2", "x1.x1", "x1.x2", "x2.x1", "x2.x2"]
    assert alphabet.count_words(2) == 7


def test_parse_word(alphabet):
    assert parse_word("x1.x2.x1", alphabet).letters == ("x1", "x2", "x1")
    assert parse_word("1", alphabet).is_identity
    with pytest.raises(ValueError):
        parse_word("x1.x3", alphabet)


def test_power_notation(alphabet):
    w = parse_word("x2.x2.x1.x1.x1.x2", alphabet)
    assert w.pretty() == "x2^2.x1^3.x2"
    assert alphabet.identity.pretty() == "1"


def test_concat_rejects_other_alphabets(alphabet):
    other = Alphabet.of("a", "b")
    with pytest.raises(AlphabetMismatchError):
        concat_all(alphabet, alphabet.generator("x1"), other.generator("a"))


def test_word_rejects_letters_outside_its_alphabet(alphabet):
    with pytest.raises(AlphabetMismatchError) as exc_info:
        Word(("x1", "x9"), alphabet)
    assert "x9 not in alphabet" in str(exc_info.value)
    assert len(Word(("x2", "x1"), alphabet)) == 2


def test_primitive_root_and_factors(alphabet):
    w = parse_word("x1.x2.x1.x2", alphabet)
    assert str(primitive_root(w)) == "x1.x2"
    assert str(primitive_root(parse_word("x1.x2.x1", alphabet))) == "x1.x2.x1"
    factors = {str(f) for f in distinct_factors(parse_word("x1.x2", alphabet))}
    assert factors == {"1", "x1", "x2", "x1.x2"}


def test_free_monoid_centralizer_candidates(alphabet):
    model = FreeMonoid(alphabet)
    c = parse_word("x1.x1", alphabet)
    candidates = [str(w) for w in model.commuting_candidates(c, 3)]
    assert candidates == ["1", "x1", "x1.x1", "x1.x1.x1"]
    assert model.commuting_candidates(alphabet.identity, 3) is None


def test_free_monoid_irreducibles_are_generators(alphabet):
    model = FreeMonoid(alphabet)
    assert [str(w) for w in model.irreducibles(3)] == ["x1", "x2"]


def test_multiplication_factor_set():
    alphabet = Alphabet.standard(3)
    assert is_in_S(parse_word("x2.x2.x1", alphabet))
    assert not is_in_S(parse_word("x1.x2.x2.x2", alphabet))
    assert not is_in_S(alphabet.identity)
    assert not is_in_S(parse_word("x1.x3", alphabet))


def test_trace_normal_form(trace):
    a = trace.alphabet
    assert str(trace.normal_form(parse_word("x3.x1", a))) == "x1.x3"
    assert str(trace.normal_form(parse_word("x2.x1", a))) == "x2.x1"
    assert str(trace.normal_form(parse_word("x3.x2.x1", a))) == "x3.x2.x1"
    assert trace.equal(parse_word("x1.x3.x1", a), parse_word("x3.x1.x1", a))


def test_trace_commutation_closure(trace):
    w = parse_word("x1.x3.x2", trace.alphabet)
    assert commutation_closure(trace, w) == {("x1", "x3", "x2"), ("x3", "x1", "x2")}


def test_trace_center(trace):
    assert center_is_trivial(trace)
    star = create_monoid("trace:x1,x2,x3;edges=x1-x2,x1-x3")
    assert not center_is_trivial(star)
    assert star.central_generators() == ["x1"]
    with pytest.raises(ValueError):
        center_is_trivial(create_monoid("free:x1,x2"))


def test_trace_rejects_loops():
    with pytest.raises(ValueError) as exc_info:
        TraceMonoid(Alphabet.standard(2), [("x1", "x1")])
    assert "irreflexive" in str(exc_info.value)


def test_trace_quotients(trace):
    a = trace.alphabet
    t = parse_word("x1.x3", a)
    assert str(trace.left_quotient(t, parse_word("x3", a))) == "x1"
    assert trace.left_quotient(parse_word("x2.x1", a), parse_word("x1", a)) is None


def test_baumslag_solitar_rewriting():
    bs = BaumslagSolitarMonoid(1, 2)
    a = bs.alphabet
    assert bs.lhs == ("b", "b", "a")
    assert str(bs.normal_form(parse_word("b.b.a", a))) == "a.b"
    assert bs.equal(parse_word("a.b", a), parse_word("b.b.a", a))
    assert bs.self_overlaps() == []
    assert relation_search_equal(bs, parse_word("a.b", a), parse_word("b.b.a", a), 3)
    assert not relation_search_equal(bs, parse_word("a", a), parse_word("b", a), 3)


def test_baumslag_solitar_reversed_rule():
    bs = BaumslagSolitarMonoid(2, 1)
    assert bs.lhs == ("a", "b", "b")
    assert str(bs.normal_form(parse_word("a.b.b", bs.alphabet))) == "b.a"


def test_baumslag_solitar_parameters():
    with pytest.raises(ValueError):
        BaumslagSolitarMonoid(0, 1)


def test_factory_specs():
    assert create_monoid("free:x1,x2").spec() == "free:x1,x2"
    assert create_monoid("trace:x1,x2,x3;edges=x1-x3").spec() == "trace:x1,x2,x3;edges=x1-x3"
    assert create_monoid("bs:1,2").spec() == "bs:1,2"
    assert isinstance(create_structure("nat"), NaturalNumbers)


def test_factory_rejects_unknown_kind():
    with pytest.raises(ValueError) as exc_info:
        create_monoid("group:a,b")
    assert "Invalid monoid kind" in str(exc_info.value)


def test_naturals_domain():
    assert list(NaturalNumbers().domain(3)) == [0, 1, 2, 3]
