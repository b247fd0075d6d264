import numpy as np
import pytest

from monoid_bench.arith.bounded import CORPUS, CORPUS_BOUND, bounded_arith_eval, corpus
from monoid_bench.arith.coding import (
    MalformedCodeError, decode_tuple, decode_word, encode_tuple, is_code, pair, unpair,
    word_code,
)
from monoid_bench.arith.membership import (
    brute_force_member, membership_code_set, random_membership_instance, submonoid_elements,
    submonoid_member,
)
from monoid_bench.arith.superstructure import (
    ListSuperstructure, lss_concat, lss_length, lss_position, parse_nat_tuple,
)
from monoid_bench.checker.evaluator import Mode, evaluate
from monoid_bench.logic.parser import parse
from monoid_bench.models.words import Alphabet, AlphabetMismatchError


@pytest.fixture
def ab():
    return Alphabet.of("a", "b")


def test_pair():
    assert pair(1, 2) == 8
    assert pair(0, 0) == 0
    assert unpair(8) == (1, 2)
    for p in range(200):
        assert pair(*unpair(p)) == p


def test_pair_rejects_negatives():
    with pytest.raises(ValueError) as exc_info:
        pair(-1, 0)
    assert "naturals" in str(exc_info.value)


def test_tuple_codes():
    assert encode_tuple(()) == 0
    assert encode_tuple((1,)) == 4
    assert encode_tuple((1, 2)) == 133
    assert decode_tuple(133) == (1, 2)
    assert decode_tuple(0) == ()


def test_malformed_code():
    # 2 = pair(0, 1): length 0 with a nonzero tail
    with pytest.raises(MalformedCodeError) as exc_info:
        decode_tuple(2)
    assert "length field 0" in str(exc_info.value)
    assert not is_code(2)
    assert is_code(133)


def test_word_codes():
    alphabet = Alphabet.standard(2)
    w = alphabet.word("x1.x2")
    assert word_code(w) == 133
    assert decode_word(133, alphabet) == w
    assert word_code(alphabet.identity) == 0
    with pytest.raises(ValueError):
        decode_word(encode_tuple((3,)), alphabet)


def test_member_with_witness(ab):
    result = submonoid_member(ab.word("a.b.a.b"), [ab.word("a.b")])
    assert result.member
    assert result.witness() == "(a.b)(a.b)"
    assert result.indices == [0, 0]


def test_leftmost_factorization(ab):
    result = submonoid_member(ab.word("a.b"), [ab.word("a"), ab.word("a.b"), ab.word("b")])
    assert result.witness() == "(a)(b)"
    assert result.indices == [0, 2]


def test_non_member(ab):
    result = submonoid_member(ab.word("a.b.a"), [ab.word("a.b")])
    assert not result.member
    assert result.witness() == ""


def test_identity_is_always_member(ab):
    result = submonoid_member(ab.identity, [ab.word("a.b")])
    assert result.member
    assert result.witness() == "1"


def test_identity_generator_dropped(ab):
    result = submonoid_member(ab.word("b"), [ab.identity, ab.word("b")])
    assert result.indices == [1]


def test_generators_over_other_alphabet(ab):
    with pytest.raises(AlphabetMismatchError):
        submonoid_member(ab.word("a"), [Alphabet.of("a").word("a")])


def test_submonoid_elements(ab):
    elements = submonoid_elements([ab.word("a.b"), ab.word("b")], ab, 3)
    assert {str(w) for w in elements} == {"1", "b", "a.b", "b.b", "a.b.b", "b.a.b", "b.b.b"}
    assert membership_code_set([ab.word("a")], ab, 2) == {0, 4, 25}


def test_random_instances_agree_with_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(50):
        g, gens = random_membership_instance(rng)
        assert submonoid_member(g, gens).member == brute_force_member(g, gens)


def test_superstructure_operations():
    assert lss_position((4, 5, 6), 2) == 5
    assert lss_length((4, 5, 6)) == 3
    assert lss_concat((1,), (2, 3)) == (1, 2, 3)
    with pytest.raises(ValueError):
        lss_position((4,), 2)


def test_parse_nat_tuple():
    assert parse_nat_tuple("(1, 3,2)") == (1, 3, 2)
    assert parse_nat_tuple("()") == ()
    with pytest.raises(ValueError) as exc_info:
        parse_nat_tuple("1,2")
    assert "Not a tuple" in str(exc_info.value)


def test_superstructure_domain():
    lists = ListSuperstructure()
    assert list(lists.domain(1)) == [0, 1, (), (0,), (1,)]
    assert lists.domain_size(2) == 3 + 1 + 3 + 9
    assert not lists.equal(0, ())


def test_superstructure_formulas():
    lists = ListSuperstructure()
    f = parse("E r. (Len(r, 2) & Cat(s, r, u))")
    assert evaluate(lists, f, {"s": (1,), "u": (1, 0, 2)}, 2, Mode.EXHAUSTIVE)
    assert not evaluate(lists, f, {"s": (1,), "u": (1, 0)}, 2, Mode.EXHAUSTIVE)


@pytest.mark.parametrize("text,expected", CORPUS)
def test_corpus_truth_values(text, expected):
    (f,) = [g for (t, _), g in zip(CORPUS, corpus()) if t == text]
    assert bounded_arith_eval(f, bound=CORPUS_BOUND) is expected
