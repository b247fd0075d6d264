import pytest

from monoid_bench.checker.evaluator import Mode, evaluate
from monoid_bench.interpret.bi_check import (
    check_bi_interpretation, check_sentence, psi_map, round_trip,
)
from monoid_bench.interpret.bundles import (
    BUNDLES, UnknownInterpretationError, get_interpretation, monoid_in_nat, monoid_in_snn,
    nat_in_free, snn_in_free, snn_in_nat,
)
from monoid_bench.interpret.interpretation import (
    SignatureMismatchError, TranslationError, compose, identity_interpretation, translate,
)
from monoid_bench.logic.parser import parse
from monoid_bench.logic.signature import Signature, SortError
from monoid_bench.models.base_model import ModelKindError
from monoid_bench.models.monoid_factory import create_monoid
from monoid_bench.models.naturals import NaturalNumbers
from monoid_bench.models.trace_monoid import TraceMonoid


@pytest.fixture
def free2():
    return create_monoid("free:x1,x2")


def test_psi_map():
    assert psi_map((1, 2)) == (1, 2, 2, 1, 1, 2, 2, 2)
    assert psi_map(()) == (2,)
    assert psi_map(3) == (1, 1, 1)
    assert psi_map(0) == ()


def test_round_trip_through_free_monoid():
    assert round_trip(snn_in_free(), monoid_in_snn(), (1, 2)) == ((1, 2, 2, 1, 1, 2, 2, 2),)
    assert round_trip(snn_in_free(), monoid_in_snn(), ()) == ((2,),)


def test_bi_interpretation_round_trips(free2):
    report = check_bi_interpretation(
        snn_in_free(free2), monoid_in_snn(free2), [0, 3, (), (1, 2), (0, 0)],
        graph=lambda value, image: image[0] == psi_map(value))
    assert report.ok, report.to_text()
    assert report.instances == 5


def test_bi_interpretation_reports_rejected_pairs(free2):
    report = check_bi_interpretation(snn_in_free(free2), monoid_in_snn(free2), [1, (0,)],
                                     graph=lambda value, image: isinstance(value, int))
    assert not report.ok
    assert report.rows == [("FN", "(0)")]


def test_bi_interpretation_needs_mutual_pair():
    with pytest.raises(SignatureMismatchError):
        check_bi_interpretation(nat_in_free(), snn_in_nat(), [1])


def test_translation_keeps_truth(free2):
    interpretation = nat_in_free(free2)
    translation = translate(parse("x = 2", Signature.arithmetic()), interpretation)
    assert list(translation.variables) == ["x"]
    for value, expected in [(2, True), (1, False)]:
        assignment = translation.encode_assignment(interpretation, {"x": value})
        assert evaluate(free2, translation.formula, assignment, 2, Mode.EXHAUSTIVE,
                        translation.hints) is expected


def test_check_sentence_agrees():
    result = check_sentence(nat_in_free(), parse("1 + 1 = 2", Signature.arithmetic()), 2)
    assert result.source_value
    assert result.agrees
    assert result.inflation >= 0


def test_translate_rejects_wrong_signature():
    with pytest.raises(SortError):
        translate(parse("x = 'x1'"), nat_in_free())


def test_missing_operation_has_no_translation():
    interpretation = monoid_in_nat()
    with pytest.raises(TranslationError) as exc_info:
        interpretation.operation("+")
    assert "monoid-in-nat" in str(exc_info.value)


def test_compose_codes_words_in_the_naturals(free2):
    composed = compose(monoid_in_snn(free2), snn_in_nat())
    w = free2.parse_element("x1.x2")
    assert composed.dimension == 2
    assert composed.name == "monoid-in-snn+snn-in-nat"
    assert composed.encode(w) == (1, 133)
    assert composed.decode((1, 133)) == w


def test_compose_needs_matching_signatures():
    with pytest.raises(SignatureMismatchError) as exc_info:
        compose(nat_in_free(), nat_in_free())
    assert "Cannot compose" in str(exc_info.value)


def test_identity_interpretation():
    naturals = NaturalNumbers()
    identity = identity_interpretation(naturals)
    translation = translate(parse("E y. x + y = 3", Signature.arithmetic()), identity)
    (target,) = translation.variables["x"]
    assert evaluate(naturals, translation.formula, {target: 2}, 3, Mode.EXHAUSTIVE)
    assert not evaluate(naturals, translation.formula, {target: 4}, 3, Mode.EXHAUSTIVE)


def test_bundle_catalogue():
    for name in ("nat-in-free", "nat-in-free-noparam", "nat-in-trace", "monoid-in-nat",
                 "monoid-in-snn", "snn-in-nat", "snn-in-free"):
        assert name in BUNDLES


def test_unknown_interpretation():
    with pytest.raises(UnknownInterpretationError) as exc_info:
        get_interpretation("nat-in-group")
    assert "Unknown interpretation: nat-in-group" in str(exc_info.value)


def test_bundle_uses_its_default_monoid():
    interpretation = get_interpretation("nat-in-trace")
    assert isinstance(interpretation.target, TraceMonoid)


def test_bundle_rejects_a_monoid_of_another_kind(free2):
    with pytest.raises(ModelKindError) as exc_info:
        get_interpretation("nat-in-trace", free2)
    assert "needs a trace monoid" in str(exc_info.value)


def test_snn_in_nat_codes():
    interpretation = snn_in_nat()
    assert interpretation.encode(5) == (0, 5)
    assert interpretation.encode((1, 2)) == (1, 133)
    assert interpretation.decode((1, 133)) == (1, 2)
    with pytest.raises(ValueError):
        interpretation.decode((2, 0))
