import pytest

from monoid_bench.checker.report import VerificationReport, check_definition, format_tuple
from monoid_bench.logic.parser import parse
from monoid_bench.models.monoid_factory import create_monoid


@pytest.fixture
def free():
    return create_monoid("free:x1,x2")


@pytest.fixture
def ends_with_x1(free):
    return parse("E y. x = y.'x1'", free.signature)


def words(model, *texts):
    return [(model.parse_element(t),) for t in texts]


def test_clean_definition(free, ends_with_x1):
    report = check_definition(free, ends_with_x1, ["x"],
                              words(free, "x1", "x1.x1", "x2.x1"), 2, name="ends-with-x1")
    assert report.ok
    assert report.instances == 3
    assert report.lines() == ["OK 3"]


def test_false_positives_and_negatives(free, ends_with_x1):
    report = check_definition(free, ends_with_x1, ["x"],
                              words(free, "x1", "x1.x1", "x1.x2"), 2)
    assert not report.ok
    assert report.false_positives == ["x2.x1"]
    assert report.false_negatives == ["x1.x2"]
    assert report.to_text() == "FP x2.x1\nFN x1.x2"
    assert report.instances == 4


def test_report_frame_keeps_name_and_instances():
    report = VerificationReport("mult", 16, [("FN", "(x1, x1, x2)")])
    frame = report.to_frame()
    assert list(frame.columns) == ["kind", "tuple"]
    restored = VerificationReport.from_frame(frame)
    assert restored.name == "mult"
    assert restored.instances == 16
    assert restored.rows == [("FN", "(x1, x1, x2)")]


def test_report_frame_keeps_the_scope():
    report = VerificationReport("b-pairs", 4, scope="x sampled in 1 of 1 instance(s)")
    restored = VerificationReport.from_frame(report.to_frame())
    assert restored.scope == "x sampled in 1 of 1 instance(s)"
    assert VerificationReport.from_frame(VerificationReport("trans").to_frame()).scope == ""


def test_extend_sums_instances():
    report = VerificationReport("all", 2)
    report.extend(VerificationReport("part", 3, [("FP", "x1")]))
    assert report.instances == 5
    assert report.rows == [("FP", "x1")]
    report.extend(VerificationReport("more", 1, scope="w sampled"))
    report.extend(VerificationReport("again", 1, scope="w sampled"))
    assert report.scope == "w sampled"


def test_invalid_row_kind():
    with pytest.raises(ValueError) as exc_info:
        VerificationReport("r").add("XX", "x1")
    assert "Invalid report row kind" in str(exc_info.value)


def test_format_tuple(free):
    x1, x2 = free.parse_element("x1"), free.parse_element("x2.x2")
    assert format_tuple([x1], free) == "x1"
    assert format_tuple([x1, x2], free) == "(x1, x2.x2)"
