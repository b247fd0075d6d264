import pytest

from monoid_bench.checker.evaluator import Mode
from monoid_bench.checker.suites import (
    SUITES, SuiteOptions, UnknownSuiteError, candidate_pool, get_suite, pool_scope,
    round_trip_instances, run_suite,
)
from monoid_bench.models.monoid_factory import create_monoid


def test_suite_catalogue():
    for name in ("mult", "trans", "kernel", "coding", "membership", "prenex", "tuple", "iso",
                 "b-pairs", "orbit", "translation", "basis", "in-s", "round-trip"):
        assert name in SUITES


def test_unknown_suite_lists_available():
    with pytest.raises(UnknownSuiteError) as exc_info:
        get_suite("unknown")
    assert "Unknown suite: unknown" in str(exc_info.value)
    assert "mult" in str(exc_info.value)


def test_negative_size_limit():
    with pytest.raises(ValueError) as exc_info:
        SuiteOptions(max_size=-1).limit(3)
    assert "non-negative" in str(exc_info.value)


def test_coding_suite():
    report = run_suite("coding", SuiteOptions(max_size=5))
    assert report.ok
    # 36 pairs, 16105 tuples of length <= 4 with entries <= 10, 40 words
    assert report.instances == 36 + 16105 + 40


def test_membership_suite_is_reproducible():
    first = run_suite("membership", SuiteOptions(max_size=60, seed=7))
    second = run_suite("membership", SuiteOptions(max_size=60, seed=7))
    assert first.ok
    assert first.instances == 60
    assert first.rows == second.rows


def test_kernel_suite():
    report = run_suite("kernel", SuiteOptions(max_size=3))
    assert report.ok, report.to_text()


def test_prenex_suite():
    report = run_suite("prenex")
    assert report.ok, report.to_text()
    assert report.instances == 30


def test_trans_suite():
    report = run_suite("trans", SuiteOptions(max_size=2))
    assert report.ok, report.to_text()
    assert report.instances == 3


def test_mult_suite_small():
    report = run_suite("mult", SuiteOptions(max_size=1))
    assert report.ok, report.to_text()
    assert report.instances == 4
    assert report.scope == ""


def test_in_s_suite():
    report = run_suite("in-s", SuiteOptions(max_size=4))
    assert report.ok, report.to_text()


def test_basis_suite_in_exhaustive_runs():
    report = run_suite("basis", SuiteOptions(max_size=2, mode=Mode.EXHAUSTIVE))
    assert report.ok, report.to_text()


def test_round_trip_instances():
    monomials, elements = round_trip_instances(1)
    assert [str(w) for w in monomials] == ["1", "x1", "x2", "x3"]
    assert elements[:3] == [0, 1, ()]
    assert (1,) in elements


def test_candidate_pool_is_the_whole_domain_when_small():
    model = create_monoid("free:x1,x2")
    extra = [model.parse_element(".".join(["x1"] * 12))]
    pool, complete = candidate_pool(model, 9, extra)
    assert complete
    assert len(pool) == 1023
    pool, complete = candidate_pool(model, 12, extra)
    assert not complete
    assert len(pool) == 512
    assert pool[-1] == extra[0]


def test_pool_scope():
    assert pool_scope("w", 4, 0, "edits") == ""
    assert pool_scope("w", 3, 1, "edits") == \
        "w sampled in 1 of 4 instance(s): words of length <= 8, edits"


def test_b_pairs_suite_searches_every_word_at_small_sizes():
    report = run_suite("b-pairs", SuiteOptions(max_size=2))
    assert report.ok, report.to_text()
    assert report.instances == 2
    assert report.scope == ""


def test_iso_suite_on_single_letters():
    assert get_suite("iso").default_max == 2
    report = run_suite("iso", SuiteOptions(max_size=1, workers=2))
    assert report.ok, report.to_text()
    assert report.instances == 3
