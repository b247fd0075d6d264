import pytest

from monoid_bench.checker.report import VerificationReport
from monoid_bench.cli import EXIT_FAILURES, EXIT_OK, EXIT_USAGE, main
from monoid_bench.config.config_manager import ConfigManager
from monoid_bench.storage.local_storage import LocalStorage

BASIS = "A y. A z. (x = y.z -> (y = 1 | z = 1))"


@pytest.fixture(autouse=True)
def cli_env(tmp_path, monkeypatch):
    monkeypatch.setenv('MONOID_SPEC', 'free:x1,x2')
    monkeypatch.setenv('DEFAULT_BOUND', '3')
    monkeypatch.setenv('EVAL_MODE', 'witness')
    monkeypatch.setenv('OUTPUT_FORMAT', 'text')
    monkeypatch.setenv('REPORT_STORAGE_PATH', str(tmp_path / 'reports'))
    monkeypatch.setenv('LOG_LEVEL', 'WARNING')


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


def test_eval_basis_formula(capsys):
    code, out, _ = run(capsys, 'eval', '--monoid', 'free:x1,x2', '--bound', '3', BASIS,
                       '--let', 'x=x1')
    assert code == EXIT_OK
    assert out[0] == 'true'

    code, out, _ = run(capsys, 'eval', BASIS, '--let', 'x=x1.x2')
    assert out[0] == 'false'


def test_eval_lines_format(capsys):
    code, out, _ = run(capsys, 'eval', '--format', 'lines', BASIS, '--let', 'x=x1')
    assert code == EXIT_OK
    assert out[0].startswith('value=true level=')


def test_eval_unbound_variable(capsys):
    code, _, err = run(capsys, 'eval', BASIS)
    assert code == EXIT_USAGE
    assert err.startswith('error: Unbound free variables: x')


def test_eval_bad_binding(capsys):
    code, _, _ = run(capsys, 'eval', BASIS, '--let', 'x1')
    assert code == EXIT_USAGE


def test_gadget_mult(capsys):
    code, out, _ = run(capsys, 'gadget', 'mult', '2', '1')
    assert code == EXIT_OK
    assert 'word: x2.x2.x1.x1.x1.x2.x1.x1.x2.x2.x1.x1.x2.x1.x1.x1.x2.x2' in out
    assert 'power notation: x2^2.x1^3.x2.x1^2.x2^2.x1^2.x2.x1^3.x2^2' in out
    assert 'witness bound: 18' in out


def test_gadget_a_word(capsys):
    code, out, _ = run(capsys, 'gadget', 'a-word', '2')
    assert code == EXIT_OK
    assert 'word: x2.x1.x2.x1.x1' in out


def test_gadget_negative_parameter(capsys):
    code, _, err = run(capsys, 'gadget', 'mult', '-1', '0')
    assert code == EXIT_USAGE
    assert 'non-negative' in err


def test_gadget_check(capsys):
    code, out, _ = run(capsys, 'gadget', 'basis', '1', '--check')
    assert code == EXIT_OK
    assert 'holds: true' in out
    assert 'level: Pi_1' in out


def test_verify_mult(capsys):
    code, out, _ = run(capsys, 'verify', 'mult', '--max', '1')
    assert code == EXIT_OK
    assert out[-1] == 'mult: OK, 4 instances'


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, 'verify', 'unknown')
    assert code == EXIT_USAGE
    assert 'Unknown suite: unknown' in err


def test_verify_save_and_list(capsys):
    code, out, _ = run(capsys, 'verify', 'trans', '--max', '2', '--save', 'trans_run')
    assert code == EXIT_OK
    assert out[-1].startswith('saved: ')

    code, out, _ = run(capsys, 'reports')
    assert out == ['trans_run']

    code, out, _ = run(capsys, 'reports', 'trans_run')
    assert code == EXIT_OK
    assert out == ['trans: OK, 3 instances']


def test_failing_report_exit_code(capsys):
    storage = LocalStorage(ConfigManager())
    report = VerificationReport("trans", 4, [("FP", "x2.x1"), ("FN", "x1.x2")])
    storage.save('failing', report.to_frame())

    code, out, _ = run(capsys, 'reports', 'failing')
    assert code == EXIT_FAILURES
    assert out == ['FP x2.x1', 'FN x1.x2', 'trans: 2 failures in 4 instances']


def test_missing_report(capsys):
    code, _, err = run(capsys, 'reports', 'missing')
    assert code == EXIT_USAGE
    assert 'Report missing not found' in err


def test_translate(capsys):
    code, out, _ = run(capsys, 'translate', 'nat-in-free', 'E x. x + x = 4')
    assert code == EXIT_OK
    assert out[-1].startswith('levels: Σ₁ -> ')


def test_translate_sort_error(capsys):
    code, _, _ = run(capsys, 'translate', 'monoid-in-nat', 'x + x = 4')
    assert code == EXIT_USAGE


def test_translate_uses_the_bundle_monoid(capsys):
    code, out, _ = run(capsys, 'translate', 'nat-in-trace', '0 = 0')
    assert code == EXIT_OK
    assert out[-1].startswith('levels: QF -> ')

    code, _, err = run(capsys, 'translate', '--monoid', 'free:x1,x2', 'nat-in-trace', '0 = 0')
    assert code == EXIT_USAGE
    assert 'needs a trace monoid' in err


def test_member(capsys):
    code, out, _ = run(capsys, 'member', 'a.b.a.b', 'ab')
    assert code == EXIT_OK
    assert out == ['yes (a.b)(a.b)']

    code, out, _ = run(capsys, 'member', 'a.b.a', 'ab')
    assert out == ['no']


def test_classify(capsys):
    code, out, _ = run(capsys, 'classify', 'A x. E y. x = y')
    assert code == EXIT_OK
    assert out == ['Π₂']

    code, out, _ = run(capsys, 'classify', '--format', 'lines', 'A x. E y. x = y')
    assert out[0].startswith('level=Pi_2 ')


def test_code_decode_round_trip(capsys):
    code, out, _ = run(capsys, 'code', 'x1.x3.x2')
    assert code == EXIT_OK
    value = out[0]

    code, out, _ = run(capsys, 'decode', value)
    assert code == EXIT_OK
    assert out == ['(1,3,2)', 'x1.x3.x2']


def test_decode_empty_tuple(capsys):
    code, out, _ = run(capsys, 'decode', '0')
    assert out == ['()', '1']


def test_missing_command(capsys):
    assert main([]) == EXIT_USAGE
