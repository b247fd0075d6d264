"""Command-line front end: eval, gadget, verify, translate, member, classify, code, decode
and reports.

Exit codes: 0 success, 1 verification failures, 2 usage, parse, sort or parameter errors.
"""
import argparse
import logging
import shlex
import sys
from typing import Any, Optional, Sequence

from dotenv import load_dotenv

from monoid_bench.api.schemas import (
    ClassifyRequest,
    CodeRequest,
    DecodeRequest,
    EvalRequest,
    GadgetRequest,
    MemberRequest,
    TranslateRequest,
    VerifyRequest,
    VerifyResponse,
)
from monoid_bench.api.workbench_service import WorkbenchService
from monoid_bench.checker.evaluator import Mode
from monoid_bench.checker.suites import SUITES
from monoid_bench.config.config_manager import ConfigManager, configure_logging
from monoid_bench.gadgets.catalogue import GADGETS
from monoid_bench.interpret.bundles import BUNDLES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


def _record(**fields: Any) -> str:
    """One machine-readable record: key=value pairs, values shell-quoted."""
    return " ".join(f"{key}={_value(value)}" for key, value in fields.items())


def _value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "''"
    if isinstance(value, (list, tuple)):
        value = ",".join(str(v) for v in value)
    return shlex.quote(str(value))


def _binding(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"Expected NAME=VALUE, got {text!r}")
    return name.strip(), value.strip()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--monoid', help='Monoid spec, e.g. free:x1,x2, '
                        'trace:x1,x2,x3;edges=x1-x3, bs:1,2, nat or lists')
    common.add_argument('--bound', type=int, help='Quantifier bound')
    common.add_argument('--mode', choices=[m.value for m in Mode], help='Evaluation mode')
    common.add_argument('--format', dest='output_format', choices=['text', 'lines'],
                        help='Human-readable text or key=value lines')
    common.add_argument('--workers', type=int, help='Worker threads for verification')

    parser = argparse.ArgumentParser(
        prog='monoid-bench',
        description='Bi-interpretability workbench for finitely generated monoids and the naturals')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('eval', parents=[common], help='Evaluate a formula')
    p.add_argument('formula')
    p.add_argument('--let', dest='bindings', type=_binding, action='append', default=[],
                   metavar='NAME=VALUE', help='Value of a free variable (repeatable)')

    p = commands.add_parser('gadget', parents=[common], help='Build a catalogue gadget',
                            epilog=f"Gadgets: {', '.join(GADGETS)}")
    p.add_argument('name')
    p.add_argument('args', nargs='*')
    p.add_argument('--check', action='store_true',
                   help='Also evaluate the formula at the built assignment')

    p = commands.add_parser('verify', parents=[common], help='Run a verification suite',
                            epilog=f"Suites: {', '.join(SUITES)}")
    p.add_argument('suite')
    p.add_argument('--max', dest='max_size', type=int, help='Size limit of the instances')
    p.add_argument('--seed', type=int, default=0, help='Seed of the randomized suites')
    p.add_argument('--save', metavar='NAME', help='Store the report under NAME')

    p = commands.add_parser('translate', parents=[common],
                            help='Translate a formula through an interpretation',
                            epilog=f"Interpretations: {', '.join(BUNDLES)}")
    p.add_argument('interpretation')
    p.add_argument('formula')

    p = commands.add_parser('member', parents=[common], help='Submonoid membership')
    p.add_argument('element')
    p.add_argument('generators', nargs='+')
    p.add_argument('--alphabet', help='Comma-separated generator names')

    p = commands.add_parser('classify', parents=[common], help='Quantifier level of a formula')
    p.add_argument('formula')

    p = commands.add_parser('code', parents=[common],
                        help='Code of a word over x1, x2, ... or of a tuple like (1,3,2)')
    p.add_argument('value')

    p = commands.add_parser('decode', parents=[common], help='Tuple and word of a code')
    p.add_argument('code', type=int)

    p = commands.add_parser('reports', parents=[common], help='List or show stored reports')
    p.add_argument('name', nargs='?')
    return parser


def _options(args: argparse.Namespace) -> dict[str, Any]:
    return {'monoid': args.monoid, 'bound': args.bound, 'mode': args.mode,
            'workers': args.workers}


def _print_report(report: VerifyResponse, lines: bool) -> None:
    if lines:
        print(_record(suite=report.suite, ok=report.ok, instances=report.instances,
                      failures=len(report.rows), scope=report.scope))
        for row in report.rows:
            print(_record(kind=row.kind, tuple=row.tuple))
        return
    for row in report.rows:
        print(f"{row.kind} {row.tuple}")
    if report.scope:
        print(f"scope: {report.scope}")
    if report.ok:
        print(f"{report.suite}: OK, {report.instances} instances")
    else:
        print(f"{report.suite}: {len(report.rows)} failures in {report.instances} instances")
    if report.storage_path:
        print(f"saved: {report.storage_path}")


def run_command(args: argparse.Namespace, service: WorkbenchService) -> int:
    lines = service.settings(output_format=args.output_format).output_format == 'lines'
    command = args.command

    if command == 'eval':
        result = service.evaluate(EvalRequest(formula=args.formula,
                                              bindings=dict(args.bindings),
                                              **_options(args)))
        if lines:
            print(_record(value=result.value, level=result.level, bound=result.bound,
                          nodes=result.nodes, quantifier_nodes=result.quantifier_nodes,
                          memo_hits=result.memo_hits, elapsed_ms=result.elapsed_ms))
        else:
            print("true" if result.value else "false")
            print(f"level {result.level}, bound {result.bound}, nodes {result.nodes}, "
                  f"quantifier nodes {result.quantifier_nodes}, memo hits {result.memo_hits}, "
                  f"{result.elapsed_ms:.1f} ms")
        return EXIT_OK

    if command == 'gadget':
        gadget = service.gadget(GadgetRequest(name=args.name, args=args.args, check=args.check,
                                              **_options(args)))
        if lines:
            print(_record(gadget=gadget.name, args=gadget.args, word=gadget.word,
                          witness_bound=gadget.witness_bound, level=gadget.level,
                          holds=gadget.holds, formula=gadget.formula))
            return EXIT_OK
        print(f"gadget: {gadget.name} {' '.join(gadget.args)}".rstrip())
        print(f"word: {gadget.word}")
        print(f"power notation: {gadget.pretty}")
        for name, value in gadget.assignment.items():
            print(f"  {name} = {value}")
        print(f"formula: {gadget.formula}")
        print(f"witness bound: {gadget.witness_bound}")
        if gadget.level:
            print(f"level: {gadget.level}")
        if gadget.holds is not None:
            print(f"holds: {'true' if gadget.holds else 'false'}")
        return EXIT_OK

    if command == 'verify':
        report = service.verify(VerifyRequest(suite=args.suite, max_size=args.max_size,
                                              seed=args.seed, save=args.save,
                                              **_options(args)))
        _print_report(report, lines)
        return EXIT_OK if report.ok else EXIT_FAILURES

    if command == 'translate':
        result = service.translate(TranslateRequest(interpretation=args.interpretation,
                                                    formula=args.formula, **_options(args)))
        if lines:
            print(_record(interpretation=result.interpretation,
                          source_level=result.source_level, target_level=result.target_level,
                          source=result.source, target=result.target))
        else:
            print(result.target)
            print(f"levels: {result.source_level} -> {result.target_level}")
        return EXIT_OK

    if command == 'member':
        alphabet = args.alphabet.split(',') if args.alphabet else None
        result = service.member(MemberRequest(element=args.element,
                                              generators=args.generators,
                                              alphabet=alphabet))
        if lines:
            print(_record(member=result.member, witness=result.witness,
                          indices=result.indices))
        else:
            print(f"yes {result.witness}" if result.member else "no")
        return EXIT_OK

    if command == 'classify':
        result = service.classify(ClassifyRequest(formula=args.formula))
        if lines:
            print(_record(level=result.ascii, prenex=result.prenex))
        else:
            print(result.level)
        return EXIT_OK

    if command == 'code':
        result = service.code(CodeRequest(value=args.value))
        if lines:
            print(_record(code=result.code, tuple=result.tuple))
        else:
            print(result.code)
        return EXIT_OK

    if command == 'decode':
        result = service.decode(DecodeRequest(code=args.code))
        entries = "(" + ",".join(str(e) for e in result.tuple) + ")"
        if lines:
            print(_record(tuple=entries, word=result.word))
        else:
            print(entries)
            if result.word is not None:
                print(result.word)
        return EXIT_OK

    if args.name is None:
        for name in service.list_reports():
            print(_record(report=name) if lines else name)
        return EXIT_OK
    try:
        report = service.get_report(args.name)
    except KeyError:
        raise ValueError(f"Report {args.name} not found") from None
    _print_report(report, lines)
    return EXIT_OK if report.ok else EXIT_FAILURES


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        config = ConfigManager()
        configure_logging(config)
        return run_command(args, WorkbenchService(config))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
