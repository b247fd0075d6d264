import logging
import re
import time
from typing import Optional

from monoid_bench.api.schemas import (
    ClassifyRequest,
    ClassifyResponse,
    CodeRequest,
    CodeResponse,
    DecodeRequest,
    DecodeResponse,
    EvalRequest,
    EvalResponse,
    GadgetRequest,
    GadgetResponse,
    MemberRequest,
    MemberResponse,
    ReportRow,
    TranslateRequest,
    TranslateResponse,
    VerifyRequest,
    VerifyResponse,
    WorkbenchOptions,
)
from monoid_bench.arith.coding import decode_tuple, encode_tuple, tuple_to_monomial, word_code
from monoid_bench.arith.membership import submonoid_member
from monoid_bench.arith.superstructure import parse_nat_tuple
from monoid_bench.checker.evaluator import Evaluator
from monoid_bench.checker.report import VerificationReport
from monoid_bench.checker.suites import SuiteOptions, run_suite
from monoid_bench.config.config_manager import ConfigManager, WorkbenchConfig
from monoid_bench.gadgets.catalogue import get_gadget
from monoid_bench.interpret.bundles import get_interpretation
from monoid_bench.interpret.interpretation import translate
from monoid_bench.logic.formula import to_text
from monoid_bench.logic.hierarchy import classify
from monoid_bench.logic.parser import parse
from monoid_bench.logic.prenex import prenex_normal_form
from monoid_bench.models.monoid_factory import create_monoid, create_structure
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.words import Alphabet, Word
from monoid_bench.storage.local_storage import LocalStorage
from monoid_bench.storage.storage_interface import StorageInterface

logger = logging.getLogger(__name__)

_STANDARD_LETTER = re.compile(r"^x([1-9][0-9]*)$")


class WorkbenchService:
    """Runs workbench commands for the CLI and the HTTP API."""

    def __init__(self, config: Optional[ConfigManager] = None):
        self._config = config or ConfigManager()

    def settings(self, options: Optional[WorkbenchOptions] = None,
                 output_format: Optional[str] = None) -> WorkbenchConfig:
        """Environment configuration with the request's overrides applied."""
        options = options or WorkbenchOptions()
        return self._config.workbench(
            monoid=options.monoid,
            bound=options.bound,
            mode=options.mode,
            workers=options.workers,
            output_format=output_format,
        )

    def _get_storage(self) -> StorageInterface:
        return LocalStorage(self._config)

    def _monoid(self, spec: str) -> Optional[MonoidModel]:
        """The monoid a spec names, or None for the naturals and the list superstructure."""
        structure = create_structure(spec)
        return structure if isinstance(structure, MonoidModel) else None

    def evaluate(self, request: EvalRequest) -> EvalResponse:
        settings = self.settings(request)
        structure = create_structure(settings.monoid)
        formula = parse(request.formula, structure.signature)
        assignment = {name: structure.parse_element(text)
                      for name, text in request.bindings.items()}
        evaluator = Evaluator(structure, settings.bound, settings.mode,
                              max_domain=settings.max_domain)
        start = time.perf_counter()
        value = evaluator.evaluate(formula, assignment)
        elapsed = (time.perf_counter() - start) * 1000
        logger.debug("Evaluated in %s at bound %d: %s", structure, settings.bound, value)
        return EvalResponse(
            value=value,
            structure=str(structure),
            bound=settings.bound,
            level=str(classify(formula)),
            nodes=evaluator.stats.nodes,
            quantifier_nodes=evaluator.stats.quantifier_nodes,
            memo_hits=evaluator.stats.memo_hits,
            elapsed_ms=round(elapsed, 3),
        )

    def gadget(self, request: GadgetRequest) -> GadgetResponse:
        settings = self.settings(request)
        gadget = get_gadget(request.name)
        model = create_monoid(settings.monoid)
        instance = gadget.instantiate(request.args, model)
        holds = None
        if request.check:
            holds = instance.holds(model, settings.mode, settings.max_domain)
        return GadgetResponse(
            name=gadget.name,
            args=list(instance.args),
            word=model.format_element(instance.word),
            pretty=model.format_element(instance.word, pretty=True),
            assignment={name: model.format_element(value)
                        for name, value in instance.assignment.items()},
            formula=instance.text,
            witness_bound=instance.witness_bound,
            level=gadget.level,
            holds=holds,
        )

    def verify(self, request: VerifyRequest) -> VerifyResponse:
        settings = self.settings(request)
        options = SuiteOptions(
            max_size=request.max_size,
            mode=settings.mode,
            workers=settings.workers,
            max_domain=settings.max_domain,
            seed=request.seed,
        )
        report = run_suite(request.suite, options)
        storage_path = None
        if request.save:
            storage_path = self._get_storage().save(request.save, report.to_frame())
        return self._report_response(report, storage_path)

    def list_reports(self) -> list[str]:
        return self._get_storage().list_keys()

    def get_report(self, name: str) -> VerifyResponse:
        """Stored report; KeyError when there is none of that name."""
        report = VerificationReport.from_frame(self._get_storage().load(name))
        return self._report_response(report)

    def _report_response(self, report: VerificationReport,
                         storage_path: Optional[str] = None) -> VerifyResponse:
        return VerifyResponse(
            suite=report.name,
            ok=report.ok,
            instances=report.instances,
            rows=[ReportRow(kind=kind, tuple=value) for kind, value in report.rows],
            scope=report.scope,
            storage_path=storage_path,
        )

    def translate(self, request: TranslateRequest) -> TranslateResponse:
        # Bundles carry their own default monoid; only an explicit --monoid replaces it.
        model = self._monoid(request.monoid) if request.monoid else None
        interpretation = get_interpretation(request.interpretation, model)
        source = parse(request.formula, interpretation.source_signature)
        translation = translate(source, interpretation)
        return TranslateResponse(
            interpretation=interpretation.name,
            source=to_text(source),
            target=to_text(translation.formula),
            source_level=str(classify(source)),
            target_level=str(classify(translation.formula)),
            variables={name: list(targets) for name, targets in translation.variables.items()},
        )

    def member(self, request: MemberRequest) -> MemberResponse:
        texts = [request.element, *request.generators]
        if request.alphabet:
            alphabet = Alphabet(tuple(request.alphabet))
            letters = [_word_letters(text, alphabet.names) for text in texts]
        else:
            letters = _infer_letters(texts)
            names = tuple(dict.fromkeys(name for word in letters for name in word))
            alphabet = Alphabet(names or ("a",))
        words = [alphabet.word(word) for word in letters]
        result = submonoid_member(words[0], words[1:])
        return MemberResponse(member=result.member, witness=result.witness(),
                              indices=result.indices)

    def classify(self, request: ClassifyRequest) -> ClassifyResponse:
        formula = parse(request.formula)
        level = classify(formula)
        return ClassifyResponse(level=str(level), ascii=level.ascii,
                                prenex=to_text(prenex_normal_form(formula)))

    def code(self, request: CodeRequest) -> CodeResponse:
        text = request.value.strip()
        if text.startswith("("):
            entries = parse_nat_tuple(text)
            return CodeResponse(code=encode_tuple(entries), tuple=list(entries))
        word = _standard_word(text)
        code = word_code(word)
        return CodeResponse(code=code, tuple=list(decode_tuple(code)))

    def decode(self, request: DecodeRequest) -> DecodeResponse:
        entries = decode_tuple(request.code)
        word = None
        if all(e >= 1 for e in entries):
            alphabet = Alphabet.standard(max(entries, default=1))
            word = str(tuple_to_monomial(entries, alphabet))
        return DecodeResponse(tuple=list(entries), word=word)


def _word_letters(text: str, known: tuple[str, ...]) -> tuple[str, ...]:
    """Letters of a dotted word; an undotted token that is not a known letter and
    consists of letters only is read one character per generator."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    if "." in text:
        return tuple(part.strip() for part in text.split("."))
    if text in known or not text.isalpha():
        return (text,)
    return tuple(text)


def _infer_letters(texts: list[str]) -> list[tuple[str, ...]]:
    known = tuple(dict.fromkeys(part.strip() for text in texts if "." in text
                                for part in text.split(".")))
    return [_word_letters(text, known) for text in texts]


def _standard_word(text: str) -> Word:
    """A word over x1, x2, ...; its code does not depend on the alphabet size."""
    letters = _word_letters(text, ())
    indices = []
    for name in letters:
        match = _STANDARD_LETTER.match(name)
        if match is None:
            raise ValueError(f"Generators must be named x1, x2, ...: {name}")
        indices.append(int(match.group(1)))
    return Alphabet.standard(max(indices, default=1)).word(letters)
