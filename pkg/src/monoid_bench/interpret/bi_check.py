"""Instance-level checks of interpretations: round trips through a pair of mutual
interpretations, truth preservation of translations, and quantifier-level inflation."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

from monoid_bench.checker.evaluator import Evaluator, Mode
from monoid_bench.checker.report import VerificationReport
from monoid_bench.interpret.interpretation import Interpretation, SignatureMismatchError, translate
from monoid_bench.logic.formula import Formula, to_text
from monoid_bench.logic.hierarchy import HierarchyLevel, classify

logger = logging.getLogger(__name__)

# graph(a, a**) decides whether the round-trip image belongs to the definable isomorphism
Graph = Callable[[Any, tuple[Any, ...]], bool]


def psi_map(value: Any) -> tuple[int, ...]:
    """
    Image of an element of the list superstructure after going through the free monoid
    and back: the tuple t becomes (1, 2^(t1+1)) (1, 1, 2^(t2+1)) ... read as one index
    tuple, the natural k becomes k ones, and the empty tuple becomes (2).
    """
    if isinstance(value, tuple):
        if not value:
            return (2,)
        result: list[int] = []
        for i, entry in enumerate(value, start=1):
            result += [1] * i + [2] * (entry + 1)
        return tuple(result)
    return (1,) * int(value)


def round_trip(first: Interpretation, second: Interpretation, value: Any) -> tuple[Any, ...]:
    """a** for a in the source of `first`, with `second` interpreting first's target back."""
    return tuple(c for b in first.encode(value) for c in second.encode(b))


def check_bi_interpretation(first: Interpretation, second: Interpretation,
                            instances: Sequence[Any], graph: Optional[Graph] = None,
                            workers: int = 1, name: str = "") -> VerificationReport:
    """
    Check the round trip a -> a* -> a** on every instance.

    Parameters:
    -----------
    first : Interpretation
        A in B
    second : Interpretation
        B in A
    instances : Sequence
        Elements of A to check
    graph : callable, optional
        Decides (a, a**) is in the graph of the definable isomorphism
    workers : int
        Threads the instances are spread over

    Returns:
    --------
    VerificationReport
        An FN row for every instance whose round trip does not decode back or whose pair
        the graph rejects
    """
    if first.target_signature != second.source_signature or \
            second.target_signature != first.source_signature:
        raise SignatureMismatchError(f"{first.name} and {second.name} are not mutual")
    size = second.dimension

    def check(value: Any) -> bool:
        image = round_trip(first, second, value)
        middle = [second.decode(image[k:k + size]) for k in range(0, len(image), size)]
        if not first.source.equal(first.decode(middle), value):
            return False
        return graph is None or graph(value, image)

    if workers > 1 and len(instances) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, instances))
    else:
        results = [check(value) for value in instances]
    report = VerificationReport(name or f"{first.name}/{second.name}", len(instances))
    for value, ok in zip(instances, results):
        if not ok:
            report.add("FN", first.source.format_element(value))
    logger.info("Round trip %s: %d instances, %d failures",
                report.name, len(instances), len(report.rows))
    return report


@dataclass
class TranslationCheck:
    source_level: HierarchyLevel
    target_level: HierarchyLevel
    source_value: bool
    target_value: bool

    @property
    def agrees(self) -> bool:
        return self.source_value == self.target_value

    @property
    def inflation(self) -> int:
        return self.target_level.rank - self.source_level.rank


def check_sentence(interpretation: Interpretation, sentence: Formula, source_bound: int,
                   mode: Mode = Mode.WITNESS, target_bound: Optional[int] = None,
                   max_domain: int = 200_000) -> TranslationCheck:
    """Evaluate a closed source formula directly and through the interpretation."""
    source_value = Evaluator(interpretation.source, source_bound, Mode.EXHAUSTIVE,
                             max_domain=max_domain).evaluate(sentence, {})
    translation = translate(sentence, interpretation)
    bound = target_bound if target_bound is not None else interpretation.target_bound(source_bound)
    target_value = Evaluator(interpretation.target, bound, mode, translation.hints,
                             max_domain).evaluate(translation.formula, {})
    return TranslationCheck(classify(sentence), classify(translation.formula),
                            source_value, target_value)


def check_translation(interpretation: Interpretation, corpus: Sequence[Formula],
                      source_bound: int, mode: Mode = Mode.WITNESS,
                      target_bound: Optional[int] = None, max_domain: int = 200_000,
                      name: str = "translation") -> VerificationReport:
    """One row per corpus sentence whose truth value the translation does not preserve:
    FP when only the translation holds, FN when only the source sentence does."""
    report = VerificationReport(name, len(corpus))
    for sentence in corpus:
        result = check_sentence(interpretation, sentence, source_bound, mode, target_bound,
                                max_domain)
        if not result.agrees:
            report.add("FP" if result.target_value else "FN", to_text(sentence))
    return report


def measure_level_inflation(interpretation: Interpretation, corpus: Sequence[Formula]) -> int:
    """Largest increase in quantifier blocks a translation adds over the corpus."""
    inflation = 0
    for f in corpus:
        translated = translate(f, interpretation).formula
        inflation = max(inflation, classify(translated).rank - classify(f).rank)
    logger.info("Level inflation of %s over %d formulas: %d",
                interpretation.name, len(corpus), inflation)
    return inflation
