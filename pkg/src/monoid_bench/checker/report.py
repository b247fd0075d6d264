"""Verification reports: false positives and false negatives of a definition against an
expected extension, kept as a DataFrame and rendered as FP/FN/OK lines."""
from __future__ import annotations

import logging
from typing import Any, Iterable, Mapping, Optional, Sequence

import pandas as pd

from monoid_bench.checker.evaluator import Mode, WitnessHint, solutions
from monoid_bench.logic.formula import Formula
from monoid_bench.models.base_model import Structure
from monoid_bench.models.words import Word

logger = logging.getLogger(__name__)

COLUMNS = ["kind", "tuple"]


def format_tuple(values: Sequence[Any], structure: Optional[Structure] = None) -> str:
    parts = [structure.format_element(v) if structure is not None else str(v) for v in values]
    if len(parts) == 1:
        return parts[0]
    return "(" + ", ".join(parts) + ")"


def _sort_key(values: Sequence[Any]) -> tuple[Any, ...]:
    return tuple(v.sort_key() if isinstance(v, Word) else v for v in values)


class VerificationReport:
    """Rows of kind FP / FN with the offending tuple, plus the number of instances checked.

    `scope` says how candidates were drawn when a suite does not search every element up
    to its bound; empty when it does.
    """

    def __init__(self, name: str, instances: int = 0,
                 rows: Iterable[tuple[str, str]] = (), scope: str = ""):
        self.name = name
        self.instances = instances
        self.rows: list[tuple[str, str]] = list(rows)
        self.scope = scope

    @property
    def ok(self) -> bool:
        return not self.rows

    @property
    def false_positives(self) -> list[str]:
        return [t for kind, t in self.rows if kind == "FP"]

    @property
    def false_negatives(self) -> list[str]:
        return [t for kind, t in self.rows if kind == "FN"]

    def add(self, kind: str, value: str) -> None:
        if kind not in ("FP", "FN"):
            raise ValueError(f"Invalid report row kind: {kind}")
        self.rows.append((kind, value))

    def extend(self, other: VerificationReport) -> None:
        self.instances += other.instances
        self.rows.extend(other.rows)
        if other.scope and other.scope not in self.scope:
            self.scope = "; ".join(s for s in (self.scope, other.scope) if s)

    def lines(self) -> list[str]:
        if self.ok:
            return [f"OK {self.instances}"]
        return [f"{kind} {value}" for kind, value in self.rows]

    def to_text(self) -> str:
        return "\n".join(self.lines())

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.rows, columns=COLUMNS)
        frame.attrs["name"] = self.name
        frame.attrs["instances"] = self.instances
        frame.attrs["scope"] = self.scope
        return frame

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> VerificationReport:
        rows = [(str(kind), str(value)) for kind, value in zip(frame["kind"], frame["tuple"])]
        return cls(str(frame.attrs.get("name", "")), int(frame.attrs.get("instances", 0)), rows,
                   str(frame.attrs.get("scope", "")))

    def __repr__(self) -> str:
        return f"VerificationReport({self.name!r}, instances={self.instances}, rows={len(self.rows)})"


def check_definition(structure: Structure, f: Formula, variables: Sequence[str],
                     expected: Iterable[Sequence[Any]], bound: int,
                     mode: Mode = Mode.EXHAUSTIVE,
                     hints: Optional[Mapping[str, WitnessHint]] = None,
                     domains: Optional[Mapping[str, Iterable[Any]]] = None,
                     workers: int = 1, max_domain: int = 200_000,
                     name: str = "", scope: str = "") -> VerificationReport:
    """
    Compare the solutions of f against an expected set of tuples.

    Parameters:
    -----------
    structure : Structure
        Structure the formula is evaluated in
    f : Formula
        Candidate definition with free variables among `variables`
    variables : Sequence[str]
        Order of the tuple components
    expected : Iterable[Sequence]
        Intended extension, as tuples of elements
    bound : int
        Quantifier bound passed to the checker

    Returns:
    --------
    VerificationReport
        False positives in enumeration order, then false negatives in sorted order
    """
    wanted = {tuple(t) for t in expected}
    found = solutions(structure, f, variables, bound, mode, hints, domains, workers, max_domain)
    seen = set(found)
    report = VerificationReport(name, len(wanted | seen), scope=scope)
    for t in found:
        if t not in wanted:
            report.add("FP", format_tuple(t, structure))
    for t in sorted(wanted - seen, key=_sort_key):
        report.add("FN", format_tuple(t, structure))
    logger.debug("Checked %s: %d solutions, %d expected, %d mismatches",
                 name or "definition", len(found), len(wanted), len(report.rows))
    return report
