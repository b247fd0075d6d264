"""Bounded first-order evaluation over monoids and the naturals.

Quantifiers range over the elements of size <= bound; term evaluation is always exact. In
witness mode a hinted existential takes the hinted witnesses whatever their size, and the
guarded quantifiers beneath it range up to the size of that witness. Unguarded domains
always stop at the bound.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from monoid_bench.logic.formula import (
    And, Concat, Equal, Exists, Forall, Formula, Implies, Not, Or, Pred, Term, Var,
    free_vars, term_vars,
)
from monoid_bench.models.base_model import TARGET, Item, Structure

logger = logging.getLogger(__name__)

# A hint sees only the free variables of the quantifier it names.
WitnessHint = Callable[[Mapping[str, Any], Structure], Iterable[Any]]
Conjunct = tuple[Formula, frozenset[str], frozenset[str]]


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    WITNESS = "witness"


class UnboundVariableError(ValueError):
    """A free variable of the formula has no value."""


class EvaluationError(ValueError):
    """The bounded search cannot be carried out as requested."""


@dataclass
class EvalStats:
    nodes: int = 0
    quantifier_nodes: int = 0
    memo_hits: int = 0
    candidates: int = 0
    pruned: int = 0

    def merge(self, other: EvalStats) -> None:
        self.nodes += other.nodes
        self.quantifier_nodes += other.quantifier_nodes
        self.memo_hits += other.memo_hits
        self.candidates += other.candidates
        self.pruned += other.pruned


class Evaluator:
    """Evaluates formulas in one structure at one bound, memoizing quantifier nodes."""

    def __init__(self, structure: Structure, bound: int, mode: Mode = Mode.EXHAUSTIVE,
                 hints: Optional[Mapping[str, WitnessHint]] = None,
                 max_domain: int = 200_000):
        if bound < 0:
            raise ValueError("Bound must be non-negative")
        self.structure = structure
        self.bound = bound
        self.mode = Mode(mode)
        self.hints = dict(hints or {})
        self.max_domain = max_domain
        self.stats = EvalStats()
        self._ceiling = bound
        self._memo: dict[tuple[Any, ...], bool] = {}
        self._analysis: dict[int, tuple[Formula, tuple[str, ...], tuple[Conjunct, ...]]] = {}
        self._disjuncts: dict[tuple[int, str, frozenset[str]], tuple[Formula, list[Conjunct]]] = {}

    def evaluate(self, f: Formula, assignment: Mapping[str, Any]) -> bool:
        missing = free_vars(f) - set(assignment)
        if missing:
            raise UnboundVariableError(f"Unbound free variables: {', '.join(sorted(missing))}")
        return self._eval(f, dict(assignment))

    # -- evaluation -------------------------------------------------------------------

    def _eval(self, f: Formula, a: dict[str, Any]) -> bool:
        self.stats.nodes += 1
        if isinstance(f, Equal):
            return self.structure.equal(self.structure.evaluate_term(f.left, a),
                                        self.structure.evaluate_term(f.right, a))
        if isinstance(f, And):
            return self._eval(f.left, a) and self._eval(f.right, a)
        if isinstance(f, Not):
            return not self._eval(f.body, a)
        if isinstance(f, Or):
            return self._eval(f.left, a) or self._eval(f.right, a)
        if isinstance(f, Implies):
            return (not self._eval(f.left, a)) or self._eval(f.right, a)
        if isinstance(f, Pred):
            return self.structure.holds(f, a)
        return self._quantifier(f, a)

    def _quantifier(self, f: Formula, a: dict[str, Any]) -> bool:
        assert isinstance(f, (Exists, Forall))
        self.stats.quantifier_nodes += 1
        _, scope, conjuncts = self._analyse(f)
        key = (id(f), self._ceiling) + tuple(a[name] for name in scope)
        cached = self._memo.get(key)
        if cached is not None:
            self.stats.memo_hits += 1
            return cached
        is_exists = isinstance(f, Exists)
        result = not is_exists
        name = f.var
        hinted = self.mode is Mode.WITNESS and is_exists and name in self.hints
        ceiling = self._ceiling
        missing = object()
        saved = a.get(name, missing)
        try:
            for candidate in self._candidates(f, a, scope, conjuncts):
                a[name] = candidate
                if not self._passes(name, conjuncts, a):
                    continue
                if hinted:
                    self._ceiling = max(ceiling, self.structure.size(candidate))
                if self._eval(f.body, a) is is_exists:
                    result = is_exists
                    break
        finally:
            self._ceiling = ceiling
            if saved is missing:
                a.pop(name, None)
            else:
                a[name] = saved
        self._memo[key] = result
        return result

    def _analyse(self, f: Formula) -> tuple[Formula, tuple[str, ...], tuple[Conjunct, ...]]:
        entry = self._analysis.get(id(f))
        if entry is not None and entry[0] is f:
            return entry
        assert isinstance(f, (Exists, Forall))
        if isinstance(f, Exists):
            parts = positive_conjuncts(f.body, f.var, frozenset())
        else:
            parts = vacuity_conjuncts(f.body, f.var, frozenset())
        entry = (f, tuple(sorted(free_vars(f))), tuple(parts))
        self._analysis[id(f)] = entry
        return entry

    # -- candidate generation ---------------------------------------------------------

    def _candidates(self, f: Formula, a: dict[str, Any], scope: Sequence[str],
                    conjuncts: Sequence[Conjunct]) -> Iterable[Any]:
        assert isinstance(f, (Exists, Forall))
        name = f.var
        if self.mode is Mode.WITNESS and isinstance(f, Exists) and name in self.hints:
            visible = {v: a[v] for v in scope}
            return _unique(self.hints[name](visible, self.structure))
        guarded = self.guard(name, conjuncts, a)
        if guarded is not None:
            self.stats.candidates += len(guarded)
            return guarded
        return self.domain(name)

    def domain(self, name: str) -> Iterable[Any]:
        size = self.structure.domain_size(self.bound)
        if size > self.max_domain:
            raise EvaluationError(
                f"Quantifier over '{name}' has an unguarded domain of {size} elements "
                f"at bound {self.bound} (limit {self.max_domain})")
        logger.debug("Enumerating %d elements for %s", size, name)
        self.stats.candidates += size
        return self.structure.domain(self.bound)

    def guard(self, name: str, conjuncts: Sequence[Conjunct],
              a: Mapping[str, Any]) -> Optional[list[Any]]:
        """Finite candidate list for `name` implied by the conjuncts, or None.

        Exact, prefix and suffix pins are intersected first; factor pins are only computed
        when nothing narrower applies, and commutation pins come last. Candidates larger
        than the current bound are dropped.
        """
        finite: Optional[list[Any]] = None
        commuting: Optional[list[Any]] = None
        deferred: list[tuple[list[Item], Any]] = []
        for g, _, inner in conjuncts:
            found: Optional[list[Any]] = None
            if isinstance(g, Equal):
                pinned = self._equation_items(name, g, inner, a)
                if pinned is not None:
                    items, ground = pinned
                    if _is_factor_pin(items):
                        deferred.append(pinned)
                        continue
                    found = self.structure.pin_candidates(items, ground)
                elif commuting is None:
                    commuting = self._commutation_guard(name, g, inner, a)
            elif isinstance(g, Or):
                found = self._union_guard(name, g, inner, a)
            if found is None:
                continue
            finite = found if finite is None else _intersect(finite, found)
            if not finite:
                return []
        if finite is None:
            for items, ground in deferred:
                found = self.structure.pin_candidates(items, ground)
                if found is None:
                    continue
                finite = found if finite is None else _intersect(finite, found)
                if not finite:
                    return []
        if finite is not None:
            return self._within(finite)
        return commuting

    def _union_guard(self, name: str, g: Or, inner: frozenset[str],
                     a: Mapping[str, Any]) -> Optional[list[Any]]:
        result: list[Any] = []
        for disjunct in _disjuncts(g):
            found = self.guard(name, self._disjunct_conjuncts(disjunct, name, inner), a)
            if found is None:
                return None
            result.extend(found)
        return _unique(result)

    def _disjunct_conjuncts(self, f: Formula, name: str,
                            inner: frozenset[str]) -> list[Conjunct]:
        key = (id(f), name, inner)
        entry = self._disjuncts.get(key)
        if entry is None or entry[0] is not f:
            entry = (f, positive_conjuncts(f, name, inner))
            self._disjuncts[key] = entry
        return entry[1]

    def _known(self, term: Term, name: str, inner: frozenset[str], a: Mapping[str, Any]) -> bool:
        return all(v != name and v not in inner and v in a for v in term_vars(term))

    def _equation_items(self, name: str, g: Equal, inner: frozenset[str],
                        a: Mapping[str, Any]) -> Optional[tuple[list[Item], Any]]:
        """The side holding `name` as a list of items, and the value of the other side."""
        for side, other in ((g.left, g.right), (g.right, g.left)):
            if name not in term_vars(side) or not self._known(other, name, inner, a):
                continue
            parts = side.parts if isinstance(side, Concat) else (side,)
            items: list[Item] = []
            for part in parts:
                if isinstance(part, Var) and part.name == name:
                    items.append(TARGET)
                elif self._known(part, name, inner, a):
                    items.append(self.structure.evaluate_term(part, a))
                else:
                    items.append(None)
            if TARGET not in items:
                continue
            return items, self.structure.evaluate_term(other, a)
        return None

    def _commutation_guard(self, name: str, g: Equal, inner: frozenset[str],
                           a: Mapping[str, Any]) -> Optional[list[Any]]:
        left, right = g.left, g.right
        if not (isinstance(left, Concat) and isinstance(right, Concat)):
            return None
        if len(left.parts) != 2 or len(right.parts) != 2:
            return None
        target = Var(name)
        if left.parts[0] == target and right.parts[1] == target:
            c, d = left.parts[1], right.parts[0]
        elif left.parts[1] == target and right.parts[0] == target:
            c, d = left.parts[0], right.parts[1]
        else:
            return None
        if not (self._known(c, name, inner, a) and self._known(d, name, inner, a)):
            return None
        value = self.structure.evaluate_term(c, a)
        if not self.structure.equal(value, self.structure.evaluate_term(d, a)):
            return None
        return self.structure.commuting_candidates(value, self._ceiling)

    def _within(self, found: list[Any]) -> list[Any]:
        kept = [x for x in found if self.structure.size(x) <= self._ceiling]
        self.stats.pruned += len(found) - len(kept)
        return kept

    def _passes(self, name: str, conjuncts: Sequence[Conjunct], a: Mapping[str, Any]) -> bool:
        """False when a fully bound conjunct already decides the candidate away."""
        for g, variables, inner in conjuncts:
            if name not in variables or variables & inner:
                continue
            if all(v in a for v in variables) and not self._eval(g, a):  # type: ignore[arg-type]
                self.stats.pruned += 1
                return False
        return True


def positive_conjuncts(f: Formula, name: str, inner: frozenset[str]) -> list[Conjunct]:
    """Conjuncts that must all hold for f to hold, looking through nested existentials."""
    if isinstance(f, And):
        return positive_conjuncts(f.left, name, inner) + positive_conjuncts(f.right, name, inner)
    if isinstance(f, Exists):
        if f.var == name:
            return []
        return positive_conjuncts(f.body, name, inner | {f.var})
    return [(f, frozenset(free_vars(f)), inner)]


def vacuity_conjuncts(f: Formula, name: str, inner: frozenset[str]) -> list[Conjunct]:
    """Conjuncts whose failure makes f true, looking through nested universals."""
    if isinstance(f, Implies):
        return positive_conjuncts(f.left, name, inner) + vacuity_conjuncts(f.right, name, inner)
    if isinstance(f, Forall):
        if f.var == name:
            return []
        return vacuity_conjuncts(f.body, name, inner | {f.var})
    if isinstance(f, Not):
        return positive_conjuncts(f.body, name, inner)
    if isinstance(f, Or) and isinstance(f.left, Not):
        return positive_conjuncts(f.left.body, name, inner) + vacuity_conjuncts(f.right, name, inner)
    return []


def _is_factor_pin(items: Sequence[Item]) -> bool:
    index = next(i for i, item in enumerate(items) if item is TARGET)
    return (any(item is None for item in items[:index])
            and any(item is None or item is TARGET for item in items[index + 1:]))


def _intersect(found: list[Any], other: list[Any]) -> list[Any]:
    allowed = set(other)
    return [x for x in found if x in allowed]


def _disjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, Or):
        return _disjuncts(f.left) + _disjuncts(f.right)
    return [f]


def _unique(values: Iterable[Any]) -> list[Any]:
    seen: set[Any] = set()
    result: list[Any] = []
    for value in values:
        if value not in seen:
            seen.add(value)
            result.append(value)
    return result


def evaluate(structure: Structure, f: Formula, assignment: Mapping[str, Any], bound: int,
             mode: Mode = Mode.EXHAUSTIVE, hints: Optional[Mapping[str, WitnessHint]] = None,
             max_domain: int = 200_000) -> bool:
    """
    Truth value of f under the assignment with quantifiers bounded by `bound`.

    Parameters:
    -----------
    structure : Structure
        Monoid model or the naturals
    f : Formula
        Formula over the structure's signature
    assignment : Mapping[str, Any]
        Values for every free variable of f
    bound : int
        Maximum size of quantified elements
    mode : Mode, optional
        `witness` lets existentials over hinted variables range over the hints
    hints : Mapping[str, WitnessHint], optional
        Witness candidates per bound variable name

    Returns:
    --------
    bool
    """
    return Evaluator(structure, bound, mode, hints, max_domain).evaluate(f, assignment)


def solutions(structure: Structure, f: Formula, variables: Sequence[str], bound: int,
              mode: Mode = Mode.EXHAUSTIVE, hints: Optional[Mapping[str, WitnessHint]] = None,
              domains: Optional[Mapping[str, Iterable[Any]]] = None, workers: int = 1,
              max_domain: int = 200_000) -> list[tuple[Any, ...]]:
    """All tuples of elements of size <= bound (or from the given per-variable domains)
    satisfying f, in enumeration order."""
    variables = list(variables)
    missing = free_vars(f) - set(variables)
    if missing:
        raise UnboundVariableError(f"Unbound free variables: {', '.join(sorted(missing))}")
    if workers < 1:
        raise ValueError("Number of workers must be positive")
    if not variables:
        value = evaluate(structure, f, {}, bound, mode, hints, max_domain)
        return [()] if value else []
    domains = {k: list(v) for k, v in (domains or {}).items()}
    top = positive_conjuncts(f, "", frozenset())

    def candidates(evaluator: Evaluator, name: str, a: dict[str, Any]) -> list[Any]:
        if name in domains:
            return domains[name]
        conjuncts = [(g, fv, inner) for g, fv, inner in top]
        found = evaluator.guard(name, conjuncts, a)
        if found is not None:
            return found
        return list(evaluator.domain(name))

    def search(evaluator: Evaluator, index: int, a: dict[str, Any],
               out: list[tuple[Any, ...]], first: Optional[Sequence[Any]] = None) -> None:
        name = variables[index]
        pool = first if first is not None else candidates(evaluator, name, a)
        for value in pool:
            a[name] = value
            if not evaluator._passes(name, top, a):
                continue
            if index + 1 < len(variables):
                search(evaluator, index + 1, a, out)
            elif evaluator.evaluate(f, a):
                out.append(tuple(a[v] for v in variables))
        a.pop(name, None)

    def run(chunk: Sequence[Any]) -> tuple[list[tuple[Any, ...]], EvalStats]:
        evaluator = Evaluator(structure, bound, mode, hints, max_domain)
        out: list[tuple[Any, ...]] = []
        search(evaluator, 0, {}, out, chunk)
        return out, evaluator.stats

    seed = Evaluator(structure, bound, mode, hints, max_domain)
    first_pool = candidates(seed, variables[0], {})
    if workers == 1 or len(first_pool) < 2:
        found, _ = run(first_pool)
        return found
    size = -(-len(first_pool) // workers)
    chunks = [first_pool[i:i + size] for i in range(0, len(first_pool), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, chunks))
    merged: list[tuple[Any, ...]] = []
    for found, _ in results:
        merged.extend(found)
    return merged
