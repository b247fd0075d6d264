from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from monoid_bench.logic.formula import Exists, Forall, Formula
from monoid_bench.logic.prenex import prenex_normal_form

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class Side(str, Enum):
    SIGMA = "Sigma"
    PI = "Pi"
    QUANTIFIER_FREE = "QF"


@dataclass(frozen=True)
class HierarchyLevel:
    side: Side
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.side is Side.QUANTIFIER_FREE:
            if self.n is not None:
                raise ValueError("Quantifier-free level has no alternation count")
        elif self.n is None or self.n < 1:
            raise ValueError("Sigma/Pi levels need n >= 1")

    @property
    def rank(self) -> int:
        """Number of quantifier blocks; 0 for quantifier-free."""
        return self.n or 0

    @property
    def ascii(self) -> str:
        if self.side is Side.QUANTIFIER_FREE:
            return "QF"
        return f"{self.side.value}_{self.n}"

    def __str__(self) -> str:
        if self.side is Side.QUANTIFIER_FREE:
            return "QF"
        letter = "Σ" if self.side is Side.SIGMA else "Π"
        return letter + str(self.n).translate(_SUBSCRIPTS)


def classify(f: Formula) -> HierarchyLevel:
    """Sigma/Pi level from the quantifier blocks of the prenex form."""
    f = prenex_normal_form(f)
    blocks = 0
    first: Optional[type] = None
    previous: Optional[type] = None
    while isinstance(f, (Exists, Forall)):
        if type(f) is not previous:
            blocks += 1
            previous = type(f)
            if first is None:
                first = previous
        f = f.body
    if first is None:
        return HierarchyLevel(Side.QUANTIFIER_FREE)
    return HierarchyLevel(Side.SIGMA if first is Exists else Side.PI, blocks)
