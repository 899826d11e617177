from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from models.divisor import CurveClass, DivisorClass


class Verdict(str, Enum):
    NEF_RESIDUAL = "nef_residual"
    EMPTY = "empty"


@dataclass(frozen=True)
class ReductionReport:
    original: DivisorClass
    subtracted: list
    residual: DivisorClass
    verdict: Verdict


class DispatchCase(str, Enum):
    H0_ZERO = "h0_zero"
    CASE_A = "case_a"
    CASE_B_STEP = "case_b_step"
    CASE_C_I = "case_c_i"
    CASE_C_II = "case_c_ii"
    CASE_C_III_MAXRANK = "case_c_iii_maxrank"


@dataclass(frozen=True)
class DispatchEvent:
    case: DispatchCase
    cls: DivisorClass
    h0: int
    h0_next: int
    ker: int = 0
    cok: int = 0
    curve: Optional[CurveClass] = None
    r: Optional[int] = None


@dataclass(frozen=True)
class MuRankReport:
    cls: DivisorClass
    ker: int
    cok: int
    trace: list = field(default_factory=list)

    @property
    def case(self):
        return self.trace[-1].case if self.trace else None


@dataclass(frozen=True)
class QLReport:
    cls: DivisorClass
    q: int
    l: int
    q_star: int
    l_star: int


@dataclass(frozen=True)
class CohomologyReport:
    cls: DivisorClass
    h0: int
    h1: int
    h2: int
    chi: int
    nef: bool
    reduction: ReductionReport
    special: Optional[tuple] = None
