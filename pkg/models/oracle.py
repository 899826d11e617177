from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class OracleInstance:
    """Eight random points of the affine chart z = 1 over GF(prime)."""
    prime: int
    seed: int
    points: tuple


@dataclass(frozen=True)
class ComparisonRow:
    mults: tuple
    seed: int
    t: int
    engine_h: int
    oracle_h: int
    engine_ker: int
    oracle_ker: int
    engine_cok: int
    oracle_cok: int

    @property
    def match(self):
        return (self.engine_h, self.engine_ker, self.engine_cok) == (self.oracle_h, self.oracle_ker, self.oracle_cok)


@dataclass(frozen=True)
class OracleReport:
    mults: tuple
    prime: int
    seed: int
    t_max: int
    rows: list = field(default_factory=list)
    first_mismatch: Optional[int] = None
    resolution_match: bool = True

    @property
    def success(self):
        return self.first_mismatch is None and self.resolution_match
