import logging
from functools import lru_cache
from math import gcd

import numpy as np
from marshmallow import ValidationError

from dto.divisor_dto import DivisorClassSchema
from dto.report_dto import CohomologySchema
from models.divisor import CurveKind, DivisorClass, canonical_class
from models.errors import InvariantViolation
from models.reports import CohomologyReport, ReductionReport, Verdict
from repositories.curve_repository import get_curve_repository

logger = logging.getLogger(__name__)


def iteration_cap(F):
    return 10 * (abs(F.d) + sum(abs(a) for a in F.m)) + 100


class CohomologyService:
    """h0, h1, h2 of divisor classes on the blow-up at eight general points.

    h0 comes from stripping exceptional fixed components until the class is
    nef (then Riemann-Roch is exact) or has negative degree (then it is empty).
    """

    def __init__(self, repository=None):
        self.repository = repository or get_curve_repository()
        self.K = canonical_class()
        self._h0 = lru_cache(maxsize=1 << 16)(self._compute_h0)
        self.divisor_schema = DivisorClassSchema()
        self.report_schema = CohomologySchema()

    def is_nef(self, F):
        return bool((self.repository.products(F) >= 0).all())

    def chi(self, F):
        twice = F.square() - F.dot(self.K)
        if twice % 2:
            raise InvariantViolation(f"F^2 - F.K is odd for {F.to_text()}")
        return twice // 2 + 1

    def fixed_component_reduction(self, F):
        original = F
        curves = self.repository.exceptional()
        cap = iteration_cap(F)
        subtracted = []
        for _ in range(cap):
            if F.d < 0:
                return ReductionReport(original, subtracted, F, Verdict.EMPTY)
            products = self.repository.products(F)
            negative = np.flatnonzero(products < 0)
            if negative.size == 0:
                return ReductionReport(original, subtracted, F, Verdict.NEF_RESIDUAL)
            k = int(negative[0])
            curve = curves[k]
            # one copy per rescan; removing E_i only moves m_i, so the curves
            # ahead of it in the table stay non-negative and its copies go at once
            copies = int(-products[k]) if curve.cls.d == 0 else 1
            F = F - copies * curve.cls
            if subtracted and subtracted[-1][0] == curve:
                copies += subtracted.pop()[1]
            subtracted.append((curve, copies))
        raise InvariantViolation(f"fixed component reduction of {original.to_text()} exceeded {cap} iterations")

    def _compute_h0(self, F):
        report = self.fixed_component_reduction(F)
        if report.verdict == Verdict.EMPTY:
            return 0
        return self.chi(report.residual)

    def h0(self, F):
        return self._h0(F)

    def h2(self, F):
        return self.h0(self.K - F)

    def h1(self, F):
        value = self.h0(F) - self.chi(F) + self.h2(F)
        if value < 0:
            raise InvariantViolation(f"negative h1 for {F.to_text()}")
        return value

    def special_h1_decomposition(self, F):
        """Return ``(r, H)`` with ``F = rH + K`` when h1(F) != 0, else None.

        Only defined when ``F . C >= -1`` for every exceptional curve C.
        """
        if (self.repository.products(F) < -1).any():
            raise ValidationError({"divisor": [f"{F.to_text()} meets some exceptional curve below -1"]})
        if self.h1(F) == 0:
            return None
        D = F - self.K
        r = 0
        for value in D.vector():
            r = gcd(r, value)
        H = DivisorClass(D.d // r, [a // r for a in D.m])
        curve = self.repository.find(H, CurveKind.SQUARE_ZERO)
        if curve is None or r < 2 or self.h1(F) != r - 1:
            raise InvariantViolation(f"h1({F.to_text()}) != 0 but F - K is not a multiple of a square-zero curve")
        return r, curve

    def report(self, F):
        special = None
        if not (self.repository.products(F) < -1).any():
            special = self.special_h1_decomposition(F)
        return CohomologyReport(
            cls=F,
            h0=self.h0(F),
            h1=self.h1(F),
            h2=self.h2(F),
            chi=self.chi(F),
            nef=self.is_nef(F),
            reduction=self.fixed_component_reduction(F),
            special=special,
        )

    def cohomology_payload(self, data):
        try:
            F = self.divisor_schema.load(data)
            logger.debug(f"Cohomology of {F.to_text()}")
            return self.report_schema.dump(self.report(F)), 0
        except ValidationError as err:
            return {"error": err.messages}, 1
