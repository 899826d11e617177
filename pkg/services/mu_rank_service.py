import logging
from dataclasses import replace

import numpy as np
from marshmallow import ValidationError

from dto.divisor_dto import DivisorClassSchema
from dto.report_dto import MuRankReportSchema, QLReportSchema
from models.divisor import CurveKind, DivisorClass, monotone_normalize
from models.errors import InvariantViolation
from models.reports import DispatchCase, DispatchEvent, MuRankReport, QLReport
from services.cohomology_service import CohomologyService, iteration_cap

logger = logging.getLogger(__name__)

L = DivisorClass.line()
E1 = DivisorClass.exceptional(1)
E2 = DivisorClass.exceptional(2)

# (d, sorted multiplicities) -> splitting type of the restricted kernel bundle
SPECIAL_SPLITTINGS = {
    (4, (3, 1, 1, 1, 1, 1, 1, 1)): (1, 3),
    (8, (3, 3, 3, 3, 3, 3, 3, 1)): (3, 5),
    (10, (4, 4, 4, 4, 3, 3, 3, 3)): (5, 5),
    (11, (4, 4, 4, 4, 4, 4, 4, 3)): (5, 6),
}


def _h0_line(n):
    return max(0, n + 1)


def _h1_line(n):
    return max(0, -n - 1)


class MuRankService:
    """Kernel and cokernel of the multiplication map ``H0(F) x H0(L) -> H0(F + L)``."""

    def __init__(self, cohomology=None):
        self.cohomology = cohomology or CohomologyService()
        self.repository = self.cohomology.repository
        self.divisor_schema = DivisorClassSchema()
        self.report_schema = MuRankReportSchema()
        self.ql_schema = QLReportSchema()

    def ql_report(self, F):
        if not F.is_monotone():
            raise ValidationError({"divisor": [f"{F.to_text()} is not monotone"]})
        A, B = F - E1, F - (L - E1)
        h = self.cohomology
        return QLReport(F, h.h0(A), h.h0(B), h.h1(A), h.h1(B))

    def expected_cokernel(self, F):
        return max(0, self.cohomology.h0(F + L) - 3 * self.cohomology.h0(F))

    def ql_bounds(self, F):
        """Upper bounds ``(ker, cok)`` from q, l, q*, l*; the cokernel bound needs F effective with h1(F) = 0."""
        ql = self.ql_report(F)
        cok_bound = None
        if self.cohomology.h0(F) > 0 and self.cohomology.h1(F) == 0:
            cok_bound = ql.q_star + ql.l_star
        return ql.q + ql.l, cok_bound

    def mu_rank(self, F):
        h = self.cohomology
        cap = iteration_cap(F)
        current, _ = monotone_normalize(F)
        pending = []
        curves = self.repository.exceptional()
        lam, Lam = self.repository.thresholds()

        for _ in range(cap):
            h0, h0_next = h.h0(current), h.h0(current + L)
            if h0 == 0:
                event = DispatchEvent(DispatchCase.H0_ZERO, current, h0, h0_next, 0, h0_next)
                break
            products = self.repository.products(current)
            below = products < lam
            if below.any():
                k = int(np.argmin(np.where(below, products, np.iinfo(np.int64).max)))
                curve = curves[k]
                logger.debug(f"mu: {current.to_text()} meets {curve.cls} in {products[k]} < {curve.lam}")
                pending.append(DispatchEvent(DispatchCase.CASE_B_STEP, current, h0, h0_next, curve=curve))
                current, _ = monotone_normalize(current - curve.cls)
                continue
            if (products >= Lam).all():
                ker = max(0, 3 * h0 - h0_next)
                event = DispatchEvent(DispatchCase.CASE_A, current, h0, h0_next, ker, ker + h0_next - 3 * h0)
            else:
                event = self._case_c(current, h0, h0_next)
            break
        else:
            raise InvariantViolation(f"mu dispatch for {F.to_text()} exceeded {cap} reductions")

        trace = [event]
        ker = event.ker
        for step in reversed(pending):
            # only the kernel survives a reduction step
            trace.append(replace(step, ker=ker, cok=ker + step.h0_next - 3 * step.h0))
        trace.reverse()
        for e in trace:
            self._check(e)
        return MuRankReport(F, trace[0].ker, trace[0].cok, trace)

    def _case_c(self, F, h0, h0_next):
        h = self.cohomology
        if F.dot(L - E1 - E2) == 0:
            A, B = F - (L - E1), F - (L - E2)
            ker = h.h0(A) + h.h0(B)
            cok = h.h1(A) + h.h1(B)
            if cok - ker != h0_next - 3 * h0:
                raise InvariantViolation(f"case c(i) identity fails for {F.to_text()}")
            return DispatchEvent(DispatchCase.CASE_C_I, F, h0, h0_next, ker, cok)
        r = self.special_family_index(F)
        if r is not None:
            return DispatchEvent(DispatchCase.CASE_C_II, F, h0, h0_next, r + 1, r, r=r)
        cok = max(0, F.d + F.dot(h.K) - F.square())
        if cok != max(0, h0_next - 3 * h0):
            raise InvariantViolation(f"case c(iii) cokernel formula disagrees with Riemann-Roch for {F.to_text()}")
        return DispatchEvent(DispatchCase.CASE_C_III_MAXRANK, F, h0, h0_next, cok - (h0_next - 3 * h0), cok)

    @staticmethod
    def special_family_index(F):
        """r >= 1 with ``F = (3L - E1 - ... - E7) + r(8L - 3E1 - ... - 3E7 - E8)``, else None."""
        r = F.m[7]
        if r >= 1 and F.d == 3 + 8 * r and F.m[:7] == (1 + 3 * r,) * 7:
            return r
        return None

    @staticmethod
    def _check(event):
        if event.cok - event.ker != event.h0_next - 3 * event.h0:
            raise InvariantViolation(f"rank-nullity fails at {event.cls.to_text()}")
        if not (0 <= event.ker <= 3 * event.h0 and 0 <= event.cok <= event.h0_next):
            raise InvariantViolation(f"kernel/cokernel out of range at {event.cls.to_text()}")

    def restriction_splitting(self, curve):
        key = (curve.cls.d, tuple(sorted(curve.cls.m, reverse=True)))
        if curve.kind == CurveKind.SQUARE_ZERO and key in SPECIAL_SPLITTINGS:
            return SPECIAL_SPLITTINGS[key]
        return curve.lambda_prime, curve.Lam

    def curve_restriction_mu(self, curve, t):
        if t < 0:
            raise ValidationError({"t": ["must be nonnegative"]})
        a, b = self.restriction_splitting(curve)
        ker = _h0_line(t - a) + _h0_line(t - b)
        cok = _h1_line(t - a) + _h1_line(t - b)
        return ker, cok

    def curve_restriction_mu_defect(self, curve, t):
        return min(self.curve_restriction_mu(curve, t))

    def mu_payload(self, data):
        try:
            F = self.divisor_schema.load(data)
            return self.report_schema.dump(self.mu_rank(F)), 0
        except ValidationError as err:
            return {"error": err.messages}, 1

    def ql_payload(self, data):
        try:
            F = self.divisor_schema.load(data)
            return self.ql_schema.dump(self.ql_report(F)), 0
        except ValidationError as err:
            return {"error": err.messages}, 1
