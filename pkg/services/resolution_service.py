import logging
from concurrent.futures import ThreadPoolExecutor
from math import comb

from marshmallow import ValidationError

from dto.scheme_dto import FatPointSchemeSchema, GradedResolutionSchema, HilbertWindowSchema
from models.errors import InvariantViolation
from models.scheme import FatPointScheme, GradedResolution
from services.mu_rank_service import MuRankService

logger = logging.getLogger(__name__)

# extra degrees computed past the window to confirm that nu and s have died out
OVERCOMPUTE = 2


def _ceil_div(a, b):
    return -(-a // b)


def delta3(h, t):
    return h(t) - 3 * h(t - 1) + 3 * h(t - 2) - h(t - 3)


class ResolutionService:
    def __init__(self, mu_rank_service=None):
        self.mu_rank_service = mu_rank_service or MuRankService()
        self.cohomology = self.mu_rank_service.cohomology
        self.repository = self.cohomology.repository
        self.scheme_schema = FatPointSchemeSchema()
        self.resolution_schema = GradedResolutionSchema()
        self.window_schema = HilbertWindowSchema()

    def hilbert_function(self, Z, t):
        return self.cohomology.h0(Z.divisor(t))

    def hilbert_window(self, Z, start, stop):
        return [(t, self.hilbert_function(Z, t)) for t in range(start, stop + 1)]

    def nef_threshold(self, Z):
        """Least t with F_t nef."""
        T = 0
        for curve in self.repository.exceptional():
            if curve.cls.d > 0:
                T = max(T, _ceil_div(sum(c * m for c, m in zip(curve.cls.m, Z.mults)), curve.cls.d))
        if not self.cohomology.is_nef(Z.divisor(T)):
            raise InvariantViolation(f"F_{T} is not nef for {Z.mults}")
        return T

    def window_end(self, Z):
        return self.nef_threshold(Z) + 3

    def alpha(self, Z):
        # F_t . D < 0 for a nef D rules out sections in degree t
        start = 0
        for D in self.repository.nef_witnesses():
            start = max(start, _ceil_div(sum(c * m for c, m in zip(D.m, Z.mults)), D.d))
        T = self.nef_threshold(Z)
        for t in range(start, T + 1):
            if self.hilbert_function(Z, t) > 0:
                return t
        raise InvariantViolation(f"no sections up to the nef threshold {T} for {Z.mults}")

    def _cokernel(self, Z, t):
        """nu_t: cokernel of multiplication from degree t - 1 into degree t."""
        if t == 0:
            return self.hilbert_function(Z, 0)
        return self.mu_rank_service.mu_rank(Z.divisor(t - 1)).cok

    def nu_sequence(self, Z):
        alpha, T = self.alpha(Z), self.nef_threshold(Z)
        nu = {alpha: self.hilbert_function(Z, alpha)}
        for t in range(alpha + 1, T + 2):
            nu[t] = self._cokernel(Z, t)
        return {t: v for t, v in nu.items() if v}

    def expected_generators(self, Z):
        """Generator counts predicted if every multiplication map had maximal rank."""
        alpha, T = self.alpha(Z), self.nef_threshold(Z)
        h = lambda t: self.hilbert_function(Z, t)
        expected = {alpha: h(alpha)}
        for t in range(alpha + 1, T + 2):
            expected[t] = max(0, h(t) - 3 * h(t - 1))
        return {t: v for t, v in expected.items() if v}

    def resolution(self, Z):
        alpha, T = self.alpha(Z), self.nef_threshold(Z)
        end = T + 3
        hilbert = {t: self.hilbert_function(Z, t) for t in range(alpha, end + OVERCOMPUTE + 1)}
        h = lambda t: hilbert.get(t, 0) if t >= alpha else 0

        nu = self.nu_sequence(Z)
        for t in range(T + 2, end + OVERCOMPUTE + 1):
            if self._cokernel(Z, t):
                raise InvariantViolation(f"generators past the window in degree {t} for {Z.mults}")

        syzygies = {}
        for t in range(alpha, end + OVERCOMPUTE + 1):
            s = nu.get(t, 0) - delta3(h, t)
            if s < 0:
                raise InvariantViolation(f"negative graded Betti number in degree {t} for {Z.mults}")
            if s:
                if t > end or t == alpha:
                    raise InvariantViolation(f"syzygies past the window in degree {t} for {Z.mults}")
                syzygies[t] = s
        generators = dict(nu)

        for t in range(alpha, end + 1):
            total = sum((generators.get(i, 0) - syzygies.get(i, 0)) * comb(t - i + 2, 2) for i in range(alpha, t + 1))
            if total != hilbert[t]:
                raise InvariantViolation(f"resolution does not reproduce h_Z({t}) for {Z.mults}")

        logger.debug(f"Resolved {Z.mults}: generators {generators}, syzygies {syzygies}")
        return GradedResolution(
            mults=Z.mults,
            alpha=alpha,
            hilbert={t: hilbert[t] for t in range(alpha, end + 1)},
            generators=generators,
            syzygies=syzygies,
            window_end=end,
        )

    def resolve_payload(self, data, expected=False):
        try:
            Z = self.scheme_schema.load(data)
            payload = self.resolution_schema.dump(self.resolution(Z))
            if expected:
                payload["expected"] = {str(t): v for t, v in self.expected_generators(Z).items()}
            return payload, 0
        except ValidationError as err:
            return {"error": err.messages}, 1

    def resolve_batch(self, rows, workers=4):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda row: self.resolve_payload({"mults": row}), rows))

    def hilbert_payload(self, data, start, stop):
        try:
            Z = self.scheme_schema.load(data)
            if stop < start:
                raise ValidationError({"to": ["must not be smaller than --from"]})
            window = self.hilbert_window(Z, start, stop)
            return self.window_schema.dump({"mults": Z.mults, "values": window}), 0
        except ValidationError as err:
            return {"error": err.messages}, 1
