"""Brute-force check of the engine: fat point ideals at random points over GF(p)."""
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np
from marshmallow import ValidationError
from sympy import isprime

from dto.oracle_dto import OracleCheckSchema, OracleLineSchema
from models.divisor import N_POINTS
from models.errors import InvariantViolation
from models.oracle import ComparisonRow, OracleInstance, OracleReport
from models.scheme import FatPointScheme
from services.finite_field import nullspace_mod, rank_mod
from services.resolution_service import ResolutionService, delta3

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 1_000_003
MAX_DRAWS = 100


@lru_cache(maxsize=None)
def monomials(t):
    return tuple((a, b, t - a - b) for a in range(t, -1, -1) for b in range(t - a, -1, -1))


@lru_cache(maxsize=None)
def _shift_indices(t):
    """Column of x*m, y*m, z*m in degree t + 1 for every monomial m of degree t."""
    index = {mono: k for k, mono in enumerate(monomials(t + 1))}
    shifts = []
    for var in range(3):
        column = []
        for mono in monomials(t):
            bumped = list(mono)
            bumped[var] += 1
            column.append(index[tuple(bumped)])
        shifts.append(np.array(column, dtype=np.int64))
    return shifts


class EngineAdapter:
    """Engine answers in the oracle's terms, keyed by multiplicity vectors."""

    def __init__(self, resolution_service=None):
        self.resolution_service = resolution_service or ResolutionService()

    def hilbert(self, mults, t):
        return self.resolution_service.hilbert_function(FatPointScheme(tuple(mults)), t)

    def mu(self, mults, t):
        report = self.resolution_service.mu_rank_service.mu_rank(FatPointScheme(tuple(mults)).divisor(t))
        return report.ker, report.cok

    def resolution(self, mults):
        return self.resolution_service.resolution(FatPointScheme(tuple(mults)))

    def window_end(self, mults):
        return self.resolution_service.window_end(FatPointScheme(tuple(mults)))


class OracleService:
    def __init__(self, engine=None, prime=DEFAULT_PRIME):
        self.engine = engine or EngineAdapter()
        self.prime = prime
        self.check_schema = OracleCheckSchema()
        self.line_schema = OracleLineSchema()

    def make_instance(self, prime=None, seed=0):
        prime = self.prime if prime is None else prime
        if not isprime(prime) or prime >= 2 ** 31:
            raise ValidationError({"prime": [f"{prime} is not a prime below 2**31"]})
        rng = np.random.default_rng(seed)
        for attempt in range(MAX_DRAWS):
            points = [tuple(int(x) for x in row) for row in rng.integers(0, prime, size=(N_POINTS, 2))]
            if self._general(points, prime):
                return OracleInstance(prime, seed, tuple(points))
            logger.debug(f"Re-drawing points for seed {seed} (attempt {attempt + 1})")
        raise InvariantViolation(f"no general point configuration after {MAX_DRAWS} draws (prime {prime}, seed {seed})")

    @staticmethod
    def _general(points, p):
        if len(set(points)) != len(points):
            return False
        for (u1, v1), (u2, v2), (u3, v3) in combinations(points, 3):
            if ((u2 - u1) * (v3 - v1) - (u3 - u1) * (v2 - v1)) % p == 0:
                return False
        return True

    def _check_prime(self, inst, mults, t):
        if inst.prime <= max(t, max(mults, default=0)):
            raise ValidationError({"prime": [f"prime {inst.prime} must exceed the degree {t} and every multiplicity"]})

    def conditions_matrix(self, inst, mults, t):
        """Rows: Taylor coefficients of order < m_i at p_i of each degree-t monomial (chart z = 1)."""
        p = inst.prime
        monos = monomials(t)
        rows = []
        for (u, v), m in zip(inst.points, mults):
            for i in range(m):
                for j in range(m - i):
                    rows.append([
                        comb(a, i) * comb(b, j) * pow(u, a - i, p) * pow(v, b - j, p) % p if a >= i and b >= j else 0
                        for a, b, _ in monos
                    ])
        if not rows:
            return np.zeros((0, len(monos)), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def ideal_dim(self, inst, mults, t):
        if t < 0:
            return 0
        self._check_prime(inst, mults, t)
        return comb(t + 2, 2) - rank_mod(self.conditions_matrix(inst, mults, t), inst.prime)

    def mu_rank_bruteforce(self, inst, mults, t):
        if t < 0:
            return 0, self.ideal_dim(inst, mults, t + 1)
        self._check_prime(inst, mults, t + 1)
        p = inst.prime
        basis = nullspace_mod(self.conditions_matrix(inst, mults, t), p)
        k = basis.shape[0]
        target = self.ideal_dim(inst, mults, t + 1)
        if k == 0:
            return 0, target
        stacked = np.zeros((3 * k, comb(t + 3, 2)), dtype=np.int64)
        for var, columns in enumerate(_shift_indices(t)):
            stacked[var * k:(var + 1) * k, columns] = basis
        rank = rank_mod(stacked, p)
        return 3 * k - rank, target - rank

    def oracle_resolution(self, inst, mults, t_max):
        h_values = {t: self.ideal_dim(inst, mults, t) for t in range(t_max + 1)}
        h = lambda t: h_values.get(t, 0)
        generators, syzygies = {}, {}
        for t in range(t_max + 1):
            nu = h(0) if t == 0 else self.mu_rank_bruteforce(inst, mults, t - 1)[1]
            s = nu - delta3(h, t)
            if nu:
                generators[t] = nu
            if s:
                syzygies[t] = s
        return generators, syzygies

    def compare(self, inst, mults, t_max, engine=None):
        engine = engine or self.engine
        mults = FatPointScheme(tuple(mults)).mults
        rows, first_mismatch = [], None
        for t in range(t_max + 1):
            ker, cok = self.mu_rank_bruteforce(inst, mults, t)
            e_ker, e_cok = engine.mu(mults, t)
            row = ComparisonRow(mults, inst.seed, t, engine.hilbert(mults, t), self.ideal_dim(inst, mults, t), e_ker, ker, e_cok, cok)
            rows.append(row)
            if first_mismatch is None and not row.match:
                first_mismatch = t
                logger.warning(f"Oracle mismatch for {mults} at t={t} (seed {inst.seed})")

        generators, syzygies = self.oracle_resolution(inst, mults, t_max)
        resolved = engine.resolution(mults)
        resolution_match = (
            {t: v for t, v in resolved.generators.items() if t <= t_max} == generators
            and {t: v for t, v in resolved.syzygies.items() if t <= t_max} == syzygies
        )
        return OracleReport(mults, inst.prime, inst.seed, t_max, rows, first_mismatch, resolution_match)

    def monotone_vectors(self, max_mult):
        return list(combinations_with_replacement(range(max_mult, -1, -1), N_POINTS))

    def sweep(self, max_mult, t_max=None, seeds=(0, 1), prime=None, workers=4, vectors=None):
        """Compare every monotone vector with entries <= max_mult; yields one report list per vector."""
        instances = [self.make_instance(prime, seed) for seed in seeds]
        vectors = self.monotone_vectors(max_mult) if vectors is None else vectors

        def check(mults):
            horizon = self.engine.window_end(mults) if t_max is None else t_max
            return [self.compare(inst, mults, horizon) for inst in instances]

        with ThreadPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(check, vectors)

    def check_payload(self, data, workers=4):
        """Returns (json lines, exit code); exit code 3 flags a mismatch."""
        try:
            options = self.check_schema.load(data)
            vectors = None
            if options.get("mults") is not None:
                vectors = [options["mults"].mults]
            lines, mismatches = [], []
            results = self.sweep(options["max_mult"], options.get("t_max"), options["seeds"], options["prime"], workers, vectors)
            for reports in results:
                for t in range(reports[0].t_max + 1):
                    rows = [report.rows[t] for report in reports]
                    lines.append(self.line_schema.dump(rows))
                if not all(report.success for report in reports):
                    mismatches.append(list(reports[0].mults))
            lines.append({"checked": len(lines), "mismatches": mismatches})
            return lines, 3 if mismatches else 0
        except ValidationError as err:
            return [{"error": err.messages}], 1
