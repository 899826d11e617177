"""Tables of exceptional and square-zero smooth rational curves for eight general points."""
import logging
import threading
from functools import lru_cache

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from models.cone import NEF_GENERATORS
from models.divisor import CurveClass, CurveKind, DivisorClass, canonical_class
from models.errors import InvariantViolation

logger = logging.getLogger(__name__)

EXCEPTIONAL_PATTERNS = (
    (0, (-1, 0, 0, 0, 0, 0, 0, 0)),
    (1, (1, 1, 0, 0, 0, 0, 0, 0)),
    (2, (1, 1, 1, 1, 1, 0, 0, 0)),
    (3, (2, 1, 1, 1, 1, 1, 1, 0)),
    (4, (2, 2, 2, 1, 1, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2, 1, 1)),
    (6, (3, 2, 2, 2, 2, 2, 2, 2)),
)

SQUARE_ZERO_PATTERNS = (
    (1, (1, 0, 0, 0, 0, 0, 0, 0)),
    (2, (1, 1, 1, 1, 0, 0, 0, 0)),
    (3, (2, 1, 1, 1, 1, 1, 0, 0)),
    (4, (2, 2, 2, 1, 1, 1, 1, 0)),
    (4, (3, 1, 1, 1, 1, 1, 1, 1)),
    (5, (3, 2, 2, 2, 1, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2, 1, 0)),
    (6, (3, 3, 2, 2, 2, 2, 1, 1)),
    (7, (3, 3, 3, 3, 2, 2, 2, 1)),
    (7, (4, 3, 2, 2, 2, 2, 2, 2)),
    (8, (3, 3, 3, 3, 3, 3, 3, 1)),
    (8, (4, 3, 3, 3, 3, 2, 2, 2)),
    (9, (4, 4, 3, 3, 3, 3, 3, 2)),
    (10, (4, 4, 4, 4, 3, 3, 3, 3)),
    (11, (4, 4, 4, 4, 4, 4, 4, 3)),
)

# int64 products stay exact below this magnitude
_INT64_SAFE = 1 << 40


def _expand(patterns):
    classes = set()
    for d, pattern in patterns:
        for perm in multiset_permutations(list(pattern)):
            classes.add(DivisorClass(d, perm))
    return sorted(classes, key=lambda F: (F.d, F.m))


class CurveRepository:
    def __init__(self):
        self._lock = threading.Lock()
        self._tables = {}

    def _build(self, kind):
        patterns = EXCEPTIONAL_PATTERNS if kind == CurveKind.EXCEPTIONAL else SQUARE_ZERO_PATTERNS
        curves = tuple(CurveClass.from_class(F, kind) for F in _expand(patterns))
        matrix = np.array([c.cls.vector() for c in curves], dtype=np.int64)
        table = {
            "curves": curves,
            "matrix": matrix,
            "lam": np.array([c.lam for c in curves], dtype=np.int64),
            "Lam": np.array([c.Lam for c in curves], dtype=np.int64),
            "index": {c.cls: k for k, c in enumerate(curves)},
        }
        K = canonical_class()
        expected = (-1, -1) if kind == CurveKind.EXCEPTIONAL else (0, -2)
        for c in curves:
            if (c.cls.square(), c.cls.dot(K)) != expected:
                raise InvariantViolation(f"curve table entry {c.cls} fails adjunction")
        if kind == CurveKind.EXCEPTIONAL and not all(c.cls.dot(-K) > 0 for c in curves):
            # -K ample means only exceptional curves can be fixed components
            raise InvariantViolation("-K is not positive on every exceptional curve")
        logger.debug(f"Built {kind.value} curve table with {len(curves)} entries")
        return table

    def _table(self, kind):
        kind = CurveKind(kind)
        table = self._tables.get(kind)
        if table is None:
            with self._lock:
                table = self._tables.get(kind)
                if table is None:
                    table = self._build(kind)
                    self._tables[kind] = table
        return table

    def get_all(self, kind=None):
        if kind is None:
            return self._table(CurveKind.EXCEPTIONAL)["curves"] + self._table(CurveKind.SQUARE_ZERO)["curves"]
        return self._table(kind)["curves"]

    def exceptional(self):
        return self.get_all(CurveKind.EXCEPTIONAL)

    def square_zero(self):
        return self.get_all(CurveKind.SQUARE_ZERO)

    def find(self, F, kind=CurveKind.EXCEPTIONAL):
        k = self._table(kind)["index"].get(F)
        return None if k is None else self._table(kind)["curves"][k]

    def thresholds(self, kind=CurveKind.EXCEPTIONAL):
        table = self._table(kind)
        return table["lam"], table["Lam"]

    def products(self, F, kind=CurveKind.EXCEPTIONAL):
        """Vector of ``F . C`` over the table, in canonical table order."""
        matrix = self._table(kind)["matrix"]
        v = (F.d,) + tuple(-a for a in F.m)
        if max(abs(x) for x in v) < _INT64_SAFE:
            return matrix @ np.array(v, dtype=np.int64)
        return matrix.astype(object) @ np.array(v, dtype=object)

    def nef_witnesses(self):
        return [g.to_divisor() for g in NEF_GENERATORS]


@lru_cache(maxsize=None)
def get_curve_repository():
    return CurveRepository()


def exceptional_curves():
    return frozenset(get_curve_repository().exceptional())


def square_zero_curves():
    return frozenset(get_curve_repository().square_zero())
