"""Divisor classes on the blow-up of the plane at eight points.

A class is stored as ``(d; m1, ..., m8)`` and means ``dL - m1 E1 - ... - m8 E8``,
so ``mi = F . Ei``.  The intersection form is ``L^2 = 1``, ``Ei . Ej = -delta_ij``
and ``L . Ei = 0``.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
import re

from marshmallow import ValidationError

N_POINTS = 8


def _pad(mults):
    mults = tuple(int(m) for m in mults)
    if len(mults) > N_POINTS:
        raise ValidationError({"m": [f"at most {N_POINTS} multiplicities are supported, got {len(mults)}"]})
    return mults + (0,) * (N_POINTS - len(mults))


@dataclass(frozen=True)
class DivisorClass:
    d: int
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", _pad(self.m))

    @classmethod
    def line(cls):
        return cls(1, ())

    @classmethod
    def exceptional(cls, i):
        """The class of E_i, 1-based."""
        m = [0] * N_POINTS
        m[i - 1] = -1
        return cls(0, m)

    @classmethod
    def zero(cls):
        return cls(0, ())

    @classmethod
    def parse(cls, text):
        tokens = [tok for tok in re.split(r"[\s,]+", text.strip()) if tok]
        if not tokens:
            raise ValidationError({"divisor": ["empty divisor class"]})
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise ValidationError({"divisor": [f"not an integer sequence: {text!r}"]})
        return cls(values[0], values[1:])

    def to_text(self):
        return " ".join(str(v) for v in self.vector())

    def vector(self):
        return (self.d,) + self.m

    def __add__(self, other):
        return DivisorClass(self.d + other.d, [a + b for a, b in zip(self.m, other.m)])

    def __sub__(self, other):
        return DivisorClass(self.d - other.d, [a - b for a, b in zip(self.m, other.m)])

    def __neg__(self):
        return DivisorClass(-self.d, [-a for a in self.m])

    def __mul__(self, k):
        return DivisorClass(k * self.d, [k * a for a in self.m])

    __rmul__ = __mul__

    def dot(self, other):
        return self.d * other.d - sum(a * b for a, b in zip(self.m, other.m))

    def square(self):
        return self.dot(self)

    def is_monotone(self):
        return all(self.m[i] >= self.m[i + 1] for i in range(N_POINTS - 1))

    def permuted(self, order):
        """Class whose k-th multiplicity is ``m[order[k]]``."""
        return DivisorClass(self.d, [self.m[i] for i in order])

    def restore(self, permutation):
        """Undo :func:`monotone_normalize`: ``permutation[i]`` is where input index i went."""
        return DivisorClass(self.d, [self.m[permutation[i]] for i in range(N_POINTS)])

    def __str__(self):
        terms = [f"{self.d}L"]
        for i, a in enumerate(self.m, start=1):
            if a:
                sign = "-" if a > 0 else "+"
                coeff = "" if abs(a) == 1 else str(abs(a))
                terms.append(f"{sign}{coeff}E{i}")
        return "".join(terms)


def intersect(a, b):
    return a.dot(b)


def canonical_class():
    return DivisorClass(-3, [-1] * N_POINTS)


def monotone_normalize(F):
    """Sort multiplicities into non-increasing order, ties kept in index order.

    Returns the sorted class and the permutation mapping each input position to
    its output position.
    """
    order = sorted(range(N_POINTS), key=lambda i: (-F.m[i], i))
    permutation = [0] * N_POINTS
    for k, i in enumerate(order):
        permutation[i] = k
    return F.permuted(order), tuple(permutation)


def cremona(F, i, j, k):
    """Quadratic transformation centred at points i, j, k (1-based)."""
    if len({i, j, k}) != 3 or not all(1 <= x <= N_POINTS for x in (i, j, k)):
        raise ValidationError({"cremona": [f"indices must be distinct in 1..{N_POINTS}, got {(i, j, k)}"]})
    m = list(F.m)
    mi, mj, mk = m[i - 1], m[j - 1], m[k - 1]
    m[i - 1] = F.d - mj - mk
    m[j - 1] = F.d - mi - mk
    m[k - 1] = F.d - mi - mj
    return DivisorClass(2 * F.d - mi - mj - mk, m)


def weyl_orbit(seed):
    """Orbit of ``seed`` under index permutations and quadratic transformations."""
    seen = {seed}
    queue = deque([seed])
    while queue:
        F = queue.popleft()
        images = [cremona(F, 1, 2, 3)]
        for i in range(N_POINTS - 1):
            order = list(range(N_POINTS))
            order[i], order[i + 1] = order[i + 1], order[i]
            images.append(F.permuted(order))
        for G in images:
            if G not in seen:
                seen.add(G)
                queue.append(G)
    return seen


class CurveKind(str, Enum):
    EXCEPTIONAL = "exceptional"
    SQUARE_ZERO = "square_zero"


@dataclass(frozen=True)
class CurveClass:
    cls: DivisorClass
    kind: CurveKind
    lam: int
    Lam: int
    m_C: int

    @classmethod
    def from_class(cls, F, kind, smooth_rational=True):
        m_C = max(F.m)
        if F.d == 0:
            # the E_i
            return cls(F, kind, 0, 0, m_C)
        low, high = sorted((m_C, F.d - m_C))
        lam = low if smooth_rational else max(low, 2)
        return cls(F, kind, lam, high, m_C)

    @property
    def lambda_prime(self):
        if self.cls.d == 0:
            return 0
        return min(self.m_C, self.cls.d - self.m_C)


@dataclass(frozen=True)
class Triple:
    """Nearly uniform class ``dL - a(E1 + ... + E7) - bE8``."""
    d: int
    a: int
    b: int

    def to_divisor(self):
        return DivisorClass(self.d, [self.a] * 7 + [self.b])

    @classmethod
    def from_divisor(cls, F):
        if len(set(F.m[:7])) != 1:
            raise ValidationError({"divisor": [f"{F.to_text()} is not nearly uniform"]})
        return cls(F.d, F.m[0], F.m[7])

    def __iter__(self):
        return iter((self.d, self.a, self.b))
