from dataclasses import dataclass

from marshmallow import ValidationError

from models.divisor import N_POINTS, DivisorClass


@dataclass(frozen=True)
class FatPointScheme:
    """Z = m1 p1 + ... + m8 p8 at general points, kept in non-increasing order."""
    mults: tuple

    def __post_init__(self):
        mults = [int(m) for m in self.mults]
        if not 1 <= len(mults) <= N_POINTS:
            raise ValidationError({"mults": [f"expected 1 to {N_POINTS} multiplicities, got {len(mults)}"]})
        if any(m < 0 for m in mults):
            raise ValidationError({"mults": ["multiplicities must be nonnegative"]})
        mults += [0] * (N_POINTS - len(mults))
        object.__setattr__(self, "mults", tuple(sorted(mults, reverse=True)))

    def divisor(self, t):
        """F_t = tL - m1 E1 - ... - m8 E8."""
        return DivisorClass(t, self.mults)


@dataclass(frozen=True)
class GradedResolution:
    """0 -> F1 -> F0 -> I_Z -> 0 with F0 = sum R[-t]^nu_t and F1 = sum R[-t]^s_t."""
    mults: tuple
    alpha: int
    hilbert: dict
    generators: dict
    syzygies: dict
    window_end: int
