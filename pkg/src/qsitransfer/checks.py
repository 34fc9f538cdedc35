"""Residual-carrying identity checks shared by the effect, catalog and CLI layers."""
from dataclasses import dataclass

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: float
    rhs: float
    tolerance: float

    @property
    def residual(self):
        return abs(self.lhs - self.rhs)

    @property
    def passed(self):
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class BoundCheck:
    """``value >= bound - tolerance``; residual is the shortfall (0 when met)."""

    name: str
    value: float
    bound: float
    tolerance: float

    @property
    def residual(self):
        return max(0.0, self.bound - self.value)

    @property
    def passed(self):
        return self.value >= self.bound - self.tolerance


def all_passed(checks):
    return all(c.passed for c in checks)
