"""Deformation-parameter bookkeeping.

Everything in the toolkit is parametrised by a single positive real b.  The
derived quantities kept here are

    Q      = b + 1/b
    q      = exp(i pi b^2)                       (unit modulus)
    zeta_b = exp(-i pi/4 - i pi (b^2 + b^-2)/12)
    zeta_0 = exp(-i pi Q^2 / 8)

DEFAULT_B_VALUES is the generic sample set used by the identity suites: away
from b = 1 degeneracies, plus b = 1 itself for closed-form spot checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

DEFAULT_B_VALUES = (0.7, 0.9, 1.23)


@dataclass(frozen=True)
class ModularParam:
    """Deformation data shared by every module."""

    b: float
    Q: float = field(init=False)
    q: complex = field(init=False)
    zeta_b: complex = field(init=False)
    zeta_0: complex = field(init=False)

    def __post_init__(self):
        if not (self.b > 0.0 and math.isfinite(self.b)):
            raise ValueError(f"b must be a positive finite real, got {self.b}")
        object.__setattr__(self, "Q", self.b + 1.0 / self.b)
        object.__setattr__(self, "q", cmath.exp(1j * math.pi * self.b**2))
        object.__setattr__(
            self,
            "zeta_b",
            cmath.exp(-1j * math.pi / 4 - 1j * math.pi * (self.b**2 + self.b**-2) / 12.0),
        )
        object.__setattr__(self, "zeta_0", cmath.exp(-1j * math.pi * self.Q**2 / 8.0))

    @property
    def dual(self) -> "ModularParam":
        """The b -> 1/b partner (used by the self-duality checks)."""
        return ModularParam(1.0 / self.b)

    def __repr__(self):
        return f"ModularParam(b={self.b})"
