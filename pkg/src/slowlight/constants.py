"""Physical constants in SI units.

All frequencies elsewhere in the package are angular (rad/s); quantities
quoted in cyclic Hz must be multiplied by 2*pi on ingestion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

_H = 6.62607015e-34  # J s, exact (SI definition)


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants.  ``hbar`` is derived from ``h`` so that h = 2*pi*hbar
    holds to full float precision."""

    h: float = _H                           # J s
    hbar: float = _H / (2.0 * math.pi)      # J s
    c: float = 299792458.0                  # m/s, exact
    k_B: float = 1.380649e-23               # J/K, exact
    amu: float = 1.66053906660e-27          # kg
    epsilon_0: float = 8.8541878128e-12     # F/m

    def __post_init__(self) -> None:
        for name in ("h", "hbar", "c", "k_B", "amu", "epsilon_0"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name} must be positive")
        if abs(self.h - 2.0 * math.pi * self.hbar) > 1e-12 * self.h:
            raise ValueError("h and hbar inconsistent: h must equal 2*pi*hbar")


CONST = PhysicalConstants()

HBAR = CONST.hbar
C = CONST.c
K_B = CONST.k_B
AMU = CONST.amu
EPSILON_0 = CONST.epsilon_0
H = CONST.h
