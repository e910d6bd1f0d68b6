"""Validated parameter sets and the small set of unit conversions the
scenarios need.

Internal unit system: SI throughout, with *angular* frequencies (rad/s).
Laser/trap parameters are commonly quoted as multiples of a reference
linewidth ``gamma`` or as cyclic frequencies; the ``in_gamma_units`` /
``convert`` helpers perform the ingestion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .constants import C

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class OpticalParams:
    """Atomic transition and laser parameters for the three-level medium.

    Attributes
    ----------
    lambda_31 : float
        Probe transition wavelength (m).
    gamma : float
        Reference linewidth used for scaling (rad/s).
    Gamma_31 : float
        Decay rate of the excited state to the probe ground state (rad/s).
    Gamma_21 : float
        Decoherence rate between the two lower states (rad/s).
    Omega : float
        Dressing-laser Rabi frequency (rad/s).
    Delta : float
        Probe detuning from the bare transition (rad/s).
    """

    lambda_31: float
    gamma: float
    Gamma_31: float
    Gamma_21: float
    Omega: float
    Delta: float = 0.0

    def __post_init__(self) -> None:
        if self.lambda_31 <= 0.0:
            raise ValueError("lambda_31 must be positive")
        if self.gamma <= 0.0:
            raise ValueError("gamma must be positive")
        if self.Gamma_31 <= 0.0:
            raise ValueError("Gamma_31 must be positive")
        if self.Gamma_21 < 0.0:
            raise ValueError("Gamma_21 must be non-negative")
        if self.Omega <= 0.0:
            raise ValueError("Omega must be positive")

    @classmethod
    def in_gamma_units(
        cls,
        lambda_31: float,
        gamma: float,
        Gamma_31: float,
        Gamma_21: float,
        Omega: float,
        Delta: float = 0.0,
    ) -> "OpticalParams":
        """Build from rates expressed as multiples of ``gamma`` (rad/s)."""
        return cls(
            lambda_31=lambda_31,
            gamma=gamma,
            Gamma_31=Gamma_31 * gamma,
            Gamma_21=Gamma_21 * gamma,
            Omega=Omega * gamma,
            Delta=Delta * gamma,
        )

    def with_detuning(self, Delta: float) -> "OpticalParams":
        return replace(self, Delta=Delta)


@dataclass(frozen=True)
class DerivedOptical:
    omega_31: float  # rad/s, transition angular frequency
    k_0: float       # 1/m, resonant carrier wavenumber


def derive_optical(p: OpticalParams) -> DerivedOptical:
    """Carrier frequency and wavenumber of the resonant probe (n ~ 1, so
    omega = c*k holds throughout the medium)."""
    return DerivedOptical(omega_31=TWO_PI * C / p.lambda_31, k_0=TWO_PI / p.lambda_31)


@dataclass(frozen=True)
class TrapGasParams:
    """Harmonic trap and gas parameters.

    Attributes
    ----------
    N : float
        Total atom number.
    M : float
        Atomic mass (kg).
    a_sc : float
        s-wave scattering length (m).
    omega_r, omega_z : float
        Radial and axial trap frequencies (rad/s).
    T : float
        Gas temperature (K).
    """

    N: float
    M: float
    a_sc: float
    omega_r: float
    omega_z: float
    T: float

    def __post_init__(self) -> None:
        for name in ("N", "M", "a_sc", "omega_r", "omega_z", "T"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")

    @property
    def epsilon(self) -> float:
        """Trap aspect ratio omega_z / omega_r."""
        return self.omega_z / self.omega_r

    @property
    def omega_bar(self) -> float:
        """Geometric-mean trap frequency (omega_r^2 * omega_z)^(1/3)."""
        return (self.omega_r**2 * self.omega_z) ** (1.0 / 3.0)

    def with_temperature(self, T: float) -> "TrapGasParams":
        return replace(self, T=T)


# Exact multiplicative factors for the supported conversions.
_CONVERSIONS: dict[tuple[str, str], float] = {
    ("nm", "m"): 1e-9,
    ("m", "nm"): 1e9,
    ("um", "m"): 1e-6,
    ("m", "um"): 1e6,
    ("nK", "K"): 1e-9,
    ("K", "nK"): 1e9,
    ("us", "s"): 1e-6,
    ("s", "us"): 1e6,
    ("Hz", "rad/s"): TWO_PI,
    ("rad/s", "Hz"): 1.0 / TWO_PI,
    ("cm^-3", "m^-3"): 1e6,
    ("m^-3", "cm^-3"): 1e-6,
}

_UNIT_ALIASES = {"µm": "um", "μm": "um", "µs": "us", "μs": "us"}


def convert(value: float, from_unit: str, to_unit: str) -> float:
    """Exact multiplicative unit conversion over the supported set.

    Supported pairs: nm/m, um/m, nK/K, us/s, Hz/(rad/s) via 2*pi,
    cm^-3/m^-3.  Anything else raises ``ValueError``.
    """
    from_unit = _UNIT_ALIASES.get(from_unit, from_unit)
    to_unit = _UNIT_ALIASES.get(to_unit, to_unit)
    if from_unit == to_unit:
        return value
    try:
        factor = _CONVERSIONS[(from_unit, to_unit)]
    except KeyError:
        raise ValueError(f"unsupported unit conversion {from_unit!r} -> {to_unit!r}") from None
    return value * factor
