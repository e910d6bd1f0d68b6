"""Steady-state optical response of the three-level Raman-matched medium.

The probe susceptibility is chi = eta * chi1 with
``eta = (3 lambda^3 / 32 pi^3) * rho`` carrying the local atom density and
``chi1`` the single-atom lineshape.  From chi and its detuning derivative we
assemble the complex group index ``N_g``, whose real part sets the group
delay and whose imaginary part couples pulse amplitude and phase (the
"phase-correlation" channel responsible for apparent superluminal
throughput in absorptive media).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C
from .params import OpticalParams, derive_optical

__all__ = [
    "IndexBundle",
    "GroupVelocityCurves",
    "chi1",
    "dchi1_dDelta",
    "h_aux",
    "eta_coefficient",
    "index_bundle",
    "resonant_group_velocity",
    "group_velocity_curves",
    "critical_superluminal_length",
]


def chi1(Delta, Omega: float, Gamma_31: float, Gamma_21: float):
    """Single-atom probe susceptibility of the dressed three-level system.

    chi1 = -[Delta/Gamma_31 + i(1 + Omega^2/(4 Gamma_31 (Gamma_21 - i Delta)))]^(-1)

    Parameters are angular rates (rad/s); ``Delta`` may be an array.
    The removable singular point Gamma_21 = Delta = 0 is defined by its
    continuous limit chi1 -> 0 (perfect transparency).
    """
    if Gamma_31 <= 0.0 or Omega <= 0.0:
        raise ValueError("Gamma_31 and Omega must be positive")
    if Gamma_21 < 0.0:
        raise ValueError("Gamma_21 must be non-negative")
    delta = np.asarray(Delta, dtype=float)
    inner = Gamma_21 - 1j * delta
    singular = inner == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        denom = delta / Gamma_31 + 1j * (
            1.0 + Omega**2 / (4.0 * Gamma_31 * np.where(singular, 1.0, inner))
        )
        out = np.where(singular, 0.0 + 0.0j, -1.0 / denom)
    if np.isscalar(Delta) or np.ndim(Delta) == 0:
        return complex(out)
    return out


def dchi1_dDelta(Delta, Omega: float, Gamma_31: float, Gamma_21: float):
    """Detuning derivative of :func:`chi1` (units: s).

    d chi1/d Delta = [1/Gamma_31 - Omega^2/(4 Gamma_31 (Gamma_21 - i Delta)^2)]
                     / [Delta/Gamma_31 + i(1 + Omega^2/(4 Gamma_31 (Gamma_21 - i Delta)))]^2
    """
    if Gamma_31 <= 0.0 or Omega <= 0.0:
        raise ValueError("Gamma_31 and Omega must be positive")
    if Gamma_21 < 0.0:
        raise ValueError("Gamma_21 must be non-negative")
    delta = np.asarray(Delta, dtype=float)
    inner = Gamma_21 - 1j * delta
    singular = inner == 0.0
    safe = np.where(singular, 1.0, inner)
    with np.errstate(divide="ignore", invalid="ignore"):
        num = 1.0 / Gamma_31 - Omega**2 / (4.0 * Gamma_31 * safe**2)
        denom = delta / Gamma_31 + 1j * (1.0 + Omega**2 / (4.0 * Gamma_31 * safe))
        out = num / denom**2
    # continuous limit toward Gamma_21 = Delta = 0: the derivative
    # approaches 4 Gamma_31 / Omega^2 (real), the slope of the transparency
    # window.
    limit = 4.0 * Gamma_31 / Omega**2
    out = np.where(singular, limit, out)
    if np.isscalar(Delta) or np.ndim(Delta) == 0:
        return complex(out)
    return out


def h_aux(Delta, Omega: float, optical: OpticalParams):
    """Auxiliary lineshape h = chi1 + (Delta + omega_31) * dchi1/dDelta.

    ``2*pi*eta*h`` is the density-scaled part of the complex group index.
    """
    omega_31 = derive_optical(optical).omega_31
    c1 = chi1(Delta, Omega, optical.Gamma_31, optical.Gamma_21)
    d1 = dchi1_dDelta(Delta, Omega, optical.Gamma_31, optical.Gamma_21)
    return c1 + (np.asarray(Delta, dtype=float) + omega_31) * d1


def eta_coefficient(lambda_31: float) -> float:
    """Density-to-eta conversion: eta = (3 lambda^3 / 32 pi^3) * rho."""
    return 3.0 * lambda_31**3 / (32.0 * math.pi**3)


@dataclass(frozen=True)
class IndexBundle:
    """Optical response at one (density, detuning, Rabi frequency) point.

    ``N_g`` is complex: its real part is the group index, its imaginary
    part the phase-correlation index.  ``alpha = 2*pi*i*k_0*chi`` is the
    complex attenuation coefficient (1/m).
    """

    chi: complex
    refractive_index: float   # Re(1 + 2*pi*chi)
    loss_index: float         # Im(1 + 2*pi*chi)
    N_g: complex
    alpha: complex            # 1/m
    eta: float

    @property
    def N_g_over_c(self) -> complex:
        """Group/phase-correlation indices scaled by 1/c (s/m)."""
        return self.N_g / C


def index_bundle(rho: float, optical: OpticalParams) -> IndexBundle:
    """Assemble the full optical response at density ``rho`` (1/m^3) for
    the detuning carried by ``optical``."""
    if rho < 0.0:
        raise ValueError("rho must be non-negative")
    der = derive_optical(optical)
    eta = eta_coefficient(optical.lambda_31) * rho
    c1 = chi1(optical.Delta, optical.Omega, optical.Gamma_31, optical.Gamma_21)
    chi = eta * c1
    h = h_aux(optical.Delta, optical.Omega, optical)
    n_g = 1.0 + 2.0 * math.pi * eta * h
    alpha = 2.0 * math.pi * 1j * der.k_0 * chi
    one_plus = 1.0 + 2.0 * math.pi * chi
    return IndexBundle(
        chi=complex(chi),
        refractive_index=float(one_plus.real),
        loss_index=float(one_plus.imag),
        N_g=complex(n_g),
        alpha=complex(alpha),
        eta=float(eta),
    )


def resonant_group_velocity(rho: float, optical: OpticalParams) -> float:
    """Closed-form resonant (Delta = 0) group velocity (m/s):

    v_g = 4 pi^2 Omega^2 c / (3 lambda^3 rho omega_31 Gamma_31)

    Valid in the deep slow-light regime Gamma_31 >> Gamma_21 where the
    group index is dominated by the transparency-window slope.
    """
    if rho <= 0.0:
        raise ValueError("rho must be positive: vacuum supports no slow-light resonance")
    omega_31 = derive_optical(optical).omega_31
    return (
        4.0 * math.pi**2 * optical.Omega**2 * C
        / (3.0 * optical.lambda_31**3 * rho * omega_31 * optical.Gamma_31)
    )


@dataclass(frozen=True)
class GroupVelocityCurves:
    """Both group-velocity definitions along a detuning grid.

    ``v_re_c_over_ng`` is Re(c/N_g); ``v_c_over_re_ng`` is c/Re(N_g), which
    is singular where Re(N_g) crosses zero.  ``singular`` flags grid points
    at or adjacent to such a crossing; the flagged values are +-inf when
    Re(N_g) vanishes exactly.
    """

    Delta: np.ndarray
    v_re_c_over_ng: np.ndarray
    v_c_over_re_ng: np.ndarray
    singular: np.ndarray  # bool mask


def group_velocity_curves(rho: float, optical: OpticalParams, Delta_grid) -> GroupVelocityCurves:
    """Evaluate v = Re(c/N_g) and v = c/Re(N_g) over ``Delta_grid``,
    flagging (not raising on) the zero crossings of Re(N_g)."""
    delta = np.asarray(Delta_grid, dtype=float)
    if not np.all(np.isfinite(delta)):
        raise ValueError("Delta_grid must be finite")
    eta = eta_coefficient(optical.lambda_31) * rho
    h = h_aux(delta, optical.Omega, optical)
    n_g = 1.0 + 2.0 * math.pi * eta * np.asarray(h)
    v1 = np.real(C / n_g)
    re = n_g.real
    v2 = np.where(re != 0.0, C / np.where(re == 0.0, 1.0, re), np.inf)
    singular = np.zeros(delta.shape, dtype=bool)
    singular |= re == 0.0
    if delta.ndim == 1 and delta.size > 1:
        crossing = np.sign(re[:-1]) * np.sign(re[1:]) < 0
        singular[:-1] |= crossing
        singular[1:] |= crossing
    return GroupVelocityCurves(
        Delta=delta, v_re_c_over_ng=v1, v_c_over_re_ng=v2, singular=singular
    )


def critical_superluminal_length(alpha_prime: float, a: float, Ng_pp_over_c: float) -> float:
    """Minimum absorber length for pulse-peak advance to beat attenuation.

    A Gaussian exp(-a t^2) traversing a uniform slab gains the
    amplitude-phase-correlation factor exp[a ((N_g''/c) L)^2] against the
    loss exp[alpha' L]; the peak exceeds the input beyond

        L_c = |alpha'| / (a * (N_g''/c)^2).

    ``alpha_prime`` must be negative (absorber, 1/m), ``a`` positive
    (1/s^2), ``Ng_pp_over_c`` in s/m.
    """
    if alpha_prime >= 0.0:
        raise ValueError("alpha_prime must be negative (absorbing medium)")
    if a <= 0.0:
        raise ValueError("pulse sharpness a must be positive")
    if Ng_pp_over_c == 0.0:
        raise ValueError(
            "phase-correlation index is zero: infinite length required to beat absorption"
        )
    return abs(alpha_prime) / (a * Ng_pp_over_c**2)
