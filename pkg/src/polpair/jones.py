"""Jones calculus for the pump beam and the single-photon analyzer chains.

Conventions (fixed once, used by every module):

* Basis order is (H, V), with H along the crystalline x-axis and V along y.
* A retarder with fast axis at angle ``theta`` (degrees, counterclockwise
  from H when looking against the propagation direction) is
  ``R(theta) @ diag(1, exp(-i*Gamma)) @ R(-theta)``, where ``Gamma`` is pi
  for a half-wave plate and pi/2 for a quarter-wave plate.
* Circular handedness: ``R = (H - iV)/sqrt(2)`` and ``L = (H + iV)/sqrt(2)``.
  Swapping this convention swaps every R<->L label consistently downstream.
* All angles at the API are degrees; radians are internal only.

States are plain complex numpy arrays of shape (2,); comparisons between
states are meaningful only up to a global phase, use :func:`same_up_to_phase`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HALF = "half"
QUARTER = "quarter"

# Retardance Gamma per plate kind.
RETARDANCE = {HALF: math.pi, QUARTER: math.pi / 2}

# Canonical single-photon states in the (H, V) basis.
H = np.array([1.0, 0.0], dtype=complex)
V = np.array([0.0, 1.0], dtype=complex)
D = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2)
A = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2)
R = np.array([1.0, -1.0j], dtype=complex) / math.sqrt(2)
L = np.array([1.0, 1.0j], dtype=complex) / math.sqrt(2)


def jones(h, v):
    """Normalized Jones vector with components (h, v).

    Raises ValueError for the zero vector.
    """
    vec = np.array([h, v], dtype=complex)
    norm = np.linalg.norm(vec)
    if norm < 1e-300:
        raise ValueError("Jones vector must be nonzero")
    return vec / norm


def normalize(state):
    return jones(state[0], state[1])


@dataclass(frozen=True)
class WaveplateSetting:
    """One wave plate: kind ('half' or 'quarter') and fast-axis angle in degrees."""

    kind: str
    fast_axis_deg: float

    def __post_init__(self):
        if self.kind not in RETARDANCE:
            raise ValueError(f"unknown wave-plate kind {self.kind!r}")
        if not math.isfinite(self.fast_axis_deg):
            raise ValueError("fast-axis angle must be finite")


def rotation_matrix(theta_rad):
    c, s = math.cos(theta_rad), math.sin(theta_rad)
    return np.array([[c, -s], [s, c]], dtype=complex)


def waveplate_operator(setting):
    """Jones matrix of a wave plate, R(theta) diag(1, e^{-i Gamma}) R(-theta)."""
    theta = math.radians(setting.fast_axis_deg)
    gamma = RETARDANCE[setting.kind]
    rot = rotation_matrix(theta)
    retard = np.diag([1.0, np.exp(-1j * gamma)])
    return rot @ retard @ rot.conj().T


def half_wave(fast_axis_deg):
    return waveplate_operator(WaveplateSetting(HALF, fast_axis_deg))


def quarter_wave(fast_axis_deg):
    return waveplate_operator(WaveplateSetting(QUARTER, fast_axis_deg))


def apply_waveplates(state, settings):
    """Send a normalized state through wave plates, first list entry first."""
    out = np.asarray(state, dtype=complex)
    for setting in settings:
        out = waveplate_operator(setting) @ out
    return normalize(out)


def _wrap_delta(delta_deg):
    # Wrap to (-180, 180].
    wrapped = (delta_deg + 180.0) % 360.0 - 180.0
    return 180.0 if wrapped == -180.0 else wrapped


@dataclass(frozen=True)
class PumpAngles:
    """Elliptical pump parameterization cos(phi_p)|x> + e^{i delta} sin(phi_p)|y>.

    phi_p is stored in [0, 180) and delta in (-180, 180]; shifting phi_p by
    180 degrees only flips the global sign of the state, so the wrap is a
    pure relabeling.
    """

    phi_p: float
    delta: float

    def __post_init__(self):
        if not (math.isfinite(self.phi_p) and math.isfinite(self.delta)):
            raise ValueError("pump angles must be finite")
        object.__setattr__(self, "phi_p", self.phi_p % 180.0)
        object.__setattr__(self, "delta", _wrap_delta(self.delta))


def pump_from_angles(angles):
    """Jones vector of the pump for given (phi_p, delta)."""
    phi = math.radians(angles.phi_p)
    delta = math.radians(angles.delta)
    return np.array([math.cos(phi), np.exp(1j * delta) * math.sin(phi)], dtype=complex)


def pump_angles(state, tol=1e-12):
    """Invert :func:`pump_from_angles` up to a global phase.

    When either component vanishes the relative phase is unobservable and
    delta is reported as 0 by convention.
    """
    h, v = complex(state[0]), complex(state[1])
    mag_h, mag_v = abs(h), abs(v)
    norm = math.hypot(mag_h, mag_v)
    if norm < tol:
        raise ValueError("pump state must be nonzero")
    phi = math.degrees(math.atan2(mag_v, mag_h))
    if mag_v < tol * norm or mag_h < tol * norm:
        return PumpAngles(phi_p=phi, delta=0.0)
    delta = math.degrees(np.angle(v) - np.angle(h))
    return PumpAngles(phi_p=phi, delta=delta)


def overlap(a, b):
    """Inner product <a|b>."""
    return complex(np.vdot(np.asarray(a), np.asarray(b)))


def same_up_to_phase(a, b, tol=1e-10):
    """True when two normalized states differ only by a global phase."""
    return abs(1.0 - abs(overlap(a, b))) <= tol
