"""Hydrogenic eigenenergies, characteristic time scales, and unit conversion.

Everything internal runs in hartree atomic units; seconds appear only at
the I/O boundary.  The three clocks of the long-term dynamics are

    T_cl  = 2*pi*n*^3          classical Kepler period
    t_rev = (2*n*/3) * T_cl    revival time
    t_sr  = (3*n*/4) * t_rev   superrevival time

with n* = nbar - delta the effective (quantum-defected) central quantum
number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Atomic unit of time in seconds (hbar / E_h).
ATOMIC_UNIT_OF_TIME = 2.4188843265857e-17


@dataclass(frozen=True)
class AtomSpec:
    """Parameters of a simulated wave packet.

    nbar:   central principal quantum number (real, >= 1)
    sigma:  width of the excitation distribution in units of n (> 0)
    defect: quantum defect delta for a single angular-momentum channel (>= 0)
    """

    nbar: float
    sigma: float
    defect: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "nbar", float(self.nbar))
        object.__setattr__(self, "sigma", float(self.sigma))
        object.__setattr__(self, "defect", float(self.defect))
        if not (self.nbar >= 1.0):
            raise ValueError(f"nbar must be >= 1, got {self.nbar}")
        if not (self.sigma > 0.0):
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not (self.defect >= 0.0):
            raise ValueError(f"defect must be >= 0, got {self.defect}")
        if not (self.nbar - self.defect > self.sigma):
            raise ValueError(
                "distribution reaches nonphysical n <= 0: need "
                f"nbar - defect > sigma, got {self.nbar} - {self.defect} "
                f"<= {self.sigma}"
            )

    @property
    def nstar(self) -> float:
        """Effective central quantum number nbar - defect."""
        return self.nbar - self.defect


@dataclass(frozen=True)
class TimeScales:
    """The three characteristic times, in atomic units."""

    t_cl: float
    t_rev: float
    t_sr: float


def energy(n: float, defect: float = 0.0) -> float:
    """Bound-state energy -1/(2*(n - defect)^2) in hartree.

    Raises ValueError when the effective quantum number n - defect is not
    positive.
    """
    neff = n - defect
    if not (neff > 0.0):
        raise ValueError(f"effective quantum number must be > 0, got {neff}")
    return -0.5 / (neff * neff)


def timescales(spec: AtomSpec) -> TimeScales:
    """Classical period, revival time, and superrevival time for a packet.

    The values are chained so that t_rev/t_cl == 2*n*/3 and
    t_sr/t_rev == 3*n*/4 hold to machine precision.
    """
    return timescales_from_nstar(spec.nstar)


def timescales_from_nstar(nstar: float) -> TimeScales:
    """TimeScales for an effective quantum number given directly."""
    if not (nstar > 0.0):
        raise ValueError(f"nstar must be > 0, got {nstar}")
    t_cl = 2.0 * math.pi * nstar**3
    t_rev = (2.0 * nstar / 3.0) * t_cl
    t_sr = (3.0 * nstar / 4.0) * t_rev
    return TimeScales(t_cl=t_cl, t_rev=t_rev, t_sr=t_sr)


def to_si(t_au: float) -> float:
    """Convert a time from atomic units to seconds."""
    return t_au * ATOMIC_UNIT_OF_TIME


def from_si(t_seconds: float) -> float:
    """Convert a time from seconds to atomic units."""
    return t_seconds / ATOMIC_UNIT_OF_TIME
