"""Closed-form phase-space moments of the stationary states.

Second and fourth moments of the lab-frame quadratures follow from the
separable normal-mode state by rotating the quadrature operators. All
expressions are written in terms of ``sin``/``cos`` of the rotation angle
rather than ``mu = tan(theta)``, which keeps them finite on the whole
parameter domain (the swapped decoupled corner has ``mu = inf``). Every
entry is validated against the exact Gauss-Hermite quadrature oracle in
the test suite.

Only commuting operator pairs appear in the fourth moments (``x`` with
``y`` and ``q``, ``p`` with ``y`` and ``q``), so the phase-space averages
coincide with the operator expectation values and can be combined into
number-operator correlators without ordering corrections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import model
from .model import QuantumNumbers, SystemParams


@dataclass(frozen=True)
class MomentSet:
    """Second moments (xx..pq) and fourth moments (xxyy..yypp) of one state."""

    xx: float
    yy: float
    pp: float
    qq: float
    xy: float
    pq: float
    xxyy: float
    ppqq: float
    xxqq: float
    yypp: float


@dataclass(frozen=True)
class ExcitationNumbers:
    """Mean lab-frame excitation numbers ``<Nx>``, ``<Ny>``."""

    nx: float
    ny: float


class LadderMoments(NamedTuple):
    """Ladder-operator correlators assembled from the moment table.

    ``cross_mag_sq`` is ``|<a_x a_y^dag>|^2``; the imaginary part of the
    cross correlator vanishes for these stationary states (``<xq>`` and
    ``<py>`` are zero, confirmed numerically by the oracle tests).
    """

    nx: float
    ny: float
    nxny: float
    cross_mag_sq: float


def second_and_fourth_moments(params: SystemParams, nm: QuantumNumbers) -> MomentSet:
    """All ten closed-form moments of the state ``Psi_(n, m)``."""
    modes = model.diagonalize(params)
    vx, vy = modes.vartheta_x, modes.vartheta_y
    s, c = math.sin(modes.theta), math.cos(modes.theta)
    s2, c2 = s * s, c * c
    sc = s * c
    s2c2 = sc * sc

    nn = 2 * nm.n + 1
    mm = 2 * nm.m + 1
    kn = 1 + 2 * nm.n * (1 + nm.n)
    km = 1 + 2 * nm.m * (1 + nm.m)

    xx = nn * c2 / (2.0 * vx) + mm * s2 / (2.0 * vy)
    yy = nn * s2 / (2.0 * vx) + mm * c2 / (2.0 * vy)
    pp = 0.5 * (nn * vx * c2 + mm * vy * s2)
    qq = 0.5 * (nn * vx * s2 + mm * vy * c2)
    xy = 0.5 * sc * (nn / vx - mm / vy)
    pq = 0.5 * sc * (nn * vx - mm * vy)

    xxyy = (3.0 * (km * vx * vx + kn * vy * vy) * s2c2
            + nn * mm * vx * vy * (1.0 - 6.0 * s2c2)) / (4.0 * vx * vx * vy * vy)
    ppqq = (3.0 * (km * vy * vy + kn * vx * vx) * s2c2
            + nn * mm * vx * vy * (1.0 - 6.0 * s2c2)) / 4.0
    quartic = nm.n * (nm.n + 1) + nm.m * (nm.m + 1) + 1
    xxqq = 0.5 * quartic * s2c2 + nn * mm * (s2 * s2 * vx * vx + c2 * c2 * vy * vy) / (4.0 * vx * vy)
    yypp = 0.5 * quartic * s2c2 + nn * mm * (s2 * s2 * vy * vy + c2 * c2 * vx * vx) / (4.0 * vx * vy)

    return MomentSet(xx=xx, yy=yy, pp=pp, qq=qq, xy=xy, pq=pq,
                     xxyy=xxyy, ppqq=ppqq, xxqq=xxqq, yypp=yypp)


def uncertainty_areas(params: SystemParams, nm: QuantumNumbers) -> tuple[float, float]:
    """Heisenberg areas ``(Ax, Ay) = (dx*dp, dy*dq)``; both are >= 1/2.

    First moments and the symmetrized cross correlations vanish for the
    stationary states, so the areas are square roots of moment products.
    At resonance (``mu = 1``) the two areas coincide for every state.
    """
    ms = second_and_fourth_moments(params, nm)
    return math.sqrt(ms.xx * ms.pp), math.sqrt(ms.yy * ms.qq)


def excitation_numbers(params: SystemParams, nm: QuantumNumbers) -> ExcitationNumbers:
    """Mean excitations of the lab-frame modes, including virtual ones.

    Each term carries the frequency mismatch factor
    ``omega/vartheta + vartheta/omega``, which exceeds 2 whenever the
    normal and bare frequencies differ; that is why the coupled ground
    state is populated at ultra-strong coupling.
    """
    modes = model.diagonalize(params)
    vx, vy = modes.vartheta_x, modes.vartheta_y
    wx, wy = params.omega_x, params.omega_y
    s, c = math.sin(modes.theta), math.cos(modes.theta)
    s2, c2 = s * s, c * c
    nn = 2 * nm.n + 1
    mm = 2 * nm.m + 1

    nx = 0.25 * c2 * (wx / vx + vx / wx) * nn + 0.25 * s2 * (wx / vy + vy / wx) * mm - 0.5
    ny = 0.25 * s2 * (wy / vx + vx / wy) * nn + 0.25 * c2 * (wy / vy + vy / wy) * mm - 0.5
    return ExcitationNumbers(nx=nx, ny=ny)


def ladder_moments(params: SystemParams, nm: QuantumNumbers) -> LadderMoments:
    """Correlators ``<Nx>``, ``<Ny>``, ``<Nx Ny>`` and ``|<a_x a_y^dag>|^2``.

    With ``A = (wx x^2 + p^2/wx)/2`` and ``B = (wy y^2 + q^2/wy)/2`` one has
    ``Nx Ny = AB - A/2 - B/2 + 1/4``, and ``<AB>`` expands over the four
    fourth moments of commuting quadrature pairs.
    """
    ms = second_and_fourth_moments(params, nm)
    ex = excitation_numbers(params, nm)
    wx, wy = params.omega_x, params.omega_y

    ab = 0.25 * (wx * wy * ms.xxyy + (wx / wy) * ms.xxqq
                 + (wy / wx) * ms.yypp + ms.ppqq / (wx * wy))
    nxny = ab - 0.5 * (ex.nx + ex.ny) - 0.25

    root = math.sqrt(wx * wy)
    cross = 0.5 * root * ms.xy + 0.5 * ms.pq / root
    return LadderMoments(nx=ex.nx, ny=ex.ny, nxny=nxny, cross_mag_sq=cross * cross)
