"""Independent brute-force verification of every closed form in the package.

Two oracles, deliberately built on different machinery than the code they
check:

* Gauss-Hermite quadrature of Wigner-space integrals, carried out in
  normal-mode coordinates where every integrand is a polynomial times the
  Gaussian weight, so a sufficient-order rule is exact up to roundoff.
  Lab-frame monomials are evaluated through the rotation on the rotated
  tensor grid, never sampled on lab grids, which removes convergence
  questions from the comparisons.
* An SVD-based Schmidt decomposition of the position-space wavefunction
  sampled on a scaled Gauss-Hermite grid; its singular values give the
  marginal purity and, as a bonus diagnostic, the von Neumann entropy.

``run_verification`` sweeps a built-in parameter grid through all checks
and returns a machine-readable report; the CLI ``verify`` command wraps
it.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import model, moments, purity, wigner
from .model import QuantumNumbers, SystemParams
from .moments import LadderMoments
from .specfun import laguerre
from .steering import steering as compute_steering
from .steering import steering_weak_general
from .wigner import RotatedPhasePoint


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite nodes and weights for the weight ``exp(-t^2)``.

    A rule with ``order`` nodes integrates polynomials of degree up to
    ``2*order - 1`` against the Gaussian weight exactly.
    """

    nodes: np.ndarray
    weights: np.ndarray
    order: int


@lru_cache(maxsize=None)
def gauss_hermite(order: int) -> QuadratureRule:
    if order < 1:
        raise ValueError(f"rule order must be positive, got {order}")
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)


def moment_oracle(params: SystemParams, nm: QuantumNumbers,
                  exponents: tuple[int, int, int, int], order: int | None = None) -> float:
    """Expectation value ``<x^a p^b y^c q^d>`` by exact quadrature.

    The Wigner integral is taken in scaled normal-mode coordinates where
    the Gaussian weight is ``exp(-t^2)`` on each axis; the monomial and
    Laguerre factors are polynomials, so the rule order chosen from the
    total degree is analytically sufficient. A user-supplied ``order`` is
    raised to that threshold if it falls short.
    """
    a, b, c_exp, d = exponents
    total = a + b + c_exp + d
    if min(exponents) < 0 or total > 8:
        raise ValueError(f"monomial exponents must be non-negative with total <= 8, got {exponents}")

    modes = model.diagonalize(params)
    vx, vy = modes.vartheta_x, modes.vartheta_y
    s, c = math.sin(modes.theta), math.cos(modes.theta)
    needed = (total + 2 * max(nm.n, nm.m)) // 2 + 2
    rule = gauss_hermite(max(order or 0, needed))
    t, w = rule.nodes, rule.weights

    big_x = t / math.sqrt(vx)      # axis i
    big_p = t * math.sqrt(vx)      # axis j
    big_y = t / math.sqrt(vy)      # axis k
    big_q = t * math.sqrt(vy)      # axis l

    x_ik = c * big_x[:, None] - s * big_y[None, :]
    y_ik = s * big_x[:, None] + c * big_y[None, :]
    p_jl = c * big_p[:, None] - s * big_q[None, :]
    q_jl = s * big_p[:, None] + c * big_q[None, :]

    t2 = t * t
    lag_n = laguerre(nm.n, 2.0 * (t2[:, None] + t2[None, :]))
    lag_m = laguerre(nm.m, 2.0 * (t2[:, None] + t2[None, :]))
    a_ij = w[:, None] * w[None, :] * lag_n
    b_kl = w[:, None] * w[None, :] * lag_m
    c_ik = x_ik**a * y_ik**c_exp
    d_jl = p_jl**b * q_jl**d

    sign = (-1.0) ** (nm.n + nm.m)
    return sign / math.pi**2 * float(
        np.einsum("ij,kl,ik,jl->", a_ij, b_kl, c_ik, d_jl, optimize=True)
    )


def moment_set_oracle(params: SystemParams, nm: QuantumNumbers) -> dict[str, float]:
    """All ten table moments plus the parity-odd ``<xq>`` and ``<py>``."""
    exps = {
        "xx": (2, 0, 0, 0), "yy": (0, 0, 2, 0), "pp": (0, 2, 0, 0), "qq": (0, 0, 0, 2),
        "xy": (1, 0, 1, 0), "pq": (0, 1, 0, 1),
        "xxyy": (2, 0, 2, 0), "ppqq": (0, 2, 0, 2), "xxqq": (2, 0, 0, 2), "yypp": (0, 2, 2, 0),
        "xq": (1, 0, 0, 1), "py": (0, 1, 1, 0),
    }
    return {name: moment_oracle(params, nm, e) for name, e in exps.items()}


def ladder_oracle(params: SystemParams, nm: QuantumNumbers) -> LadderMoments:
    """Ladder-operator correlators rebuilt from quadrature moments only."""
    ms = moment_set_oracle(params, nm)
    wx, wy = params.omega_x, params.omega_y
    nx = 0.5 * (wx * ms["xx"] + ms["pp"] / wx) - 0.5
    ny = 0.5 * (wy * ms["yy"] + ms["qq"] / wy) - 0.5
    ab = 0.25 * (wx * wy * ms["xxyy"] + (wx / wy) * ms["xxqq"]
                 + (wy / wx) * ms["yypp"] + ms["ppqq"] / (wx * wy))
    nxny = ab - 0.5 * (nx + ny) - 0.25
    root = math.sqrt(wx * wy)
    cross = 0.5 * root * ms["xy"] + 0.5 * ms["pq"] / root
    return LadderMoments(nx=nx, ny=ny, nxny=nxny, cross_mag_sq=cross * cross)


def global_purity_check(params: SystemParams, nm: QuantumNumbers,
                        wigner_fn=None, order: int | None = None) -> float:
    """``4 pi^2`` times the phase-space integral of ``W^2``; must be 1.

    The squared Laguerre factors double the polynomial degree, so the
    automatic rule order is ``2*max(n, m) + 4``. ``wigner_fn`` defaults to
    the package evaluator and exists so tests can feed a deliberately
    mis-normalized function as a negative control.
    """
    if wigner_fn is None:
        wigner_fn = wigner.wigner_rotated
    modes = model.diagonalize(params)
    vx, vy = modes.vartheta_x, modes.vartheta_y
    rule = gauss_hermite(max(order or 0, 2 * max(nm.n, nm.m) + 4))
    v, w = rule.nodes, rule.weights

    pt = RotatedPhasePoint(
        X=(v / math.sqrt(2.0 * vx))[:, None, None, None],
        P=(v * math.sqrt(0.5 * vx))[None, :, None, None],
        Y=(v / math.sqrt(2.0 * vy))[None, None, :, None],
        Q=(v * math.sqrt(0.5 * vy))[None, None, None, :],
    )
    w_vals = wigner_fn(modes, nm, pt)
    rw = w * np.exp(v * v)
    return math.pi**2 * float(
        np.einsum("i,j,k,l,ijkl->", rw, rw, rw, rw, w_vals * w_vals, optimize=True)
    )


@dataclass(frozen=True)
class SchmidtOracleResult:
    """Schmidt data of the discretized two-body wavefunction."""

    singular_values: np.ndarray
    purity: float
    linear_entropy: float
    von_neumann: float


def schmidt_oracle(params: SystemParams, nm: QuantumNumbers,
                   nodes: int | None = None) -> SchmidtOracleResult:
    """Schmidt decomposition of ``Psi_(n, m)(x, y)`` sampled in lab coordinates.

    The wavefunction is sampled on a tensor Gauss-Hermite grid scaled
    per axis to the state's ``<x^2>`` and ``<y^2>``; with the square-root
    quadrature weights folded in, the singular values of the sampled
    matrix are the Schmidt coefficients. The default grid is
    ``2*(n+m) + 24`` nodes per axis. If the discretized norm drifts from
    1 by more than ``5e-7`` the grid is too coarse and a ``RuntimeError``
    is raised instead of returning a silently degraded answer.
    """
    modes = model.diagonalize(params)
    n_nodes = nodes or (2 * (nm.n + nm.m) + 24)
    rule = gauss_hermite(n_nodes)
    t, w = rule.nodes, rule.weights

    ms = moments.second_and_fourth_moments(params, nm)
    sx = math.sqrt(2.0 * ms.xx)
    sy = math.sqrt(2.0 * ms.yy)
    x = sx * t
    y = sy * t

    s, c = math.sin(modes.theta), math.cos(modes.theta)
    big_x = c * x[:, None] + s * y[None, :]
    big_y = -s * x[:, None] + c * y[None, :]
    psi = wigner.eigenfunction(modes, nm, big_x, big_y)

    half_weight_x = np.sqrt(sx * w * np.exp(t * t))
    half_weight_y = np.sqrt(sy * w * np.exp(t * t))
    sampled = psi * half_weight_x[:, None] * half_weight_y[None, :]

    sv = np.linalg.svd(sampled, compute_uv=False)
    norm = float(np.sum(sv**2))
    if abs(norm - 1.0) > 5e-7:
        raise RuntimeError(
            f"discretized norm {norm} drifts from 1 beyond 5e-7 with {n_nodes} nodes per axis; "
            "raise the node count"
        )
    lam = sv**2
    pur = float(np.sum(lam**2))
    keep = lam > 1e-18
    vn = float(-np.sum(lam[keep] * np.log(lam[keep])))
    return SchmidtOracleResult(singular_values=sv, purity=pur,
                               linear_entropy=1.0 - pur, von_neumann=vn)


def marginal_purity_quadrature(params: SystemParams, nm: QuantumNumbers) -> float:
    """Marginal purity through the Wigner function itself (slow path).

    The marginal ``W(x, p)`` is a Gaussian envelope times a polynomial, so
    both the inner ``(y, q)`` integral (after completing the square) and
    the outer ``2 pi int W^2`` are exact Gauss-Hermite sums. Entirely
    independent of the generating-function route.
    """
    modes = model.diagonalize(params)
    vx, vy = modes.vartheta_x, modes.vartheta_y
    s, c = math.sin(modes.theta), math.cos(modes.theta)
    s2, c2 = s * s, c * c
    sc = s * c

    a_y = vx * s2 + vy * c2
    a_q = s2 / vx + c2 / vy
    gam_x = vx * vy / a_y
    gam_p = 1.0 / (s2 * vy + c2 * vx)

    inner = gauss_hermite(nm.n + nm.m + 2)
    outer = gauss_hermite(2 * (nm.n + nm.m) + 3)
    ti, wi = inner.nodes, inner.weights
    to, wo = outer.nodes, outer.weights

    x = to / math.sqrt(2.0 * gam_x)              # axis k
    p = to / math.sqrt(2.0 * gam_p)              # axis l
    y0 = -x * sc * (vx - vy) / a_y
    q0 = -p * sc * (1.0 / vx - 1.0 / vy) / a_q
    y_ki = y0[:, None] + ti[None, :] / math.sqrt(a_y)
    q_lj = q0[:, None] + ti[None, :] / math.sqrt(a_q)

    big_x = c * x[:, None] + s * y_ki            # (k, i)
    big_y = -s * x[:, None] + c * y_ki
    big_p = c * p[:, None] + s * q_lj            # (l, j)
    big_q = -s * p[:, None] + c * q_lj

    arg_n = 2.0 * (vx * big_x[:, None, :, None] ** 2
                   + big_p[None, :, None, :] ** 2 / vx)   # (k, l, i, j)
    arg_m = 2.0 * (vy * big_y[:, None, :, None] ** 2
                   + big_q[None, :, None, :] ** 2 / vy)
    inner_sum = np.einsum("i,j,klij->kl", wi, wi,
                          laguerre(nm.n, arg_n) * laguerre(nm.m, arg_m), optimize=True)

    total = float(np.einsum("k,l,kl->", wo, wo, inner_sum**2, optimize=True))
    return total * math.pi / math.sqrt(gam_x * gam_p) / (math.pi**4 * a_y * a_q)


# --------------------------------------------------------------------------
# verification suite


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "elapsed_seconds": self.elapsed_seconds,
            "checks": [c.as_dict() for c in self.checks],
        }


_GRID_OMEGA_Y = (0.8, 1.0)
_GRID_EPS_FRACTIONS = (0.3, 0.9)
_GRID_STATES = ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (2, 2))


def _reference_grid() -> list[SystemParams]:
    return [
        SystemParams(1.0, wy, frac * wy)
        for wy in _GRID_OMEGA_Y
        for frac in _GRID_EPS_FRACTIONS
    ]


def run_verification() -> VerificationReport:
    """Run the oracle suite over the built-in reference grid.

    Module-level functions under test are resolved at call time, so a
    fault injected by rebinding (for instance a corrupted moment formula)
    surfaces as a named failing check.
    """
    start = time.perf_counter()
    grid = _reference_grid()
    states = [QuantumNumbers(n, m) for n, m in _GRID_STATES]
    checks: list[CheckResult] = []

    def record(name: str, dev: float, tol: float, detail: str = "") -> None:
        checks.append(CheckResult(name=name, passed=bool(dev <= tol),
                                  max_deviation=float(dev), tolerance=tol, detail=detail))

    dev = max(abs(purity.purity_exact(p, QuantumNumbers(0, 0)).purity
                  - purity.purity_ground_closed(p).purity) for p in grid)
    record("ground-purity-closed-form", dev, 1e-10,
           "coefficient extraction vs ground-state closed form")

    # strongly squeezed states alias on the default grid; 160 nodes resolve
    # every reference point with margin
    dev = max(abs(purity.purity_exact(p, q).purity - schmidt_oracle(p, q, nodes=160).purity)
              for p in grid for q in states)
    record("marginal-purity-svd", dev, 1e-6,
           "coefficient extraction vs Schmidt-oracle purity")

    dev = max(abs(global_purity_check(p, q) - 1.0) for p in grid for q in states)
    record("global-purity", dev, 1e-8, "4*pi^2 * integral of W^2 == 1")

    dev = 0.0
    for p in grid:
        for q in states:
            ms = moments.second_and_fourth_moments(p, q)
            ref = moment_set_oracle(p, q)
            for name in ("xx", "yy", "pp", "qq", "xy", "pq", "xxyy", "ppqq", "xxqq", "yypp"):
                got = getattr(ms, name)
                want = ref[name]
                dev = max(dev, abs(got - want) / max(abs(want), 1e-2))
            dev = max(dev, abs(ref["xq"]), abs(ref["py"]))
    record("moment-table", dev, 1e-10, "closed-form moments vs quadrature; <xq>=<py>=0")

    dev = 0.0
    for frac in (0.1, 0.5, 0.9):
        p = SystemParams(1.0, 1.0, frac)
        for q in states:
            res = compute_steering(p, q)
            dev = max(dev, abs(res.s_xy), abs(res.s_yx))
    record("resonance-steering-null", dev, 0.0, "steering vanishes at resonance, post clamp")

    eps = 1e-4
    dev = 0.0
    for mu_target in (0.3, 0.6):
        detune = 2.0 * eps * (1.0 - mu_target**2) / (2.0 * mu_target)
        p = SystemParams(1.0, math.sqrt(1.0 - detune), eps)
        mu = model.diagonalize(p).mu
        for n in (1, 3, 5):
            full = compute_steering(p, QuantumNumbers(n, 0)).s_xy
            weak = steering_weak_general(QuantumNumbers(n, 0), mu)
            dev = max(dev, abs(full - weak) / weak)
    record("weak-coupling-steering", dev, 1e-3, "full quantifier vs weak-coupling closed form")

    dev = max(abs(math.fsum(purity.makarov_schmidt(QuantumNumbers(n, m), mu).lambdas) - 1.0)
              for n in range(4) for m in range(4) for mu in (0.2, 1.0 / math.sqrt(3.0), 0.9, 1.0))
    record("schmidt-normalization", dev, 1e-10, "approximate Schmidt weights sum to 1")

    dev = 0.0
    for p in grid:
        for q in states:
            ax, ay = moments.uncertainty_areas(p, q)
            dev = max(dev, 0.5 - ax, 0.5 - ay)
    for frac in (0.3, 0.9):
        p = SystemParams(1.0, 1.0, frac)
        for q in states:
            ax, ay = moments.uncertainty_areas(p, q)
            dev = max(dev, abs(ax - ay))
    record("uncertainty-areas", dev, 1e-12, "Heisenberg bound and resonance equality")

    dev = 0.0
    for p in grid:
        for q in states:
            ex = moments.excitation_numbers(p, q)
            ref = ladder_oracle(p, q)
            dev = max(dev, abs(ex.nx - ref.nx), abs(ex.ny - ref.ny))
            lm = moments.ladder_moments(p, q)
            dev = max(dev, abs(lm.nxny - ref.nxny), abs(lm.cross_mag_sq - ref.cross_mag_sq))
    record("excitation-oracle", dev, 1e-10, "ladder correlators vs quadrature moments")

    report = VerificationReport(checks=checks)
    report.elapsed_seconds = time.perf_counter() - start
    return report
