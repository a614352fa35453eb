"""Energy, defect, and norm functionals for the logarithmic nonlinearity.

All integrands built from s^2 log s^2 use the continuity convention at
zero: nodes where the profile vanishes contribute exactly nothing. The
convention is applied by branching on u_i == 0, not by clamping, so the
entropy of sparse fields stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from logson.errors import DegenerateFieldError
from logson.grid import (
    Field,
    dirichlet_form,
    gradient_sq_norm,
    integrate,
    laplacian_values,
    norm,
    radial_derivative_highorder,
)


@dataclass
class EnergyBreakdown:
    """All quadratic and entropy integrals of a profile at a frequency.

    J_value is the action kinetic/2 + (omega+1) mass/2 - entropy/2 and
    E_value the frequency-free part kinetic/2 - entropy/2. The entropy
    splits as entropy_plus - entropy_minus with both parts nonnegative.
    """

    mass: float
    kinetic: float
    entropy: float
    entropy_plus: float
    entropy_minus: float
    J_value: float
    E_value: float
    omega: float


@dataclass
class DefectReport:
    """Solution defects: all three vanish together on true solutions."""

    residual_norm: float
    nehari_defect: float
    pohozaev_defect: float


def _xlogx2(values: np.ndarray) -> np.ndarray:
    """u^2 log u^2 with the continuity convention at u = 0."""
    out = np.zeros_like(values)
    nz = values != 0.0
    v = values[nz]
    out[nz] = v * v * np.log(v * v)
    return out


def _ulogu2(values: np.ndarray) -> np.ndarray:
    """u log u^2 with the continuity convention at u = 0."""
    out = np.zeros_like(values)
    nz = values != 0.0
    v = values[nz]
    out[nz] = v * np.log(v * v)
    return out


def entropy(u: Field) -> tuple[float, float, float]:
    """Entropy integral int u^2 log u^2 split into positive/negative parts.

    Returns (total, plus, minus) with total = plus - minus exactly and
    plus, minus >= 0.
    """
    g = _xlogx2(u.values)
    w = u.grid.weights
    plus = float(np.dot(w, np.maximum(g, 0.0)))
    minus = float(np.dot(w, np.maximum(-g, 0.0)))
    return plus - minus, plus, minus


def energy(u: Field, omega: float) -> EnergyBreakdown:
    """Evaluate mass, kinetic and entropy integrals and the actions J, E."""
    mass = integrate(Field(u.grid, u.values * u.values))
    kinetic = gradient_sq_norm(u)
    ent, plus, minus = entropy(u)
    j = 0.5 * kinetic + 0.5 * (omega + 1.0) * mass - 0.5 * ent
    e = 0.5 * kinetic - 0.5 * ent
    return EnergyBreakdown(
        mass=mass,
        kinetic=kinetic,
        entropy=ent,
        entropy_plus=plus,
        entropy_minus=minus,
        J_value=j,
        E_value=e,
        omega=omega,
    )


def residual(u: Field, omega: float) -> Field:
    """Strong-form residual -Delta u + omega u - u log u^2 on the grid."""
    res = laplacian_values(u.grid, u.values) + omega * u.values - _ulogu2(u.values)
    return Field(u.grid, res)


def residual_norm(u: Field, omega: float) -> float:
    """Weighted L^2 norm of the strong-form residual."""
    return norm(residual(u, omega))


def nehari_defect(u: Field, omega: float) -> float:
    """Nehari constraint defect: kinetic + omega mass - entropy.

    Zero exactly when u lies on the Nehari set at frequency omega.
    """
    b = energy(u, omega)
    if b.mass == 0.0:
        raise DegenerateFieldError("nehari defect undefined for the zero field")
    return b.kinetic + omega * b.mass - b.entropy


def pohozaev_defect(u: Field, omega: float) -> float:
    """Dilation-identity defect ((n-2)/n) kinetic + (omega+1) mass - entropy."""
    b = energy(u, omega)
    if b.mass == 0.0:
        raise DegenerateFieldError("pohozaev defect undefined for the zero field")
    n = u.grid.n
    return (n - 2.0) / n * b.kinetic + (omega + 1.0) * b.mass - b.entropy


def log_sobolev_gap(u: Field, a: float) -> float:
    """Logarithmic Sobolev slack at scale parameter a.

    Returns (a^2/pi) |grad u|^2 + (log |u|^2 - n (1 + log a)) |u|^2
    minus the entropy integral; the inequality states this is >= 0 for
    every a > 0, with equality exactly on Gaussians at a = sqrt(pi).

    The gradient term is computed with the high-order derivative stencil:
    the inequality is sharp on Gaussians, and the O(h^2) bias of the
    plain kinetic quadrature would swamp the equality case.
    """
    if a <= 0:
        raise ValueError(f"scale parameter a must be positive, got {a}")
    w = u.grid.weights
    mass = float(np.dot(w, u.values * u.values))
    if mass == 0.0:
        raise DegenerateFieldError("log-Sobolev gap undefined for the zero field")
    du = radial_derivative_highorder(u)
    kinetic = float(np.dot(w, du * du))
    ent = float(np.dot(w, _xlogx2(u.values)))
    n = u.grid.n
    rhs = (a * a / math.pi) * kinetic + (math.log(mass) - n * (1.0 + math.log(a))) * mass
    return rhs - ent


# Orlicz weight defining the W-space norm: A(s) = -s^2 log s^2 near zero,
# continued past s = e^{-3} by the tangent-matched quadratic.
_A_KNOT = math.exp(-3.0)
_A_C1 = 4.0 * math.exp(-3.0)
_A_C0 = -math.exp(-6.0)


def orlicz_weight(s) -> np.ndarray:
    """Piecewise weight A(s): -s^2 log s^2 on [0, e^-3], quadratic beyond.

    Continuous, nondecreasing, and vanishing only at s = 0; both branches
    equal 6 e^-6 at the knot.
    """
    s = np.abs(np.asarray(s, dtype=float))
    out = np.empty_like(s)
    lo = s <= _A_KNOT
    slo = s[lo]
    v = np.zeros_like(slo)
    nz = slo > 0.0
    v[nz] = -slo[nz] ** 2 * np.log(slo[nz] ** 2)
    out[lo] = v
    shi = s[~lo]
    out[~lo] = 3.0 * shi**2 + _A_C1 * shi + _A_C0
    return out


def luxemburg_norm(u: Field, rel_tol: float = 1e-10) -> float:
    """inf { gamma > 0 : int A(|u|/gamma) <= 1 } by bisection on gamma.

    The map gamma -> int A(u/gamma) is continuous and nonincreasing
    because A is nondecreasing, so the infimum is the unique crossing of
    level 1. Returns 0 for the zero field.
    """
    if u.is_zero():
        return 0.0
    w = u.grid.weights

    def budget(gamma: float) -> float:
        return float(np.dot(w, orlicz_weight(u.values / gamma)))

    scale = float(np.max(np.abs(u.values)))
    lo = 1e-12 * scale
    hi = max(scale, lo * 2)
    while budget(hi) > 1.0:
        hi *= 2.0
        if hi > 1e300:
            raise RuntimeError("luxemburg bracket overflow")
    while budget(lo) < 1.0:
        if lo < 1e-280:
            # every positive gamma already satisfies the budget
            return lo
        lo /= 2.0
    for _ in range(300):
        mid = math.sqrt(lo * hi)
        if budget(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rel_tol * hi:
            break
    return 0.5 * (lo + hi)


def w_norm(u: Field) -> float:
    """Norm of the W-space: ||u||_{H^1} plus the Luxemburg infimum."""
    if u.is_zero():
        return 0.0
    b = energy(u, 0.0)
    h1 = math.sqrt(b.mass + b.kinetic)
    return h1 + luxemburg_norm(u)


def defect_report(u: Field, omega: float) -> DefectReport:
    """Residual norm plus Nehari and Pohozaev defects in one pass."""
    b = energy(u, omega)
    if b.mass == 0.0:
        raise DegenerateFieldError("defects undefined for the zero field")
    n = u.grid.n
    return DefectReport(
        residual_norm=residual_norm(u, omega),
        nehari_defect=b.kinetic + omega * b.mass - b.entropy,
        pohozaev_defect=(n - 2.0) / n * b.kinetic + (omega + 1.0) * b.mass - b.entropy,
    )
