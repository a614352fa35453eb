"""Closed-form Gausson profiles, their exact invariants, and scaling.

The equation -Delta u + omega u = u log u^2 admits the explicit Gaussian
solitary wave u(r) = exp((omega + n - r^2)/2) at every frequency. Its
integrals are elementary Gaussian moments, which makes the profile the
independent oracle for the quadrature and solver modules: invariants here
are evaluated in closed form, never by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from logson.grid import Field, RadialGrid


@dataclass
class GaussonInvariants:
    """Exact integrals of the Gausson at frequency omega in dimension n.

    With M = e^{omega+n} pi^{n/2}: mass = M, kinetic = (n/2) M, entropy
    = (omega + n/2) M, and the action value is M/2. Equivalently
    mass : kinetic : entropy = 2m : nm : (2 omega + n) m with m the
    action, the exact repartition that every solution satisfies.
    """

    omega: float
    n: int
    mass: float
    kinetic: float
    entropy: float
    action_m: float
    center_value: float


def gausson_profile(r, omega: float, n: int):
    """Pointwise Gausson exp((omega + n - r^2)/2); accepts arrays."""
    r = np.asarray(r, dtype=float)
    out = np.exp((omega + n - r * r) / 2.0)
    return out if out.shape else float(out)


def gausson_field(grid: RadialGrid, omega: float) -> Field:
    """Gausson sampled on the grid."""
    return Field(grid, gausson_profile(grid.nodes, omega, grid.n))


def gausson_invariants(omega: float, n: int) -> GaussonInvariants:
    """Closed-form invariants from Gaussian moments."""
    if n < 3:
        raise ValueError(f"dimension n must be >= 3, got {n}")
    mass = math.exp(omega + n) * math.pi ** (n / 2)
    return GaussonInvariants(
        omega=omega,
        n=n,
        mass=mass,
        kinetic=0.5 * n * mass,
        entropy=(omega + 0.5 * n) * mass,
        action_m=0.5 * mass,
        center_value=math.exp((omega + n) / 2.0),
    )


def scale_solution(u: Field, lam: float, omega: float) -> tuple[Field, float]:
    """Map a solution at omega to one at omega + log lam^2.

    If u solves the equation at frequency omega then lam*u solves it at
    omega + log lam^2, exactly and pointwise; the residual scales by
    |lam|. lam = 0 is rejected.
    """
    if lam == 0.0:
        raise ValueError("scaling by lambda = 0 collapses the solution")
    return Field(u.grid, lam * u.values), omega + math.log(lam * lam)
