"""Gauge potentials and color fields for the traveling-wave ansatz.

The configuration is built from five real amplitudes on the rotated
su(2) frame Sx, Sy, Sz (see su2.rotated_basis), with phase
theta = k z - omega t:

    phi = alpha1 Sx
    A   = [(alpha3 + alpha5 cos theta) Sz + alpha4 sin theta Sy] e_y
          + alpha2 Sx e_z

The fields follow the non-Abelian definitions

    E = -(1/c) dA/dt - grad phi - i g [phi, A]
    B = curl A - i g (A x A),        (A x A)_i = eps_ijk A_j A_k

and the covariant tensor F_mu_nu = d_mu A_nu - d_nu A_mu + i g [A_mu, A_nu]
with A_mu = (phi, -A) and d_0 = (1/c) d/dt, so F_0i = E_i and
B_i = -(1/2) eps_ijk F_jk.

Every field comes in two routes: a closed form (the reduced algebra) and
a numeric route that differentiates the potentials by central finite
differences and takes exact commutators. Agreement of the two is the
correctness check for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .su2 import LieElement, minus_i_commutator, rotated_basis

__all__ = [
    "AnsatzParams",
    "SpacetimePoint",
    "ColorVector",
    "scalar_potential",
    "vector_potential",
    "electric_field_analytic",
    "magnetic_field_analytic",
    "electric_field_numeric",
    "magnetic_field_numeric",
    "field_strength",
    "field_strength_norm",
    "field_coefficient_groups",
    "shifted",
    "central_difference",
    "central_difference4",
]

_AXES = ("t", "x", "y", "z")


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class AnsatzParams:
    """Amplitudes and couplings of one configuration.

    alpha1..alpha5 are the ansatz amplitudes, lam the frame rotation rate,
    k and omega the wave numbers, g the coupling and c the wave speed.
    """

    alpha1: float = 0.0
    alpha2: float = 0.0
    alpha3: float = 0.0
    alpha4: float = 0.0
    alpha5: float = 0.0
    lam: float = 0.0
    k: float = 0.0
    omega: float = 0.0
    g: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3", "alpha4", "alpha5",
                     "lam", "k", "omega", "g", "c"):
            _require_finite(name, getattr(self, name))
        if self.c == 0.0:
            raise ValueError("c must be nonzero")

    def phase(self, s: "SpacetimePoint") -> float:
        return self.k * s.z - self.omega * s.t

    @property
    def is_abelian(self) -> bool:
        return self.g == 0.0


@dataclass(frozen=True)
class SpacetimePoint:
    t: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            _require_finite(name, getattr(self, name))


@dataclass(frozen=True)
class ColorVector:
    """Spatial vector with su(2)-valued components."""

    ex: LieElement = LieElement()
    ey: LieElement = LieElement()
    ez: LieElement = LieElement()

    def components(self) -> tuple[LieElement, LieElement, LieElement]:
        return (self.ex, self.ey, self.ez)

    def norm(self) -> float:
        return math.sqrt(sum(e.norm() ** 2 for e in self.components()))

    def __add__(self, other):
        if not isinstance(other, ColorVector):
            return NotImplemented
        return ColorVector(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def __sub__(self, other):
        if not isinstance(other, ColorVector):
            return NotImplemented
        return ColorVector(self.ex - other.ex, self.ey - other.ey, self.ez - other.ez)

    def __neg__(self):
        return ColorVector(-self.ex, -self.ey, -self.ez)

    def __mul__(self, s):
        if not isinstance(s, (int, float)):
            return NotImplemented
        return ColorVector(self.ex * s, self.ey * s, self.ez * s)

    __rmul__ = __mul__


def shifted(s: SpacetimePoint, axis: str, delta: float) -> SpacetimePoint:
    """Copy of s displaced by delta along one of 't', 'x', 'y', 'z'."""
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}, got {axis!r}")
    return replace(s, **{axis: getattr(s, axis) + delta})


def central_difference(f, s: SpacetimePoint, axis: str, h: float):
    """Second-order first derivative of f along axis at s."""
    return (f(shifted(s, axis, h)) - f(shifted(s, axis, -h))) * (0.5 / h)


def central_difference4(f, s: SpacetimePoint, axis: str, h: float):
    """Fourth-order five-point first derivative of f along axis at s."""
    f1 = f(shifted(s, axis, h))
    f2 = f(shifted(s, axis, 2.0 * h))
    fm1 = f(shifted(s, axis, -h))
    fm2 = f(shifted(s, axis, -2.0 * h))
    return ((f1 - fm1) * 8.0 - (f2 - fm2)) * (1.0 / (12.0 * h))


def scalar_potential(p: AnsatzParams, s: SpacetimePoint) -> LieElement:
    """phi = alpha1 Sx at the point's y."""
    sx, _, _ = rotated_basis(p.lam, s.y)
    return p.alpha1 * sx


def vector_potential(p: AnsatzParams, s: SpacetimePoint) -> ColorVector:
    """A with its e_y wave part and constant e_z leg; e_x is zero."""
    th = p.phase(s)
    sx, sy, sz = rotated_basis(p.lam, s.y)
    ey = (p.alpha3 + p.alpha5 * math.cos(th)) * sz + (p.alpha4 * math.sin(th)) * sy
    return ColorVector(LieElement(), ey, p.alpha2 * sx)


def field_coefficient_groups(p: AnsatzParams):
    """Harmonic coefficients of the closed-form fields.

    Returns ((e_const, e_cos, e_sin), (b_const, b_cos, b_sin)) where the
    electric e_y component is (e_const + e_cos cos th) Sy + e_sin sin th Sz
    and the magnetic e_x component is the same shape with the b groups.
    """
    w = p.omega / p.c
    e_const = -p.lam * p.alpha1 - 2.0 * p.g * p.alpha1 * p.alpha3
    e_cos = w * p.alpha4 - 2.0 * p.g * p.alpha1 * p.alpha5
    e_sin = -w * p.alpha5 + 2.0 * p.g * p.alpha1 * p.alpha4
    b_const = p.lam * p.alpha2 + 2.0 * p.g * p.alpha2 * p.alpha3
    b_cos = -p.k * p.alpha4 + 2.0 * p.g * p.alpha2 * p.alpha5
    b_sin = p.k * p.alpha5 - 2.0 * p.g * p.alpha2 * p.alpha4
    return (e_const, e_cos, e_sin), (b_const, b_cos, b_sin)


def electric_field_analytic(p: AnsatzParams, s: SpacetimePoint) -> ColorVector:
    """Closed form of E; only the e_y component is nonzero."""
    th = p.phase(s)
    _, sy, sz = rotated_basis(p.lam, s.y)
    (e_const, e_cos, e_sin), _ = field_coefficient_groups(p)
    ey = (e_const + e_cos * math.cos(th)) * sy + (e_sin * math.sin(th)) * sz
    return ColorVector(LieElement(), ey, LieElement())


def magnetic_field_analytic(p: AnsatzParams, s: SpacetimePoint) -> ColorVector:
    """Closed form of B; only the e_x component is nonzero."""
    th = p.phase(s)
    _, sy, sz = rotated_basis(p.lam, s.y)
    _, (b_const, b_cos, b_sin) = field_coefficient_groups(p)
    ex = (b_const + b_cos * math.cos(th)) * sy + (b_sin * math.sin(th)) * sz
    return ColorVector(ex, LieElement(), LieElement())


def _check_h(h: float):
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError(f"step h must be positive and finite, got {h!r}")


def electric_field_numeric(p: AnsatzParams, s: SpacetimePoint, h: float = 1e-4) -> ColorVector:
    """E from finite differences of the potentials plus exact commutators."""
    _check_h(h)
    pot = lambda q: scalar_potential(p, q)
    vec = lambda q: vector_potential(p, q)
    da_dt = central_difference(vec, s, "t", h)
    grad = ColorVector(
        central_difference(pot, s, "x", h),
        central_difference(pot, s, "y", h),
        central_difference(pot, s, "z", h),
    )
    phi = scalar_potential(p, s)
    a = vector_potential(p, s)
    comm = ColorVector(*(p.g * minus_i_commutator(phi, ai) for ai in a.components()))
    return (-1.0 / p.c) * da_dt - grad + comm


def magnetic_field_numeric(p: AnsatzParams, s: SpacetimePoint, h: float = 1e-4) -> ColorVector:
    """B from a finite-difference curl plus the exact quadratic term."""
    _check_h(h)
    comp = {
        "x": lambda q: vector_potential(p, q).ex,
        "y": lambda q: vector_potential(p, q).ey,
        "z": lambda q: vector_potential(p, q).ez,
    }
    curl = ColorVector(
        central_difference(comp["z"], s, "y", h) - central_difference(comp["y"], s, "z", h),
        central_difference(comp["x"], s, "z", h) - central_difference(comp["z"], s, "x", h),
        central_difference(comp["y"], s, "x", h) - central_difference(comp["x"], s, "y", h),
    )
    a = vector_potential(p, s)
    quad = ColorVector(
        p.g * minus_i_commutator(a.ey, a.ez),
        p.g * minus_i_commutator(a.ez, a.ex),
        p.g * minus_i_commutator(a.ex, a.ey),
    )
    return curl + quad


def _covariant_potential(p: AnsatzParams, mu: int):
    """Component function of A_mu = (phi, -A)."""
    if mu == 0:
        return lambda q: scalar_potential(p, q)
    name = ("ex", "ey", "ez")[mu - 1]
    return lambda q: -getattr(vector_potential(p, q), name)


def field_strength(p: AnsatzParams, s: SpacetimePoint, h: float = 1e-4):
    """Antisymmetric 4x4 tensor of LieElement, assembled numerically.

    Derivatives are second-order central differences; the commutator
    i g [A_mu, A_nu] is exact. Index 0 differentiates via (1/c) d/dt.
    """
    _check_h(h)
    funcs = [_covariant_potential(p, mu) for mu in range(4)]
    here = [f(s) for f in funcs]

    def deriv(mu, f):
        val = central_difference(f, s, _AXES[mu], h)
        return (1.0 / p.c) * val if mu == 0 else val

    f_tensor = [[LieElement() for _ in range(4)] for _ in range(4)]
    for mu in range(4):
        for nu in range(mu + 1, 4):
            # i g [A_mu, A_nu] = -g * minus_i_commutator(A_mu, A_nu)
            val = deriv(mu, funcs[nu]) - deriv(nu, funcs[mu]) \
                - p.g * minus_i_commutator(here[mu], here[nu])
            f_tensor[mu][nu] = val
            f_tensor[nu][mu] = -val
    return f_tensor


def field_strength_norm(f_tensor) -> float:
    """Root of the summed squared coefficients over all 16 entries."""
    return math.sqrt(sum(f_tensor[m][n].norm() ** 2 for m in range(4) for n in range(4)))
