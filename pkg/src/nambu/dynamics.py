"""Nambu dynamics: Hamiltonian fields of n-Poisson tensors, fixed-step RK4
integration with first-integral monitoring, and two worked systems — the
magnetized spinning particle on R³ and the Kepler problem in action-angle
coordinates.

The symbolic core stays polynomial.  The q-deformed spin bracket needs
negative powers of S₃ and the Kepler tensor carries the rational prefactor
ν = 2mk²/(ΣJ)³; both are confined to a minimal Laurent/pointwise layer that
never feeds back into the exact verifiers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .multivector import MultiVector
from .npoisson import is_n_poisson
from .poly import Poly


# -- a minimal Laurent-polynomial layer ------------------------------------------

class LaurentPoly:
    """Sparse polynomial allowing negative exponents; rational coefficients.

    Supports just enough arithmetic for the deformed spin bracket tables:
    add, subtract, multiply, partial derivatives and evaluation.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        if terms:
            for exps, coef in terms.items():
                coef = Fraction(coef)
                if coef != 0:
                    clean[tuple(exps)] = coef
        self.num_vars = num_vars
        self.terms = clean

    @staticmethod
    def from_poly(p: Poly) -> "LaurentPoly":
        return LaurentPoly(p.num_vars, p.terms)

    @staticmethod
    def monomial(num_vars: int, exps: Sequence[int], coef=1) -> "LaurentPoly":
        return LaurentPoly(num_vars, {tuple(exps): Fraction(coef)})

    def to_poly(self) -> Poly:
        if any(e < 0 for exps in self.terms for e in exps):
            raise ValueError("negative exponents present")
        return Poly(self.num_vars, self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = LaurentPoly.from_poly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, Poly):
            other = LaurentPoly.from_poly(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return LaurentPoly(self.num_vars, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly)
                       else -LaurentPoly.from_poly(other))

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, Poly):
            other = LaurentPoly.from_poly(other)
        if not isinstance(other, LaurentPoly):
            c = Fraction(other)
            return LaurentPoly(self.num_vars, {e: c * v for e, v in self.terms.items()})
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.num_vars, terms)

    __rmul__ = __mul__

    def partial(self, index: int) -> "LaurentPoly":
        terms: dict[tuple, Fraction] = {}
        for exps, coef in self.terms.items():
            k = exps[index]
            if k:
                e = list(exps)
                e[index] = k - 1
                e = tuple(e)
                terms[e] = terms.get(e, Fraction(0)) + coef * k
        return LaurentPoly(self.num_vars, terms)

    def evaluate_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for exps, coef in self.terms.items():
            v = float(coef)
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms})"


# -- systems --------------------------------------------------------------------

@dataclass(frozen=True)
class NambuSystem:
    """An n-Poisson tensor plus its n−1 Hamiltonians; defines dx/dt = X_{H…}x."""

    tensor: MultiVector
    hamiltonians: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "hamiltonians", tuple(self.hamiltonians))
        if len(self.hamiltonians) != self.tensor.degree - 1:
            raise ValueError("need exactly degree−1 Hamiltonians")

    def validate(self) -> None:
        ok, witness = is_n_poisson(self.tensor)
        if not ok:
            raise ValueError(f"tensor fails the fundamental identity; witness {witness}")

    def dynamics_field(self) -> MultiVector:
        return self.tensor.hamiltonian_field(list(self.hamiltonians))


def field_function(v: MultiVector) -> Callable[[Sequence[float]], list[float]]:
    """Float evaluation of a polynomial vector field."""
    coeffs = v.vector_coeffs()
    return lambda state: [c.evaluate_float(state) for c in coeffs]


def check_preserved_bracket(x: MultiVector, tensor: MultiVector) -> bool:
    """Whether the flow of X preserves the tensor: L_X(Λ) = 0 identically."""
    return x.lie_derivative_of(tensor).is_zero()


# -- integration ------------------------------------------------------------------

@dataclass
class Trajectory:
    times: list[float]
    states: list[list[float]]
    invariant_drift: list[float]
    ok: bool = True
    error: str | None = None

    def endpoint(self) -> list[float]:
        return self.states[-1]


def rk4_integrate(f: Callable[[Sequence[float]], Sequence[float]] | MultiVector,
                  x0: Sequence[float], h: float, steps: int,
                  monitors: Sequence[Poly] = ()) -> Trajectory:
    """Classical fixed-step 4th-order Runge–Kutta with drift monitoring.

    ``monitors`` are polynomials whose maximal deviation from their initial
    values is recorded; drift is reported, never corrected.
    """
    if h <= 0 or steps < 1:
        raise ValueError("need h > 0 and steps ≥ 1")
    if isinstance(f, MultiVector):
        f = field_function(f)
    state = [float(x) for x in x0]
    initial = [mon.evaluate_float(state) for mon in monitors]
    drift = [0.0] * len(monitors)
    times = [0.0]
    states = [state[:]]
    t = 0.0
    for _ in range(steps):
        k1 = f(state)
        k2 = f([x + 0.5 * h * d for x, d in zip(state, k1)])
        k3 = f([x + 0.5 * h * d for x, d in zip(state, k2)])
        k4 = f([x + h * d for x, d in zip(state, k3)])
        state = [x + (h / 6.0) * (a + 2 * b + 2 * c + d)
                 for x, a, b, c, d in zip(state, k1, k2, k3, k4)]
        t += h
        if not all(math.isfinite(x) for x in state):
            return Trajectory(times, states, drift, ok=False,
                              error=f"non-finite state at t={t}")
        times.append(t)
        states.append(state[:])
        for i, mon in enumerate(monitors):
            drift[i] = max(drift[i], abs(mon.evaluate_float(state) - initial[i]))
    return Trajectory(times, states, drift)


# -- the spinning particle ------------------------------------------------------------

@dataclass(frozen=True)
class SpinSystem:
    """Magnetized spin on R³: dS/dt = μ S×B, realized as the Nambu system
    with tensor ∂₁∧∂₂∧∂₃ and Hamiltonians (½S², μ S·B)."""

    b_field: tuple[Fraction, Fraction, Fraction]
    mu: Fraction = Fraction(1)

    def nambu(self) -> NambuSystem:
        tensor = MultiVector.basis(3, (0, 1, 2))
        xs = Poly.variables(3)
        h1 = Fraction(1, 2) * (xs[0] ** 2 + xs[1] ** 2 + xs[2] ** 2)
        h2 = self.mu * sum((Fraction(b) * x for b, x in zip(self.b_field, xs)),
                           Poly.zero(3))
        return NambuSystem(tensor, (h1, h2))

    def field(self) -> MultiVector:
        return self.nambu().dynamics_field()


def spin_closed_form(x0: Sequence[float], b3: float, mu: float, t: float) -> list[float]:
    """Exact solution for B = (0,0,b₃): rotation about the 3-axis with
    dS₁/dt = μb₃S₂, dS₂/dt = −μb₃S₁."""
    w = mu * b3
    c, s = math.cos(w * t), math.sin(w * t)
    return [c * x0[0] + s * x0[1], -s * x0[0] + c * x0[1], x0[2]]


def hereditary_poisson_table(f, big_f) -> list[list]:
    """Pairwise brackets {S_j,S_k} = f · ε_{jkl} ∂F/∂S_l of the ternary
    structure f·∂₁∧∂₂∧∂₃ with the function F frozen in one slot.

    Accepts Poly or LaurentPoly inputs; returns Poly entries whenever both
    inputs are polynomial.
    """
    want_poly = isinstance(f, Poly) and isinstance(big_f, Poly)
    if isinstance(f, Poly):
        f = LaurentPoly.from_poly(f)
    if isinstance(big_f, Poly):
        big_f = LaurentPoly.from_poly(big_f)
    grads = [big_f.partial(i) for i in range(3)]
    zero = LaurentPoly(3)
    table = [[zero for _ in range(3)] for _ in range(3)]
    epsilon = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
               (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}
    for j in range(3):
        for k in range(3):
            if j == k:
                continue
            l = 3 - j - k
            entry = f * grads[l] * epsilon[(j, k, l)]
            table[j][k] = entry
    if want_poly:
        table = [[entry.to_poly() for entry in row] for row in table]
    return table


def bracket_bivector(table: list[list[Poly]]) -> MultiVector:
    """The bivector Σ_{j<k} {S_j,S_k} ∂_j∧∂_k of a 3×3 bracket table."""
    comps = {}
    for j in range(3):
        for k in range(j + 1, 3):
            if not table[j][k].is_zero():
                comps[(j, k)] = table[j][k]
    return MultiVector(3, 2, comps)


# -- Kepler in action-angle coordinates -----------------------------------------------------

@dataclass(frozen=True)
class KeplerSystem:
    """The Kepler problem on the chart (J₁,J₂,J₃,φ₁,φ₂,φ₃).

    The 6-vector ν·∂_{J₁}∧…∧∂_{φ₃} with ν = 2mk²/(J₁+J₂+J₃)³ and Hamiltonians
    (J₁, J₂, J₃, φ₁−φ₂, φ₂−φ₃) drives the flow ν·(∂_{φ₁}+∂_{φ₂}+∂_{φ₃});
    ν is evaluated pointwise since it is not polynomial.
    """

    mass: float
    k_const: float

    @property
    def hamiltonians(self) -> tuple[Poly, ...]:
        xs = Poly.variables(6)
        return (xs[0], xs[1], xs[2], xs[3] - xs[4], xs[4] - xs[5])

    def constant_field(self) -> MultiVector:
        """The ν-independent part: the volume 6-vector contracted with the
        five Hamiltonian differentials."""
        volume = MultiVector.basis(6, tuple(range(6)))
        return volume.hamiltonian_field(list(self.hamiltonians))

    def nu(self, state: Sequence[float]) -> float:
        total = state[0] + state[1] + state[2]
        if total == 0:
            raise ZeroDivisionError("singular locus ΣJ = 0")
        return 2.0 * self.mass * self.k_const**2 / total**3

    def field(self) -> Callable[[Sequence[float]], list[float]]:
        base = self.constant_field().vector_coeffs()
        def f(state):
            nu = self.nu(state)
            return [nu * c.evaluate_float(state) for c in base]
        return f
