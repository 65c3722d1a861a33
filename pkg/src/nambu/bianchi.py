"""Classification of (n+1)-dimensional n-Lie algebras.

Every such algebra is encoded by a linear 1-form α = Σ a_ij x_j dx_i on the
dual chart through T = ±α⌋(∂₁∧…∧∂_{n+1}); the matrix ‖a_ij‖ is the algebra's
generating bilinear form.  The algebra is unimodular iff the matrix is
symmetric, in which case (rank, max index) is a complete isomorphism
invariant.  Otherwise the skew part has rank exactly 2 and, after reducing it
to the standard block ½(z₁dz₂ − z₂dz₁), the remaining symmetric 2×2 block
carries a single scale invariant λ.

Orientation convention: the sign of the correspondence is fixed so that the
algebra with single bracket [e₁,e₂,e₃] = e₄ has generating matrix a₄₄ = +1
(i.e. generating polynomial ½x₄²).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .multivector import MultiVector, OneForm
from .nlie import NLieStructure
from .npoisson import dual_nvector
from .poly import Poly

SKEW_STANDARD = [[Fraction(0), Fraction(-1, 2)], [Fraction(1, 2), Fraction(0)]]


@dataclass(frozen=True)
class BianchiLabel:
    """Isomorphism-class label of an (n+1)-dimensional n-Lie algebra."""

    kind: str  # unimodular | psi_plus | psi_minus | psi_one | psi_zero
    r: int | None = None        # rank of the quadratic form (unimodular only)
    m: int | None = None        # max of positive/negative index (unimodular only)
    lam: Fraction | float | None = None  # scale invariant λ > 0 (psi_plus/minus)

    def __str__(self) -> str:
        if self.kind == "unimodular":
            return f"Unimodular{{r={self.r}, m={self.m}}}"
        if self.kind == "psi_plus":
            return f"PsiLambdaPlus{{λ={self.lam}}}"
        if self.kind == "psi_minus":
            return f"PsiLambdaMinus{{λ={self.lam}}}"
        return {"psi_one": "PsiOne", "psi_zero": "PsiZero"}[self.kind]

    def same_as(self, other: "BianchiLabel", tolerance: float = 1e-9) -> bool:
        if self.kind != other.kind or (self.r, self.m) != (other.r, other.m):
            return False
        if self.lam is None or other.lam is None:
            return self.lam is None and other.lam is None
        if isinstance(self.lam, Fraction) and isinstance(other.lam, Fraction):
            return self.lam == other.lam
        return abs(float(self.lam) - float(other.lam)) <= tolerance

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.r is not None:
            out["r"] = self.r
            out["m"] = self.m
        if self.lam is not None:
            out["lambda"] = str(self.lam) if isinstance(self.lam, Fraction) else self.lam
        return out


def unimodular_label(r: int, m: int) -> BianchiLabel:
    if not (0 <= r and (r + 1) // 2 <= m <= r):
        raise ValueError(f"invalid unimodular label (r={r}, m={m})")
    return BianchiLabel("unimodular", r=r, m=m)


def psi_label(kind: str, lam=None) -> BianchiLabel:
    if kind in ("psi_plus", "psi_minus"):
        if lam is None or (isinstance(lam, Fraction) and lam <= 0) or float(lam) <= 0:
            raise ValueError("λ must be positive")
        return BianchiLabel(kind, lam=lam if isinstance(lam, float) else Fraction(lam))
    if kind in ("psi_one", "psi_zero"):
        return BianchiLabel(kind)
    raise ValueError(f"unknown label kind {kind!r}")


# -- generating form ----------------------------------------------------------------

def generating_form(p: NLieStructure) -> linalg.Matrix:
    """Matrix a_ij of the generating bilinear form of an (n+1)-dim algebra.

    The linear n-vector T of the algebra determines α by
    α_i = (−1)^i · (coefficient of T on the index tuple omitting i),
    1-based, the sign fixing the library's orientation.
    """
    n = p.arity
    if p.dim != n + 1:
        raise ValueError("dimension must equal arity + 1")
    t = dual_nvector(p)
    out = linalg.zeros(p.dim, p.dim)
    for i in range(p.dim):
        comp = tuple(k for k in range(p.dim) if k != i)
        poly = t.coefficient(comp)
        sign = 1 if i % 2 == 1 else -1  # (−1)^i with 1-based i
        for exps, coef in poly.terms.items():
            if sum(exps) != 1:
                raise ValueError("tensor coefficients are not linear")
            out[i][exps.index(1)] = sign * coef
    return out


def algebra_from_form(a: linalg.Matrix, arity: int) -> NLieStructure:
    """Inverse of ``generating_form``: structure constants from a matrix."""
    dim = arity + 1
    if len(a) != dim:
        raise ValueError("matrix size must equal arity + 1")
    consts: dict[tuple[int, ...], list[Fraction]] = {}
    for i in range(dim):
        comp = tuple(k for k in range(dim) if k != i)
        sign = 1 if i % 2 == 1 else -1
        value = [sign * Fraction(a[i][j]) for j in range(dim)]
        if any(x != 0 for x in value):
            consts[comp] = value
    return NLieStructure(dim, arity, consts)


def generating_one_form(p: NLieStructure) -> OneForm:
    return OneForm.from_matrix(generating_form(p))


def is_unimodular(p: NLieStructure) -> bool:
    """All inner derivations traceless ⟺ the generating matrix is symmetric."""
    a = generating_form(p)
    return a == linalg.transpose(a)


# -- classification ----------------------------------------------------------------------

def _exact_sqrt(x: Fraction) -> Fraction | float:
    """√x as a Fraction when exact, else a float."""
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return math.sqrt(num / den)


def _standardize_skew(k: linalg.Matrix) -> linalg.Matrix:
    """Invertible C with CᵀKC = the standard ½-block ⊕ 0, for skew K of rank 2."""
    n = len(k)
    pivot = next(((i, j) for i in range(n) for j in range(i + 1, n) if k[i][j] != 0),
                 None)
    if pivot is None:
        raise ValueError("skew part vanishes")
    i, j = pivot
    c1 = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
    c2 = [Fraction(-1, 2) / k[i][j] if t == j else Fraction(0) for t in range(n)]

    def pair(u, v):
        return sum((u[a] * k[a][b] * v[b] for a in range(n) for b in range(n)),
                   Fraction(0))

    cols = [c1, c2]
    k12 = pair(c1, c2)  # −1/2 by construction
    for t in range(n):
        if t in (i, j):
            continue
        e = [Fraction(1) if s == t else Fraction(0) for s in range(n)]
        # remove the components pairing with the symplectic plane
        coef1 = pair(c2, e) / pair(c2, c1)
        coef2 = pair(c1, e) / k12
        w = [e[s] - coef1 * c1[s] - coef2 * c2[s] for s in range(n)]
        cols.append(w)
    c = [[cols[col][row] for col in range(n)] for row in range(n)]
    kk = linalg.mat_mul(linalg.transpose(c), linalg.mat_mul(k, c))
    expected = linalg.zeros(n, n)
    expected[0][1], expected[1][0] = Fraction(-1, 2), Fraction(1, 2)
    if kk != expected:
        raise ValueError("skew part does not have rank 2")
    return c


def classify(p: NLieStructure) -> BianchiLabel:
    """Complete isomorphism label of a valid (n+1)-dimensional n-Lie algebra."""
    ok, witness = p.check_n_jacobi()
    if not ok:
        raise ValueError(f"not an n-Lie algebra; witness {witness}")
    a = generating_form(p)
    dim = p.dim
    at = linalg.transpose(a)
    sym = linalg.mat_scale(Fraction(1, 2), linalg.mat_add(a, at))
    skew = linalg.mat_scale(Fraction(1, 2), linalg.mat_sub(a, at))
    if all(x == 0 for row in skew for x in row):
        r = linalg.rank(sym)
        pos, neg = linalg.signature(sym)
        return unimodular_label(r, max(pos, neg))
    c = _standardize_skew(skew)
    a2 = linalg.mat_mul(linalg.transpose(c), linalg.mat_mul(a, c))
    for i in range(dim):
        for j in range(dim):
            if (i >= 2 or j >= 2) and a2[i][j] != 0:
                raise ValueError("generating form is inconsistent: "
                                 "support outside the symplectic plane")
    s2 = [[(a2[i][j] + a2[j][i]) / 2 for j in range(2)] for i in range(2)]
    if all(x == 0 for row in s2 for x in row):
        return psi_label("psi_zero")
    # determinant of the symmetric block is invariant under the residual
    # (determinant ±1) transformations that preserve the standard skew block
    d = linalg.det(s2)
    if d == 0:
        return psi_label("psi_one")
    lam = _exact_sqrt(abs(d))
    return psi_label("psi_plus" if d > 0 else "psi_minus", lam)


def synthesize(label: BianchiLabel, arity: int) -> NLieStructure:
    """An algebra realizing the given label, built from its canonical form."""
    dim = arity + 1
    a = linalg.zeros(dim, dim)
    if label.kind == "unimodular":
        r, m = label.r, label.m
        if not (0 <= r <= dim and (r + 1) // 2 <= m <= r or r == m == 0):
            raise ValueError(f"invalid unimodular parameters for dimension {dim}")
        for i in range(m):
            a[i][i] = Fraction(1)
        for i in range(m, r):
            a[i][i] = Fraction(-1)
    else:
        if dim < 2:
            raise ValueError("Ψ-family labels need dimension ≥ 2")
        a[0][1], a[1][0] = Fraction(-1, 2), Fraction(1, 2)
        if label.kind in ("psi_plus", "psi_minus"):
            lam = Fraction(label.lam)
            if lam <= 0:
                raise ValueError("λ must be positive")
            a[0][0] = lam
            a[1][1] = lam if label.kind == "psi_plus" else -lam
        elif label.kind == "psi_one":
            a[0][0] = Fraction(1)
        elif label.kind != "psi_zero":
            raise ValueError(f"unknown label kind {label.kind!r}")
    return algebra_from_form(a, arity)


def is_isomorphic(p: NLieStructure, q: NLieStructure, tolerance: float = 1e-9) -> bool:
    if (p.dim, p.arity) != (q.dim, q.arity):
        raise ValueError("dimension/arity mismatch")
    return classify(p).same_as(classify(q), tolerance)


# -- derivations ---------------------------------------------------------------------------

def derivation_algebra(p: NLieStructure) -> list[linalg.Matrix]:
    """Basis of the derivation algebra of an (n+1)-dimensional n-Lie algebra.

    Derivations correspond to infinitesimal conformal symmetries A of the
    generating form G — solutions of AᵀG + GA = tr(A)·G — acting on the dual;
    the derivation on the algebra itself is the transpose Aᵀ.
    """
    g = generating_form(p)
    n = p.dim

    def unknown(i, j):
        return i * n + j

    rows = []
    for u in range(n):
        for v in range(n):
            row = [Fraction(0)] * (n * n)
            # (AᵀG)_{uv} = Σ_k A_{ku} G_{kv}; (GA)_{uv} = Σ_k G_{uk} A_{kv}
            for k in range(n):
                row[unknown(k, u)] += g[k][v]
                row[unknown(k, v)] += g[u][k]
            # tr(A)·G_{uv} = Σ_k A_{kk} G_{uv}
            for k in range(n):
                row[unknown(k, k)] -= g[u][v]
            rows.append(row)
    basis = []
    for vec in linalg.nullspace(rows, cols=n * n):
        a = [[vec[unknown(i, j)] for j in range(n)] for i in range(n)]
        basis.append(linalg.transpose(a))
    return basis


# -- the rank-3 quadric embedding demo --------------------------------------------------------

def witt_embedding_check() -> tuple[bool, dict[str, Poly]]:
    """Contract F = x₁x₃ − x₂² into ∂₁∧∂₂∧∂₃ and verify the resulting
    bivector: its three coordinate brackets and that it is a Poisson tensor
    (vanishing Schouten self-bracket)."""
    f = Poly.parse("x1 x3 - x2^2", 3)
    volume = MultiVector.basis(3, (0, 1, 2))
    bivector = volume.contract(f)
    xs = Poly.variables(3)
    brackets = {
        "{x1,x2}": bivector.apply([xs[0], xs[1]]),
        "{x1,x3}": bivector.apply([xs[0], xs[2]]),
        "{x2,x3}": bivector.apply([xs[1], xs[2]]),
    }
    expected = {
        "{x1,x2}": xs[0],
        "{x1,x3}": 2 * xs[1],
        "{x2,x3}": xs[2],
    }
    ok = brackets == expected and bivector.schouten(bivector).is_zero()
    return ok, brackets


def label_from_json(data: Mapping) -> BianchiLabel:
    kind = data["kind"]
    if kind == "unimodular":
        return unimodular_label(int(data["r"]), int(data["m"]))
    lam = data.get("lambda")
    if lam is not None and not isinstance(lam, float):
        lam = Fraction(lam)
    return psi_label(kind, lam)
