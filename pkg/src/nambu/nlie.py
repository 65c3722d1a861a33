"""Finite-dimensional n-Lie algebras given by structure constants.

An ``NLieStructure`` stores the bracket values on increasing basis tuples;
total skew-symmetry and multilinearity recover everything else.  The module
checks the n-ary Jacobi identity, builds hereditary (frozen-argument)
structures and inner derivations, and verifies the compatibility conditions
of every order between two structures on the same space.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg

IndexTuple = tuple[int, ...]
Vector = list[Fraction]


def _to_vec(v: Sequence, dim: int) -> Vector:
    v = [Fraction(x) for x in v]
    if len(v) != dim:
        raise ValueError(f"vector has length {len(v)}, expected {dim}")
    return v


class NLieStructure:
    """Arity-n skew bracket on an N-dimensional space, by structure constants."""

    __slots__ = ("dim", "arity", "constants")

    def __init__(self, dim: int, arity: int,
                 constants: Mapping[IndexTuple, Sequence] | None = None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        clean: dict[IndexTuple, Vector] = {}
        if constants:
            for idx, value in constants.items():
                idx = tuple(idx)
                if len(idx) != arity or list(idx) != sorted(set(idx)):
                    raise ValueError(f"constant key {idx} must be a strictly increasing {arity}-tuple")
                if any(not 0 <= i < dim for i in idx):
                    raise ValueError(f"constant key {idx} out of range")
                vec = _to_vec(value, dim)
                if any(x != 0 for x in vec):
                    clean[idx] = vec
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "constants", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("NLieStructure is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(dim: int, arity: int) -> "NLieStructure":
        return NLieStructure(dim, arity)

    @staticmethod
    def basis_vector(dim: int, i: int) -> Vector:
        return [Fraction(1) if j == i else Fraction(0) for j in range(dim)]

    def is_zero(self) -> bool:
        return not self.constants

    def __eq__(self, other) -> bool:
        if not isinstance(other, NLieStructure):
            return NotImplemented
        return (self.dim == other.dim and self.arity == other.arity
                and self.constants == other.constants)

    def __hash__(self) -> int:
        return hash((self.dim, self.arity,
                     frozenset((k, tuple(v)) for k, v in self.constants.items())))

    # -- linear combinations ----------------------------------------------------

    def _combine(self, other: "NLieStructure", a, b) -> "NLieStructure":
        if (self.dim, self.arity) != (other.dim, other.arity):
            raise ValueError("dimension/arity mismatch")
        a, b = Fraction(a), Fraction(b)
        keys = set(self.constants) | set(other.constants)
        zero = [Fraction(0)] * self.dim
        consts = {}
        for k in keys:
            va = self.constants.get(k, zero)
            vb = other.constants.get(k, zero)
            consts[k] = [a * x + b * y for x, y in zip(va, vb)]
        return NLieStructure(self.dim, self.arity, consts)

    def __add__(self, other: "NLieStructure") -> "NLieStructure":
        return self._combine(other, 1, 1)

    def __sub__(self, other: "NLieStructure") -> "NLieStructure":
        return self._combine(other, 1, -1)

    def __mul__(self, scalar) -> "NLieStructure":
        c = Fraction(scalar)
        return NLieStructure(self.dim, self.arity,
                             {k: [c * x for x in v] for k, v in self.constants.items()})

    __rmul__ = __mul__

    # -- the bracket --------------------------------------------------------------

    def bracket(self, vs: Sequence[Sequence]) -> Vector:
        """Multilinear totally skew evaluation of [v₁,…,v_n]."""
        if len(vs) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(vs)}")
        vecs = [_to_vec(v, self.dim) for v in vs]
        out = [Fraction(0)] * self.dim
        for idx, const in self.constants.items():
            coef = linalg.det([[vecs[a][i] for i in idx] for a in range(self.arity)])
            if coef != 0:
                for j in range(self.dim):
                    out[j] += coef * const[j]
        return out

    def bracket_basis(self, idx: Sequence[int]) -> Vector:
        """Bracket of basis vectors e_{i₁},…,e_{i_n} for arbitrary index order."""
        return self.bracket([NLieStructure.basis_vector(self.dim, i) for i in idx])

    # -- Jacobi identity ------------------------------------------------------------

    def check_n_jacobi(self) -> tuple[bool, tuple | None]:
        """Verify the n-ary Jacobi identity on all basis tuples.

        [u₁,…,u_{n−1},[v₁,…,v_n]] = Σᵢ [v₁,…,[u₁,…,u_{n−1},vᵢ],…,v_n];
        basis tuples suffice by multilinearity.  Returns (verdict, witness).
        """
        n = self.arity
        if n == 1:
            return True, None
        basis = [NLieStructure.basis_vector(self.dim, i) for i in range(self.dim)]
        for us in itertools.combinations(range(self.dim), n - 1):
            u_vecs = [basis[i] for i in us]
            ad = self.inner_derivation(u_vecs)
            for vs in itertools.combinations(range(self.dim), n):
                v_vecs = [basis[i] for i in vs]
                lhs = linalg.mat_vec(ad, self.bracket(v_vecs))
                rhs = [Fraction(0)] * self.dim
                for i in range(n):
                    args = list(v_vecs)
                    args[i] = linalg.mat_vec(ad, v_vecs[i])
                    term = self.bracket(args)
                    rhs = [x + y for x, y in zip(rhs, term)]
                if lhs != rhs:
                    return False, (us, vs)
        return True, None

    # -- hereditary structures and derivations -------------------------------------

    def hereditary(self, us: Sequence[Sequence]) -> "NLieStructure":
        """Freeze k arguments: the arity-(n−k) structure P_{u₁,…,u_k}."""
        k = len(us)
        if k >= self.arity:
            raise ValueError("must freeze fewer arguments than the arity")
        u_vecs = [_to_vec(u, self.dim) for u in us]
        new_arity = self.arity - k
        consts = {}
        basis = [NLieStructure.basis_vector(self.dim, i) for i in range(self.dim)]
        for idx in itertools.combinations(range(self.dim), new_arity):
            value = self.bracket(u_vecs + [basis[i] for i in idx])
            if any(x != 0 for x in value):
                consts[idx] = value
        return NLieStructure(self.dim, new_arity, consts)

    def inner_derivation(self, us: Sequence[Sequence]) -> linalg.Matrix:
        """Matrix of ad_{u₁,…,u_{n−1}}: v ↦ [u₁,…,u_{n−1},v]."""
        if len(us) != self.arity - 1:
            raise ValueError(f"expected {self.arity - 1} arguments, got {len(us)}")
        u_vecs = [_to_vec(u, self.dim) for u in us]
        cols = [self.bracket(u_vecs + [NLieStructure.basis_vector(self.dim, j)])
                for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_derivation(self, d: linalg.Matrix) -> bool:
        """Whether D[u₁,…,u_n] = Σᵢ [u₁,…,Duᵢ,…,u_n] on all basis tuples."""
        if len(d) != self.dim:
            raise ValueError("dimension mismatch")
        basis = [NLieStructure.basis_vector(self.dim, i) for i in range(self.dim)]
        for idx in itertools.combinations(range(self.dim), self.arity):
            args = [basis[i] for i in idx]
            lhs = linalg.mat_vec(d, self.bracket(args))
            rhs = [Fraction(0)] * self.dim
            for t in range(self.arity):
                varied = list(args)
                varied[t] = linalg.mat_vec(d, args[t])
                term = self.bracket(varied)
                rhs = [x + y for x, y in zip(rhs, term)]
            if lhs != rhs:
                return False
        return True

    def commutator_check(self, us: Sequence[Sequence], vs: Sequence[Sequence]) -> bool:
        """Commutator identity for pure inner derivations:

        [ad_{v…}, ad_{u…}] = Σᵢ ad_{u₁,…,[v₁,…,v_{n−1},uᵢ],…,u_{n−1}}.
        """
        ad_u = self.inner_derivation(us)
        ad_v = self.inner_derivation(vs)
        lhs = linalg.mat_sub(linalg.mat_mul(ad_v, ad_u), linalg.mat_mul(ad_u, ad_v))
        rhs = linalg.zeros(self.dim, self.dim)
        v_vecs = [_to_vec(v, self.dim) for v in vs]
        for i in range(len(us)):
            varied = [_to_vec(u, self.dim) for u in us]
            varied[i] = self.bracket(v_vecs + [varied[i]])
            rhs = linalg.mat_add(rhs, self.inner_derivation(varied))
        return lhs == rhs

    # -- compatibility -----------------------------------------------------------------

    def compat_defect(self, other: "NLieStructure",
                      us: Sequence[Sequence], ws: Sequence[Sequence]) -> Vector:
        """[P_{u…}(Q) + Q_{u…}(P)](w₁,…,w_n) — zero for compatible P, Q.

        Here ∂(Q)(w…) = ∂(Q(w…)) − Σᵢ Q(w₁,…,∂wᵢ,…,w_n) with ∂ the pure inner
        derivation ad_{u₁,…,u_{n−1}} of the respective structure.
        """
        total = [Fraction(0)] * self.dim
        for p, q in ((self, other), (other, self)):
            ad = p.inner_derivation(us)
            term = linalg.mat_vec(ad, q.bracket(ws))
            total = [x + y for x, y in zip(total, term)]
            for i in range(len(ws)):
                varied = [_to_vec(w, self.dim) for w in ws]
                varied[i] = linalg.mat_vec(ad, varied[i])
                term = q.bracket(varied)
                total = [x - y for x, y in zip(total, term)]
        return total

    def compat(self, other: "NLieStructure") -> tuple[bool, tuple | None]:
        """Whether the mutual Lie-derivative defect vanishes on all basis tuples."""
        if (self.dim, self.arity) != (other.dim, other.arity):
            raise ValueError("dimension/arity mismatch")
        n = self.arity
        basis = [NLieStructure.basis_vector(self.dim, i) for i in range(self.dim)]
        for us in itertools.combinations(range(self.dim), n - 1):
            u_vecs = [basis[i] for i in us]
            for ws in itertools.combinations(range(self.dim), n):
                w_vecs = [basis[i] for i in ws]
                if any(x != 0 for x in self.compat_defect(other, u_vecs, w_vecs)):
                    return False, (us, ws)
        return True, None

    def comp_condition_k(self, vs: Sequence[Sequence], ws: Sequence[Sequence]) -> bool:
        """The k-th order compatibility condition.

        C(v₁,…,v_k | w₁,…,w_k) = Σ_{I ∋ 1} ⟨(v,w)_I | (w,v)_I⟩ must vanish,
        where (v,w)_I takes vₛ in the slots s ∈ I and wₛ elsewhere, and
        ⟨a… | b…⟩(u…) is the compatibility defect of P_{a…} and P_{b…}.
        The sum runs over increasing subsets I of {1,…,k} containing 1.
        """
        k = len(vs)
        if k != len(ws):
            raise ValueError("need equally many v's and w's")
        if not 1 <= k <= self.arity - 1:
            raise ValueError(f"order {k} out of range for arity {self.arity}")
        v_vecs = [_to_vec(v, self.dim) for v in vs]
        w_vecs = [_to_vec(w, self.dim) for w in ws]
        pairs = []
        for r in range(k):
            for rest in itertools.combinations(range(1, k), r):
                i_set = {0, *rest}
                a = [v_vecs[s] if s in i_set else w_vecs[s] for s in range(k)]
                b = [w_vecs[s] if s in i_set else v_vecs[s] for s in range(k)]
                pairs.append((self.hereditary(a), self.hereditary(b)))
        sub_arity = self.arity - k
        basis = [NLieStructure.basis_vector(self.dim, i) for i in range(self.dim)]
        for us in itertools.combinations(range(self.dim), sub_arity - 1):
            u_args = [basis[i] for i in us]
            for args in itertools.combinations(range(self.dim), sub_arity):
                w_args = [basis[i] for i in args]
                total = [Fraction(0)] * self.dim
                for p, q in pairs:
                    term = p.compat_defect(q, u_args, w_args)
                    total = [x + y for x, y in zip(total, term)]
                if any(x != 0 for x in total):
                    return False
        return True

    # -- products and transforms --------------------------------------------------------

    def direct_product(self, other: "NLieStructure") -> "NLieStructure":
        """Block-diagonal structure on the direct sum of the two spaces."""
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        dim = self.dim + other.dim
        consts: dict[IndexTuple, Vector] = {}
        for idx, value in self.constants.items():
            consts[idx] = list(value) + [Fraction(0)] * other.dim
        for idx, value in other.constants.items():
            shifted = tuple(i + self.dim for i in idx)
            consts[shifted] = [Fraction(0)] * self.dim + list(value)
        return NLieStructure(dim, self.arity, consts)

    def change_basis(self, c: linalg.Matrix) -> "NLieStructure":
        """Structure constants in the basis e'_j = Σᵢ c_ij eᵢ (columns of c)."""
        c_inv = linalg.inverse(c)
        cols = [[c[i][j] for i in range(self.dim)] for j in range(self.dim)]
        consts = {}
        for idx in itertools.combinations(range(self.dim), self.arity):
            value = linalg.mat_vec(c_inv, self.bracket([cols[i] for i in idx]))
            if any(x != 0 for x in value):
                consts[idx] = value
        return NLieStructure(self.dim, self.arity, consts)


def vector_product_algebra(n: int) -> NLieStructure:
    """The n-ary vector product on R^{n+1}:

    [e_{i₁},…,e_{i_n}] = sign(σ)·e_j where (i₁,…,i_n,j) is a permutation σ
    of (1,…,n+1) — the Levi-Civita convention on an oriented orthonormal basis.
    """
    if n < 2:
        raise ValueError("arity must be at least 2")
    dim = n + 1
    consts = {}
    for idx in itertools.combinations(range(dim), n):
        (j,) = set(range(dim)) - set(idx)
        # parity of moving j from its natural slot to the end of (idx, j)
        shifts = sum(1 for i in idx if i > j)
        sign = -1 if shifts & 1 else 1
        vec = [Fraction(0)] * dim
        vec[j] = Fraction(sign)
        consts[idx] = vec
    return NLieStructure(dim, n, consts)


# -- serialization (1-based indices on the wire) ------------------------------------------

def nlie_to_json(p: NLieStructure) -> dict:
    return {
        "dim": p.dim,
        "arity": p.arity,
        "constants": [
            {"indices": [i + 1 for i in idx],
             "value": [str(x) for x in p.constants[idx]]}
            for idx in sorted(p.constants)
        ],
    }


def nlie_from_json(data: Mapping) -> NLieStructure:
    dim = int(data["dim"])
    arity = int(data["arity"])
    consts = {}
    for item in data.get("constants", []):
        idx = tuple(int(i) - 1 for i in item["indices"])
        consts[idx] = [Fraction(x) for x in item["value"]]
    return NLieStructure(dim, arity, consts)
