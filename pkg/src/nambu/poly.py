"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``m`` variables is a map from exponent tuples (length ``m``,
non-negative ints) to nonzero ``Fraction`` coefficients.  All arithmetic is
exact; this is the coefficient ring for every symbolic object in the package.

Text form: ``"3/2 x1^2 x3 - x2"`` (1-based variable names).
JSON form: ``[{"coef": "3/2", "exps": [2, 0, 1]}, ...]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


Exponent = tuple[int, ...]


class Poly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, Fraction] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                if len(exps) != num_vars:
                    raise ValueError(
                        f"exponent tuple {exps} has length {len(exps)}, expected {num_vars}"
                    )
                coef = Fraction(coef)
                if coef != 0:
                    clean[tuple(exps)] = coef
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(num_vars: int) -> "Poly":
        return Poly(num_vars)

    @staticmethod
    def const(num_vars: int, value) -> "Poly":
        return Poly(num_vars, {(0,) * num_vars: Fraction(value)})

    @staticmethod
    def var(num_vars: int, index: int) -> "Poly":
        """The coordinate x_index (0-based)."""
        if not 0 <= index < num_vars:
            raise IndexError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = 1
        return Poly(num_vars, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(num_vars: int, exps: Sequence[int], coef=1) -> "Poly":
        return Poly(num_vars, {tuple(exps): Fraction(coef)})

    @staticmethod
    def variables(num_vars: int) -> list["Poly"]:
        return [Poly.var(num_vars, i) for i in range(num_vars)]

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- ring operations ---------------------------------------------------

    def _check_vars(self, other: "Poly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.num_vars, other)
        self._check_vars(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return Poly(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.const(self.num_vars, other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Fraction(other)
            if c == 0:
                return Poly.zero(self.num_vars)
            return Poly(self.num_vars, {e: c * v for e, v in self.terms.items()})
        self._check_vars(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus ----------------------------------------------------------

    def partial(self, index: int) -> "Poly":
        """Exact partial derivative with respect to x_index (0-based)."""
        if not 0 <= index < self.num_vars:
            raise IndexError(f"variable index {index} out of range")
        terms: dict[Exponent, Fraction] = {}
        for exps, coef in self.terms.items():
            k = exps[index]
            if k:
                e = list(exps)
                e[index] = k - 1
                e = tuple(e)
                terms[e] = terms.get(e, Fraction(0)) + coef * k
        return Poly(self.num_vars, terms)

    def gradient(self) -> list["Poly"]:
        return [self.partial(i) for i in range(self.num_vars)]

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.num_vars:
            raise ValueError(
                f"point has length {len(point)}, expected {self.num_vars}"
            )
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, coef in self.terms.items():
            v = coef
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def evaluate_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for exps, coef in self.terms.items():
            v = float(coef)
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.num_vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in a canonical order: by total degree, then lexicographic."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = str(mag) + " " + " ".join(factors)
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [
            {"coef": str(coef), "exps": list(exps)}
            for exps, coef in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable[dict], num_vars: int) -> "Poly":
        terms: dict[Exponent, Fraction] = {}
        for item in data:
            exps = tuple(int(e) for e in item["exps"])
            coef = Fraction(item["coef"])
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return Poly(num_vars, terms)

    _TERM_RE = re.compile(r"\s*([+-]?)\s*([^+-]+)")
    _FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")

    @staticmethod
    def parse(text: str, num_vars: int) -> "Poly":
        """Parse the text form, e.g. ``"3/2 x1^2 x3 - x2"``."""
        text = text.strip()
        if text in ("", "0"):
            return Poly.zero(num_vars)
        result = Poly.zero(num_vars)
        for match in Poly._TERM_RE.finditer(text):
            sign, body = match.group(1), match.group(2).strip()
            if not body:
                continue
            coef = Fraction(-1 if sign == "-" else 1)
            exps = [0] * num_vars
            for factor in body.split():
                m = Poly._FACTOR_RE.match(factor)
                if m:
                    idx = int(m.group(1)) - 1
                    if not 0 <= idx < num_vars:
                        raise ValueError(f"variable x{idx + 1} out of range")
                    exps[idx] += int(m.group(2) or 1)
                else:
                    coef *= Fraction(factor)
            result = result + Poly.monomial(num_vars, exps, coef)
        return result
