"""Sparse multivariate polynomials with coefficients in a FieldSpec.

Just enough algebra to push 2x2 matrix identities through symbolically.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .field import FieldSpec

Monomial = Tuple[int, ...]


class Poly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: Dict[Monomial, object] = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            c = field(c)
            if c != 0:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def const(cls, field, nvars, c) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field, nvars, k) -> "Poly":
        mono = [0] * nvars
        mono[k] = 1
        return cls(field, nvars, {tuple(mono): 1})

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = self.field.add(terms.get(m, self.field.zero), c)
        return Poly(self.field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, self.nvars, {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        f = self.field
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = f.add(terms.get(m, f.zero), f.mul(c1, c2))
        return Poly(f, self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.field.zero)

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), [-e for e in m])):
            c = self.terms[mono]
            var = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e)
            cs = self.field.format(c)
            if var:
                text = var if cs == "1" else ("-" + var if cs == "-1" else f"{cs}*{var}")
            else:
                text = cs
            parts.append(text)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.format([f'x{k}' for k in range(self.nvars)])})"


def matmul2(A, B):
    """Product of two 2x2 matrices given as nested lists."""
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]
