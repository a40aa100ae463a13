"""Square-free polynomials in x_1..x_m and u modulo x_i^2 + u x_i.

A term is keyed by (S, d) meaning x_S u^d with S a bitmask.  Products reduce
on the fly: x_S * x_T = x_{S|T} (-u)^{|S&T|}.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from math import comb

from .simplicial import popcount


class SquareFreeExpr:
    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        self.terms: dict[tuple[int, int], int] = {k: v for k, v in (terms or {}).items() if v}

    # constructors
    @classmethod
    def const(cls, m, c=1):
        return cls(m, {(0, 0): c})

    @classmethod
    def x(cls, m, i):
        """The generator x_i, 1-based."""
        return cls(m, {(1 << (i - 1), 0): 1})

    @classmethod
    def u(cls, m, power=1):
        return cls(m, {(0, power): 1})

    @classmethod
    def monomial(cls, m, S, d=0, c=1):
        return cls(m, {(S, d): c})

    def __repr__(self):
        return f"SquareFreeExpr(m={self.m}, {self.terms})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = SquareFreeExpr.const(self.m, other)
        return self.m == other.m and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = SquareFreeExpr.const(self.m, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SquareFreeExpr(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return SquareFreeExpr(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SquareFreeExpr(self.m, {k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (s, d), a in self.terms.items():
            for (t, e), b in other.terms.items():
                common = popcount(s & t)
                coef = a * b
                if common & 1:
                    coef = -coef
                out[(s | t, d + e + common)] += coef
        return SquareFreeExpr(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = SquareFreeExpr.const(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degrees(self) -> set[int]:
        return {popcount(s) + d for s, d in self.terms}

    def graded(self, degree: int) -> "SquareFreeExpr":
        return SquareFreeExpr(
            self.m, {(s, d): v for (s, d), v in self.terms.items() if popcount(s) + d == degree}
        )

    def is_homogeneous(self, degree: int) -> bool:
        return all(popcount(s) + d == degree for s, d in self.terms)

    def reduce_mod(self, p: int) -> "SquareFreeExpr":
        return SquareFreeExpr(self.m, {k: v % p for k, v in self.terms.items()})

    def coefficient(self, S: int, d: int) -> int:
        return self.terms.get((S, d), 0)


def elementary(m: int, k: int) -> SquareFreeExpr:
    """sigma_k(x_1, ..., x_m) as a sum of square-free monomials."""
    terms = {}
    for combo in combinations(range(m), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        terms[(mask, 0)] = 1
    return SquareFreeExpr(m, terms)


def translated_elementary(m: int, k: int) -> SquareFreeExpr:
    """sigma_k(x_1 + u, ..., x_m + u) = sum_j C(m-j, k-j) sigma_j u^(k-j)."""
    out = SquareFreeExpr(m)
    for j in range(k + 1):
        out = out + elementary(m, j) * SquareFreeExpr.u(m, k - j) * comb(m - j, k - j)
    return out


def symmetric_collapse(expr: SquareFreeExpr, degree: int) -> list[int] | None:
    """Coefficients g_k with expr = sum_k g_k sigma_k u^(degree-k), or None if not symmetric."""
    m = expr.m
    by_size: dict[int, set[int]] = defaultdict(set)
    seen: dict[int, int] = defaultdict(int)
    for (s, d), v in expr.terms.items():
        k = popcount(s)
        if k + d != degree:
            return None
        by_size[k].add(v)
        seen[k] += 1
    out = []
    for k in range(degree + 1):
        vals = by_size.get(k, set())
        if not vals:
            out.append(0)
            continue
        if len(vals) != 1 or seen[k] != comb(m, k):
            return None
        out.append(vals.pop())
    return out
