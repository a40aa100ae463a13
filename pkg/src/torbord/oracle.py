"""Brute-force evaluation of characteristic classes on the fundamental class of X_K.

Classes are built by multiplying per-vertex factors in the square-free ring
(x'_i eliminated as x_i + u up front), never through alpha, gamma or any
closed formula.  The only input from K is the pairing

    x_S u^(m-1-|S|) [X_K] = 1 - chi(link_K S)   if S in K, else 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import charnum
from .errors import InputError
from .ring import SquareFreeExpr
from .simplicial import SimplicialComplex, euler_characteristic, link, popcount
from .symfun import partition, partitions

ORACLE_MAX_M = 9


class PairingEvaluator:
    def __init__(self, K: SimplicialComplex):
        self.K = K
        self._values: dict[int, int] = {}

    def value(self, S: int) -> int:
        if S not in self._values:
            self._values[S] = 1 - euler_characteristic(link(self.K, S)) if self.K.has(S) else 0
        return self._values[S]

    def evaluate(self, expr: SquareFreeExpr) -> int:
        m = self.K.m
        total = 0
        for (S, d), c in expr.terms.items():
            if popcount(S) + d != m - 1:
                raise InputError("E_DEGREE", f"term x_{S:b} u^{d} is not of degree {m - 1}")
            total += c * self.value(S)
        return total


def evaluate(K: SimplicialComplex, expr: SquareFreeExpr) -> int:
    return PairingEvaluator(K).evaluate(expr)


# -- classes, cached per m since they do not depend on K ---------------------


def _x(m, i):
    return SquareFreeExpr.x(m, i)


def _xp(m, i):
    return SquareFreeExpr.x(m, i) + SquareFreeExpr.u(m)


@lru_cache(maxsize=None)
def total_chern_class(m: int) -> SquareFreeExpr:
    """prod_i (1 + x_i + x'_i)."""
    out = SquareFreeExpr.const(m)
    for i in range(1, m + 1):
        out = out * (1 + _x(m, i) + _xp(m, i))
    return out


@lru_cache(maxsize=None)
def chern_monomial(m: int, I: tuple[int, ...]) -> SquareFreeExpr:
    if not I:
        return SquareFreeExpr.const(m)
    return chern_monomial(m, I[:-1]) * total_chern_class(m).graded(I[-1])


@lru_cache(maxsize=None)
def total_pontryagin_class(m: int) -> SquareFreeExpr:
    """prod_i (1 + x_i^2 + x'_i^2); p_k sits in degree 2k."""
    out = SquareFreeExpr.const(m)
    for i in range(1, m + 1):
        out = out * (1 + _x(m, i) * _x(m, i) + _xp(m, i) * _xp(m, i))
    return out


@lru_cache(maxsize=None)
def pontryagin_monomial(m: int, I: tuple[int, ...]) -> SquareFreeExpr:
    if not I:
        return SquareFreeExpr.const(m)
    return pontryagin_monomial(m, I[:-1]) * total_pontryagin_class(m).graded(2 * I[-1])


@lru_cache(maxsize=None)
def total_sw_class_real(m: int) -> SquareFreeExpr:
    """prod_i (1 + x_i + x'_i) with coefficients mod 2."""
    out = SquareFreeExpr.const(m)
    for i in range(1, m + 1):
        out = (out * (1 + _x(m, i) + _xp(m, i))).reduce_mod(2)
    return out


@lru_cache(maxsize=None)
def sw_monomial_real(m: int, I: tuple[int, ...]) -> SquareFreeExpr:
    if not I:
        return SquareFreeExpr.const(m)
    return (sw_monomial_real(m, I[:-1]) * total_sw_class_real(m).graded(I[-1])).reduce_mod(2)


@lru_cache(maxsize=None)
def milnor_class(m: int) -> SquareFreeExpr:
    """Power sum over all 2m Chern roots: sum x_i^(m-1) + sum (x_i + u)^(m-1)."""
    out = SquareFreeExpr(m)
    for i in range(1, m + 1):
        out = out + _x(m, i) ** (m - 1) + _xp(m, i) ** (m - 1)
    return out


def _guard(m):
    if m > ORACLE_MAX_M:
        raise InputError("E_RANGE", f"oracle supports m <= {ORACLE_MAX_M}")


def oracle_chern(K: SimplicialComplex, I) -> int:
    _guard(K.m)
    return evaluate(K, chern_monomial(K.m, partition(I)).graded(K.m - 1))


def oracle_milnor(K: SimplicialComplex) -> int:
    _guard(K.m)
    return evaluate(K, milnor_class(K.m))


def oracle_pontryagin(K: SimplicialComplex, I) -> int:
    _guard(K.m)
    return evaluate(K, pontryagin_monomial(K.m, partition(I)).graded(K.m - 1))


def oracle_sw_real(K: SimplicialComplex, I) -> int:
    _guard(K.m)
    return evaluate(K, sw_monomial_real(K.m, partition(I)).graded(K.m - 1)) % 2


CHECKS = ("chern", "milnor", "pontryagin", "sw")


@dataclass
class Mismatch:
    kind: str
    partition: tuple
    closed_form: int
    oracle: int


@dataclass
class VerificationReport:
    complex: SimplicialComplex
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify(K: SimplicialComplex, checks=CHECKS) -> VerificationReport:
    """Compare every closed-form number with the oracle; mismatches are data."""
    _guard(K.m)
    m = K.m
    ev = PairingEvaluator(K)
    rep = VerificationReport(K)

    def cmp(kind, I, closed, brute):
        rep.checked += 1
        if closed != brute:
            rep.mismatches.append(Mismatch(kind, I, closed, brute))

    if "chern" in checks:
        for I in partitions(m - 1):
            cmp("chern", I, charnum.chern_number(K, I), ev.evaluate(chern_monomial(m, I).graded(m - 1)))
    if "milnor" in checks:
        cmp("milnor", (), charnum.milnor_number(K), ev.evaluate(milnor_class(m)))
    if "pontryagin" in checks and m % 2 == 1:
        for I in partitions((m - 1) // 2):
            brute = ev.evaluate(pontryagin_monomial(m, I).graded(m - 1))
            cmp("pontryagin", I, charnum.pontryagin_number(K, I), brute)
    if "sw" in checks:
        for I in partitions(m - 1):
            brute = ev.evaluate(sw_monomial_real(m, I).graded(m - 1)) % 2
            cmp("sw_real", I, charnum.sw_number_real(K, I), brute)
    return rep
