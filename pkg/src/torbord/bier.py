"""Bier spheres, their h-vectors, and the canonical fan.

Bier(K) lives on 2m vertices: labels 1..m for the K part and m+1..2m for
the primed copy carrying the Alexander dual.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .errors import InternalMismatch
from .simplicial import FaceFamily, SimplicialComplex, f_vector, popcount, submasks


@dataclass(frozen=True)
class BierSphere:
    origin: SimplicialComplex

    @property
    def m(self) -> int:
        return self.origin.m

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All faces as (I, J) mask pairs with I in K, J in K^dual, I & J == 0."""
        K, D = self.origin, self.origin.dual
        dual_faces = D.faces
        out = []
        for i in sorted(K.faces):
            rest = K.full & ~i
            for j in submasks(rest):
                if j in dual_faces:
                    out.append((i, j))
        return tuple(sorted(out))

    @cached_property
    def facet_pairs(self) -> tuple[tuple[int, int], ...]:
        """Maximal admissible pairs."""
        K, D = self.origin, self.origin.dual
        out = []
        for i, j in self.pairs:
            free = K.full & ~(i | j)
            extendable = any(
                (i | b) in K.faces or (j | b) in D.faces
                for b in (1 << v for v in range(self.m)) if free & b
            )
            if not extendable:
                out.append((i, j))
        return tuple(out)

    @cached_property
    def complex(self) -> FaceFamily:
        """The sphere as a face family on [2m] (not a SimplicialComplex: m differs)."""
        m = self.m
        return FaceFamily(2 * m, tuple(sorted(i | (j << m) for i, j in self.facet_pairs)))

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.m
        for i, j in self.pairs:
            counts[popcount(i) + popcount(j)] += 1
        return tuple(counts)


def bier_sphere(K: SimplicialComplex) -> BierSphere:
    return BierSphere(K)


def bier_f_vector_by_double_loop(K: SimplicialComplex) -> tuple[int, ...]:
    """Face counts of Bier(K) from a plain double loop over K x K^dual."""
    counts = [0] * K.m
    for i in K.faces:
        for j in K.dual.faces:
            if not i & j:
                counts[popcount(i) + popcount(j)] += 1
    return tuple(counts)


def h_vector(f, n: int) -> tuple[int, ...]:
    """h-vector from (f_{-1}, ..., f_{n-1}) via sum h_k t^(n-k) = sum f_{n-1-k} (t-1)^k."""
    f = list(f)
    if len(f) != n + 1:
        raise ValueError(f"f has length {len(f)}, expected {n + 1}")
    # coeff[d] = coefficient of t^d
    coeff = [0] * (n + 1)
    for k in range(n + 1):
        fk = f[n - k]
        for d in range(k + 1):
            coeff[d] += fk * comb(k, d) * (-1) ** (k - d)
    return tuple(coeff[n - k] for k in range(n + 1))


def h_vector_bier(K: SimplicialComplex) -> tuple[int, ...]:
    """h(Bier K) from the f-vector of K alone, lower half plus Dehn-Sommerville."""
    m = K.m
    f = f_vector(K)  # f[i+1] = f_i

    def fi(i):
        return f[i + 1]

    h = [0] * m
    h[0] = 1
    for p in range(1, (m - 1) // 2 + 1):
        h[p] = 1 + sum(fi(i) for i in range(p)) - sum(fi(i) for i in range(m - p - 1, m - 1))
    for p in range(m):
        if p > (m - 1) // 2:
            h[p] = h[m - 1 - p]
    return tuple(h)


def h_vector_bier_enumerated(K: SimplicialComplex) -> tuple[int, ...]:
    return h_vector(bier_sphere(K).f_vector(), K.m - 1)


# -- canonical fan ----------------------------------------------------------


def fan_rays(m: int) -> list[list[int]]:
    """Ray generators in Z^(m-1): index v-1 is -e_v, index m+v-1 is +e_v (e_m = -(e_1+...+e_{m-1}))."""
    e = []
    for v in range(m):
        if v < m - 1:
            e.append([1 if t == v else 0 for t in range(m - 1)])
        else:
            e.append([-1] * (m - 1))
    return [[-x for x in vec] for vec in e] + [list(vec) for vec in e]


def bareiss_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def facet_cone_dets(K: SimplicialComplex) -> list[tuple[tuple[int, int], int]]:
    m = K.m
    rays = fan_rays(m)
    out = []
    for i, j in bier_sphere(K).facet_pairs:
        gens = [rays[v] for v in range(m) if i >> v & 1] + [rays[m + v] for v in range(m) if j >> v & 1]
        out.append(((i, j), bareiss_det(gens)))
    return out


def facet_cone_check(K: SimplicialComplex) -> bool:
    """True iff every maximal cone C(I, J) is unimodular; raises otherwise."""
    for pair, det in facet_cone_dets(K):
        if det not in (1, -1):
            raise InternalMismatch("E_NONREGULAR", f"facet {pair} has determinant {det}")
    return True


def dehn_sommerville(h) -> bool:
    return tuple(h) == tuple(reversed(h))


def check_h_routes(K: SimplicialComplex) -> tuple[int, ...]:
    a, b = h_vector_bier(K), h_vector_bier_enumerated(K)
    if a != b:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"h(Bier) formula {a} != enumeration {b}")
    return a


def swapped(K: SimplicialComplex) -> FaceFamily:
    """Bier(K^dual) with i and i' exchanged; equals Bier(K) as a face family."""
    m = K.m
    B = bier_sphere(K.dual)
    return FaceFamily(2 * m, tuple(sorted(j | (i << m) for i, j in B.facet_pairs)))

