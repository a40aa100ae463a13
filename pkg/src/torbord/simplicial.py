"""Abstract simplicial complexes on [m].

Faces are int bitmasks internally (bit i-1 <-> vertex i); every public
function that takes or returns faces as vertex collections uses 1-based
labels.  A complex is stored by its facets, an antichain sorted in the
canonical (lexicographic on sorted vertex tuples) order.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

DEFAULT_MAX_M = 24


def max_m() -> int:
    """Vertex-count cap; ``TORBORD_MAX_M`` overrides the default of 24."""
    raw = os.environ.get("TORBORD_MAX_M")
    return int(raw) if raw else DEFAULT_MAX_M


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int):
    """All submasks of ``mask``, ``mask`` itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _facet_key(mask: int) -> tuple[int, ...]:
    return vertices_of(mask)


def _antichain(masks: Iterable[int]) -> tuple[int, ...]:
    # larger sets first so a single pass absorbs every subset
    kept: list[int] = []
    for f in sorted(set(masks), key=popcount, reverse=True):
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=_facet_key))


@dataclass(frozen=True)
class FaceFamily:
    """Downward-closed family on [m] given by facets, with no validity checks.

    Used for join factors such as the full simplex, which are not admissible
    inputs to the invariants but are needed to build cones and the K_j family.
    """

    m: int
    facets: tuple[int, ...]

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    def has(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def facet_lists(self) -> list[list[int]]:
        return [list(vertices_of(f)) for f in self.facets]


@dataclass(frozen=True)
class SimplicialComplex(FaceFamily):
    """A simplicial complex K on [m] with m >= 2 and K != full simplex.

    Construct through :func:`parse_complex` or :func:`from_masks`; the facet
    tuple must already be a canonical antichain.
    """

    def __post_init__(self):
        if self.m < 2:
            raise InputError("E_M_TOO_SMALL", f"m={self.m} < 2")
        if self.m > max_m():
            raise InputError("E_M_TOO_LARGE", f"m={self.m} exceeds cap {max_m()} (set TORBORD_MAX_M)")
        if not self.facets:
            raise InputError("E_EMPTY", "a complex always contains the empty face")
        if any(f >> self.m for f in self.facets):
            raise InputError("E_VERTEX_RANGE", f"vertex outside 1..{self.m}")
        if self.full in self.facets:
            raise InputError("E_FULL_SIMPLEX", "K must differ from the full simplex on [m]")

    def __str__(self):
        return to_text(self)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Real (non-ghost) vertices, 1-based."""
        return tuple(v for v in range(1, self.m + 1) if self.has(1 << (v - 1)))

    @cached_property
    def dual(self) -> "SimplicialComplex":
        return alexander_dual(self)


def from_masks(m: int, masks: Iterable[int]) -> SimplicialComplex:
    masks = list(masks)
    if not masks:
        masks = [0]
    return SimplicialComplex(m, _antichain(masks))


def parse_complex(m: int, raw_facets: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Build a complex from a facet generating set; an empty list gives the void complex."""
    if m < 2:
        raise InputError("E_M_TOO_SMALL", f"m={m} < 2")
    masks = []
    for facet in raw_facets:
        for v in facet:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
                raise InputError("E_VERTEX_RANGE", f"vertex {v!r} not in 1..{m}")
        masks.append(mask_of(facet))
    return from_masks(m, masks)


def void(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, (0,))


def boundary(n: int) -> FaceFamily:
    """Boundary of the simplex on n vertices (a plain FaceFamily when n < 2)."""
    full = (1 << n) - 1
    facets = _antichain(full & ~(1 << i) for i in range(n)) if n else (0,)
    return SimplicialComplex(n, facets) if n >= 2 else FaceFamily(n, facets)


def simplex(n: int) -> FaceFamily:
    return FaceFamily(n, ((1 << n) - 1,))


def contains_face(K: FaceFamily, face: Iterable[int]) -> bool:
    return K.has(mask_of(face))


def f_vector(K: FaceFamily) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{m-2}): number of faces with 0, 1, ..., m-1 vertices."""
    counts = [0] * (K.m + 1)
    for face in K.faces:
        counts[popcount(face)] += 1
    if counts[K.m]:
        raise InputError("E_FULL_SIMPLEX", "f-vector undefined for the full simplex")
    return tuple(counts[: K.m])


def euler_characteristic(K: FaceFamily) -> int:
    """Non-reduced Euler characteristic; the empty face is not counted."""
    return sum((-1) ** (popcount(face) - 1) for face in K.faces if face)


def link(K: SimplicialComplex, face: Iterable[int] | int) -> SimplicialComplex:
    s = face if isinstance(face, int) else mask_of(face)
    if not K.has(s):
        raise InputError("E_NOT_A_FACE", f"{vertices_of(s)} is not a face")
    if s == 0:
        return K
    return from_masks(K.m, (f & ~s for f in K.facets if s & ~f == 0))


def deletion(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Restriction of K to faces avoiding vertex v (ambient [m] unchanged)."""
    bit = 1 << (v - 1)
    return from_masks(K.m, (f & ~bit for f in K.facets))


def join(K1: FaceFamily, K2: FaceFamily) -> SimplicialComplex:
    """Join with K2's vertices shifted past K1's; ambient size m1 + m2."""
    shift = K1.m
    masks = [a | (b << shift) for a in K1.facets for b in K2.facets]
    return from_masks(K1.m + K2.m, masks)


def cone(K: FaceFamily) -> SimplicialComplex:
    """Cone with apex 1; the old vertices move to 2..m+1."""
    return join(simplex(1), K)


def minimal_nonfaces(K: FaceFamily) -> tuple[int, ...]:
    faces = K.faces
    found = set()
    for face in faces:
        for i in range(K.m):
            bit = 1 << i
            if face & bit:
                continue
            cand = face | bit
            if cand in faces or cand in found:
                continue
            if all((cand & ~(1 << j)) in faces for j in range(K.m) if cand >> j & 1):
                found.add(cand)
    return tuple(sorted(found, key=_facet_key))


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Complex on the same labels whose facets complement the minimal non-faces of K."""
    full = K.full
    return from_masks(K.m, (full & ~n for n in minimal_nonfaces(K)))


def doubly_ghost_vertices(K: SimplicialComplex) -> tuple[int, ...]:
    """Vertices that are ghosts of both K and its dual.

    Any such vertex makes the Bier sphere the boundary of a cross-polytope,
    so X_K is (CP^1)^(m-1).
    """
    dual = K.dual
    return tuple(
        v for v in range(1, K.m + 1) if not K.has(1 << (v - 1)) and not dual.has(1 << (v - 1))
    )


# -- serialization --------------------------------------------------------


def to_json(K: FaceFamily) -> dict:
    return {"m": K.m, "facets": K.facet_lists()}


def from_json(obj) -> SimplicialComplex:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError("E_PARSE", f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict) or "m" not in obj or "facets" not in obj:
        raise InputError("E_PARSE", 'expected {"m": int, "facets": [[...], ...]}')
    m, facets = obj["m"], obj["facets"]
    if not isinstance(m, int) or not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InputError("E_PARSE", "bad field types")
    return parse_complex(m, facets)


def to_text(K: FaceFamily) -> str:
    """Compact form ``"m: 1 2 3, 4"``; the void complex is ``"m:"``."""
    body = ", ".join(" ".join(map(str, f)) for f in K.facet_lists() if f)
    return f"{K.m}: {body}" if body else f"{K.m}:"


def from_text(text: str) -> SimplicialComplex:
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise InputError("E_PARSE", "compact form is 'm: v v, v v'")
    try:
        m = int(head)
        facets = [[int(t) for t in chunk.split()] for chunk in body.split(",") if chunk.strip()]
    except ValueError:
        raise InputError("E_PARSE", f"cannot parse {text!r}") from None
    return parse_complex(m, facets)


def loads(text: str) -> SimplicialComplex:
    """Parse either the JSON object form or the compact text form."""
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)
