"""Exhaustive and sampled enumeration of complexes, canonical relabeling,
and JSONL records for batch searches."""
from __future__ import annotations

import json
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .bier import h_vector_bier
from .bordism import (
    bordant_unitary,
    decompose,
    is_polynomial_generator,
    null_bordant_oriented_complex,
    null_bordant_real,
)
from .errors import RangeError
from .simplicial import SimplicialComplex, f_vector, from_masks, popcount, to_text, vertices_of
from .vectors import alpha, mu_vector

EXHAUSTIVE_MAX_M = 5
SAMPLE_MAX_M = 7
FINDS = ("bordant-pairs", "generators")


def all_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [m] other than the full simplex (labelled, not up to isomorphism)."""
    if m > EXHAUSTIVE_MAX_M:
        raise RangeError("E_RANGE", f"exhaustive enumeration supports m <= {EXHAUSTIVE_MAX_M}")
    full = (1 << m) - 1
    order = sorted(range(1, full), key=lambda s: (popcount(s), s))
    chosen = {0}

    def rec(idx):
        if idx == len(order):
            yield from_masks(m, chosen)
            return
        s = order[idx]
        if all((s & ~(1 << v)) in chosen for v in range(m) if s >> v & 1):
            chosen.add(s)
            yield from rec(idx + 1)
            chosen.discard(s)
        yield from rec(idx + 1)

    yield from rec(0)


def encoding(m: int, facets) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(vertices_of(f) for f in facets))


def relabel(K: SimplicialComplex, perm) -> SimplicialComplex:
    """Apply perm (a tuple with perm[i] the new 0-based label of vertex i+1)."""
    masks = []
    for f in K.facets:
        g = 0
        for i in range(K.m):
            if f >> i & 1:
                g |= 1 << perm[i]
        masks.append(g)
    return from_masks(K.m, masks)


@lru_cache(maxsize=None)
def _perm_tables(m: int):
    """For each permutation, the image of every mask and its sorted vertex tuple."""
    labels = [vertices_of(s) for s in range(1 << m)]
    tables = []
    for perm in permutations(range(m)):
        image = []
        for s in range(1 << m):
            g = 0
            for i in range(m):
                if s >> i & 1:
                    g |= 1 << perm[i]
            image.append(g)
        tables.append((perm, image))
    return labels, tables


def canonical_form(K: SimplicialComplex) -> SimplicialComplex:
    """Relabeling with the lexicographically smallest sorted facet encoding."""
    labels, tables = _perm_tables(K.m)
    best_key, best_perm = None, None
    for perm, image in tables:
        key = sorted(labels[image[f]] for f in K.facets)
        if best_key is None or key < best_key:
            best_key, best_perm = key, perm
    return relabel(K, best_perm)


def isomorphism_classes(m: int) -> list[SimplicialComplex]:
    seen = {}
    for K in all_complexes(m):
        C = canonical_form(K)
        seen.setdefault(encoding(m, C.facets), C)
    return [seen[k] for k in sorted(seen)]


def random_complex(m: int, rng: random.Random) -> SimplicialComplex:
    full = (1 << m) - 1
    nfacets = rng.randint(0, m + 2)
    masks = []
    density = rng.uniform(0.2, 0.8)
    for _ in range(nfacets):
        mask = sum(1 << v for v in range(m) if rng.random() < density)
        if mask == full:
            mask &= ~(1 << rng.randrange(m))
        masks.append(mask)
    return from_masks(m, masks)


def sample_complexes(m: int, count: int, seed: int, canonical: bool = True) -> list[SimplicialComplex]:
    """Up to ``count`` distinct random complexes, sorted by facet encoding.

    With ``canonical`` (and m <= 5) complexes are deduplicated up to relabeling;
    otherwise distinct labelled complexes are kept.
    """
    if m > SAMPLE_MAX_M:
        raise RangeError("E_RANGE", f"sampling supports m <= {SAMPLE_MAX_M}")
    rng = random.Random(seed)
    seen = {}
    attempts = 0
    while len(seen) < count and attempts < 50 * count:
        attempts += 1
        K = random_complex(m, rng)
        if canonical and m <= EXHAUSTIVE_MAX_M:
            K = canonical_form(K)
        seen.setdefault(encoding(m, K.facets), K)
    return [seen[k] for k in sorted(seen)]


@dataclass
class EnumerationRecord:
    complex: str
    m: int
    f: tuple
    alpha: tuple
    mu: tuple
    h_bier: tuple
    reduced: dict
    generator: bool
    real_null: bool
    oriented_null: bool
    seconds: float | None = None

    def to_json(self) -> dict:
        out = {
            "complex": self.complex,
            "m": self.m,
            "f": list(self.f),
            "alpha": list(self.alpha),
            "mu": list(self.mu),
            "h_bier": list(self.h_bier),
            "reduced": {f"X{k}": v for k, v in self.reduced.items()},
            "flags": {
                "generator": self.generator,
                "real_null": self.real_null,
                "oriented_null": self.oriented_null,
            },
        }
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out


def make_record(K: SimplicialComplex, timing: bool = False) -> EnumerationRecord:
    t0 = time.perf_counter()
    rec = EnumerationRecord(
        complex=to_text(K),
        m=K.m,
        f=f_vector(K),
        alpha=alpha(K),
        mu=mu_vector(K),
        h_bier=h_vector_bier(K),
        reduced=decompose(K).reduced,
        generator=is_polynomial_generator(K).is_generator,
        real_null=null_bordant_real(K),
        oriented_null=null_bordant_oriented_complex(K),
    )
    if timing:
        rec.seconds = time.perf_counter() - t0
    return rec


def _records(complexes, workers: int, timing: bool):
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            # map() yields in submission order, so output order is fixed
            return list(pool.map(make_record, complexes, [timing] * len(complexes), chunksize=16))
    return [make_record(K, timing) for K in complexes]


def run(m: int, find: str, sample: int | None = None, seed: int = 0, workers: int = 1,
        timing: bool = False) -> Iterator[dict]:
    """Yield JSON-ready hit records in canonical order."""
    if find not in FINDS:
        raise ValueError(f"find must be one of {FINDS}")
    if m < 2:
        raise RangeError("E_RANGE", "m must be at least 2")
    if sample is None:
        complexes = isomorphism_classes(m)
    else:
        complexes = sample_complexes(m, sample, seed)
    records = _records(complexes, workers, timing)

    if find == "generators":
        for rec in records:
            if rec.generator:
                yield {"kind": "generator", **rec.to_json()}
        return

    groups = defaultdict(list)
    half = (m - 1) // 2
    for K, rec in zip(complexes, records):
        groups[rec.h_bier[1 : half + 1]].append((K, rec))
    for key in sorted(groups):
        members = groups[key]
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                (K1, r1), (K2, r2) = members[a], members[b]
                if not bordant_unitary(K1, K2):
                    continue
                dual = (
                    encoding(m, canonical_form(K1.dual).facets) == encoding(m, K2.facets)
                    if m <= EXHAUSTIVE_MAX_M else K1.dual == K2
                )
                yield {"kind": "bordant-pair", "dual": dual, "a": r1.to_json(), "b": r2.to_json()}


def write_jsonl(records, fh) -> int:
    n = 0
    for rec in records:
        fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        n += 1
    return n
