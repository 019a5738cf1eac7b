"""Seeded constructors shared by several test modules."""

from __future__ import annotations

import random

from rankforge.codes import LinearMatrixCode
from rankforge.field import galois_field


def random_code(rng: random.Random, q: int, k: int, m: int, dim: int) -> LinearMatrixCode:
    """A uniformly drawn spanning set, topped up until the span has the requested dimension."""
    spec = galois_field(q)
    n = k * m
    vecs: list[list[int]] = []
    C = LinearMatrixCode.zero(spec, k, m)
    while C.dim < dim:
        vecs.append([rng.randrange(q) for _ in range(n)])
        C = LinearMatrixCode.from_flats(spec, k, m, vecs)
    return C


def random_codes(seed: int, count: int, qs=(2, 3), max_m: int = 3) -> list[LinearMatrixCode]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = rng.choice(qs)
        m = rng.randint(1, max_m)
        k = rng.randint(1, m)
        dim = rng.randint(0, k * m)
        out.append(random_code(rng, q, k, m, dim))
    return out
