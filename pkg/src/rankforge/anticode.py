"""Rank-metric anticodes and their interplay with MRD codes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .codes import (LinearMatrixCode, MatrixCode, _rank_cached,
                    code_intersection, code_sum, transform, weight_distribution)
from .config import check_budget
from .errors import InvalidParameter, NotApplicable, SpecMismatch
from .field import FieldSpec, galois_field
from .linalg import MatrixFq, enumerate_subspaces, q_binomial, rank
from .mrd import gabidulin_matrix_code, is_mrd


@dataclass(frozen=True)
class AnticodeSpec:
    k: int
    m: int
    q: int
    delta: int

    def __post_init__(self) -> None:
        if not 0 <= self.delta <= self.k:
            raise InvalidParameter(f"need 0 <= delta <= k, got {self.delta}")


def standard_anticode(k: int, m: int, delta: int, q: int | FieldSpec) -> LinearMatrixCode:
    """Matrices whose last k - δ rows vanish; dimension mδ."""
    AnticodeSpec(k, m, q if isinstance(q, int) else q.q, delta)
    spec = q if isinstance(q, FieldSpec) else galois_field(q)
    n = k * m
    gens = []
    for pos in range(delta * m):
        flat = [0] * n
        flat[pos] = 1
        gens.append(flat)
    return LinearMatrixCode.from_flats(spec, k, m, gens)


def anticode_bound(m: int, delta: int, q: int) -> int:
    if delta < 0:
        raise InvalidParameter("delta must be >= 0")
    return q ** (m * delta)


def _max_rank(code: LinearMatrixCode) -> int:
    W = weight_distribution(code)
    return max(i for i, w in enumerate(W) if w)


def is_anticode(A: MatrixCode, delta: int) -> bool:
    """All pairwise distances at most δ (max codeword rank for linear A)."""
    if isinstance(A, LinearMatrixCode):
        return _max_rank(A) <= delta
    words = A.flat_words()
    check_budget(len(words) * (len(words) - 1) // 2, "codeword pairs")
    F = A.spec.subfield
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            diff = tuple(F.sub(x, y) for x, y in zip(a, b))
            if _rank_cached(diff, A.k, A.m, F) > delta:
                return False
    return True


@dataclass(frozen=True)
class AnticodeVerdict:
    anticode: bool
    optimal: bool
    size: int
    bound: int

    def to_json(self) -> dict:
        return {"anticode": self.anticode, "optimal": self.optimal,
                "size": str(self.size), "bound": str(self.bound)}


def check_anticode(A: MatrixCode, delta: int) -> AnticodeVerdict:
    ok = is_anticode(A, delta)
    bound = anticode_bound(A.m, delta, A.spec.q)
    return AnticodeVerdict(ok, ok and A.size == bound, A.size, bound)


def check_cover(A: MatrixCode, C: MatrixCode) -> bool:
    """True iff every k x m matrix is M + N with M in A and N in C."""
    if (A.spec, A.k, A.m) != (C.spec, C.k, C.m):
        raise SpecMismatch("codes live in different ambient spaces")
    total = A.spec.q ** (A.k * A.m)
    if isinstance(A, LinearMatrixCode) and isinstance(C, LinearMatrixCode):
        return code_sum(A, C).dim == A.k * A.m
    a_words, c_words = A.flat_words(), C.flat_words()
    if len(a_words) * len(c_words) < total:
        return False
    check_budget(len(a_words) * len(c_words), "sums")
    F = A.spec.subfield
    sums = {tuple(F.add(x, y) for x, y in zip(a, c)) for a in a_words for c in c_words}
    return len(sums) == total


def criterion_optimal_anticode(A: LinearMatrixCode, delta: int,
                               mrd_corpus: Iterable[LinearMatrixCode]) -> bool:
    """A ∩ C = {0} for every corpus member (linear MRD codes with d = δ + 1).

    For δ = k the condition is vacuous and True is returned.
    """
    if A.dim != A.m * delta:
        raise NotApplicable(f"criterion needs dim(A) = m*delta = {A.m * delta}, got {A.dim}")
    if delta == A.k:
        return True
    return all(code_intersection(A, C).dim == 0 for C in mrd_corpus)


# -- MRD corpora -------------------------------------------------------------------------

def random_invertible(spec: FieldSpec, n: int, rng: random.Random) -> MatrixFq:
    elems = spec.subfield.elements
    while True:
        M = MatrixFq(spec, n, n, tuple(rng.choice(elems) for _ in range(n * n)))
        if rank(M) == n:
            return M


def exhaustive_mrd_corpus(spec: FieldSpec, k: int, m: int, d: int) -> list[LinearMatrixCode]:
    """Every linear MRD code in F_q^{k x m} with minimum distance d.

    Walks all subspaces of the right dimension; the ambient must be small.
    """
    dim = m * (k - d + 1)
    n = k * m
    out = []
    for U in enumerate_subspaces(spec, n, dim):
        C = LinearMatrixCode.from_flats(spec, k, m, U.basis)
        v = is_mrd(C)
        if v.mrd and v.d == d:
            out.append(C)
    return out


def random_mrd_corpus(q: int, k: int, m: int, d: int, count: int,
                      seed: int = 0) -> list[LinearMatrixCode]:
    """A·G·B transforms of a Gabidulin expansion with random invertible A, B."""
    base = gabidulin_matrix_code(q, m, k, d)
    spec = base.spec
    rng = random.Random(seed)
    return [transform(base, random_invertible(spec, k, rng), random_invertible(spec, m, rng))
            for _ in range(count)]


def mrd_corpus(q: int, k: int, m: int, d: int, count: int = 20, seed: int = 0,
               exhaustive_limit: int = 1 << 16,
               subspace_limit: int = 1 << 14) -> tuple[str, list[LinearMatrixCode]]:
    """Exhaustive corpus when the search is small enough, randomized otherwise.

    Exhaustive search needs at most ``exhaustive_limit`` matrices in the
    ambient space and at most ``subspace_limit`` candidate subspaces.
    Returns (regime, corpus) with regime "exhaustive" or "randomized".
    """
    candidates = q_binomial(k * m, m * (k - d + 1), q)
    if q ** (k * m) <= exhaustive_limit and candidates <= subspace_limit:
        return "exhaustive", exhaustive_mrd_corpus(galois_field(q), k, m, d)
    return "randomized", random_mrd_corpus(q, k, m, d, count, seed)
