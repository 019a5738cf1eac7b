"""Rank-metric codes in matrix and vector representation.

Matrix codewords are handled internally as flat row-major tuples of canonical
integers; ``MatrixFq`` is the public face. Linear codes always store the RREF
of their basis, so two equal codes compare equal field by field.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from . import _elim
from .config import check_budget
from .errors import InvalidParameter, SpecMismatch, UndefinedDistance
from .field import ExtensionBasis, FieldElement, FieldSpec, as_values, subfield_isomorphism
from .linalg import MatrixFq, Subspace, flat_rank, rank

Flat = tuple[int, ...]


@lru_cache(maxsize=1 << 18)
def _rank_cached(word: Flat, k: int, m: int, F) -> int:
    return flat_rank(word, k, m, F)


def _span_flat(basis: Sequence[Flat], n: int, F) -> list[Flat]:
    """All F_q-combinations, lex over coefficient vectors (first coefficient slowest)."""
    words: list[Flat] = [(0,) * n]
    elems = F.elements
    p = F.prime
    for b in reversed(basis):
        new: list[Flat] = []
        for c in elems:
            if c == 0:
                new.extend(words)
                continue
            if p is not None:
                cb = [(c * x) % p for x in b]
                new.extend(tuple((x + y) % p for x, y in zip(cb, w)) for w in words)
            else:
                cb = [F.mul(c, x) for x in b]
                new.extend(tuple(F.add(x, y) for x, y in zip(cb, w)) for w in words)
        words = new
    return words


def _canonical(vectors: Iterable[Sequence[int]], n: int, F) -> tuple[Flat, ...]:
    red, _ = _elim.rref([list(v) for v in vectors], n, F)
    return tuple(tuple(r) for r in red)


# -- distributions -------------------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    """W_0..W_k: number of codewords of each rank."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def k(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.counts]


@dataclass(frozen=True)
class DistanceDistribution:
    """D_0..D_k as exact rationals."""

    values: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]


# -- code representations -----------------------------------------------------

@dataclass(frozen=True)
class LinearMatrixCode:
    """An F_q-linear subspace of F_q^{k x m}, stored by its canonical basis."""

    spec: FieldSpec
    k: int
    m: int
    basis: tuple[MatrixFq, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 1:
            raise InvalidParameter("k and m must be positive")
        flats = []
        for M in self.basis:
            if M.spec != self.spec or M.shape != (self.k, self.m):
                raise SpecMismatch(f"basis matrix does not live in F_q^{self.k}x{self.m}")
            flats.append(M.entries)
        canon = _canonical(flats, self.k * self.m, self.spec.subfield)
        if len(canon) != len(flats):
            raise InvalidParameter("basis matrices are linearly dependent")
        object.__setattr__(self, "basis", tuple(MatrixFq(self.spec, self.k, self.m, f) for f in canon))

    @classmethod
    def from_flats(cls, spec: FieldSpec, k: int, m: int, vectors: Iterable[Sequence[int]]) -> LinearMatrixCode:
        """Span of arbitrary (possibly dependent) flat vectors."""
        canon = _canonical(vectors, k * m, spec.subfield)
        return cls(spec, k, m, tuple(MatrixFq(spec, k, m, f) for f in canon))

    @classmethod
    def span(cls, spec: FieldSpec, k: int, m: int, matrices: Iterable[MatrixFq]) -> LinearMatrixCode:
        return cls.from_flats(spec, k, m, [M.entries for M in matrices])

    @classmethod
    def zero(cls, spec: FieldSpec, k: int, m: int) -> LinearMatrixCode:
        return cls(spec, k, m, ())

    @classmethod
    def full(cls, spec: FieldSpec, k: int, m: int) -> LinearMatrixCode:
        n = k * m
        return cls.from_flats(spec, k, m, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.spec.q ** self.dim

    @property
    def flats(self) -> tuple[Flat, ...]:
        return tuple(M.entries for M in self.basis)

    def flat_words(self) -> list[Flat]:
        check_budget(self.size, "codewords")
        return _span_flat(self.flats, self.k * self.m, self.spec.subfield)

    def words(self) -> Iterator[MatrixFq]:
        for w in self.flat_words():
            yield MatrixFq(self.spec, self.k, self.m, w)

    def contains(self, M: MatrixFq) -> bool:
        F = self.spec.subfield
        n = self.k * self.m
        return _elim.rank(list(self.flats) + [list(M.entries)], n, F) == self.dim

    def __contains__(self, M: MatrixFq) -> bool:
        return self.contains(M)


@dataclass(frozen=True)
class GeneralCode:
    """An arbitrary non-empty set of k x m matrices, sorted and deduplicated."""

    spec: FieldSpec
    k: int
    m: int
    words: tuple[MatrixFq, ...]

    def __post_init__(self) -> None:
        uniq = {}
        for M in self.words:
            if M.spec != self.spec or M.shape != (self.k, self.m):
                raise SpecMismatch("word does not live in the code's ambient space")
            uniq[M.entries] = M
        if not uniq:
            raise InvalidParameter("a code must be non-empty")
        object.__setattr__(self, "words", tuple(uniq[e] for e in sorted(uniq)))

    @classmethod
    def from_code(cls, C: LinearMatrixCode) -> GeneralCode:
        return cls(C.spec, C.k, C.m, tuple(C.words()))

    @property
    def size(self) -> int:
        return len(self.words)

    def flat_words(self) -> list[Flat]:
        return [M.entries for M in self.words]

    def contains(self, M: MatrixFq) -> bool:
        return any(M.entries == W.entries for W in self.words)

    def __contains__(self, M: MatrixFq) -> bool:
        return self.contains(M)


@dataclass(frozen=True)
class VectorCode:
    """An F_{q^m}-linear code in F_{q^m}^k, generator kept in RREF."""

    spec: FieldSpec
    k: int
    generator: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = [as_values(self.spec, row) for row in self.generator]
        if any(len(r) != self.k for r in rows):
            raise InvalidParameter(f"generator rows must have length {self.k}")
        canon = _canonical(rows, self.k, self.spec)
        if len(canon) != len(rows):
            raise InvalidParameter("generator rows are dependent over F_{q^m}")
        object.__setattr__(self, "generator", canon)

    @classmethod
    def span(cls, spec: FieldSpec, k: int, rows: Iterable[Sequence[int]]) -> VectorCode:
        return cls(spec, k, _canonical([as_values(spec, r) for r in rows], k, spec))

    @property
    def dim(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        return self.spec.order ** self.dim

    def vectors(self) -> list[tuple[int, ...]]:
        check_budget(self.size, "codewords")
        S = self.spec
        words = [(0,) * self.k]
        for g in reversed(self.generator):
            new = []
            for c in S.elements():
                cg = [S.mul(c, x) for x in g]
                new.extend(tuple(S.add(x, y) for x, y in zip(cg, w)) for w in words)
            words = new
        return words

    def contains(self, v: Sequence[int]) -> bool:
        v = as_values(self.spec, v)
        return _elim.rank([list(g) for g in self.generator] + [v], self.k, self.spec) == self.dim


MatrixCode = Union[LinearMatrixCode, GeneralCode]
AnyCode = Union[LinearMatrixCode, GeneralCode, VectorCode]


# -- metric --------------------------------------------------------------------

def rank_distance(M: MatrixFq, N: MatrixFq) -> int:
    return rank(M - N)


def trace_product(M: MatrixFq, N: MatrixFq) -> FieldElement:
    """Tr(M N^t) = Σ_ij M_ij N_ij, an element of F_q."""
    M._check(N)
    F = M.spec.subfield
    acc = 0
    for a, b in zip(M.entries, N.entries):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return FieldElement(M.spec, acc)


def vector_rank(v: Sequence[int | FieldElement], spec: FieldSpec) -> int:
    """dim over F_q of the span of the entries of v."""
    vals = as_values(spec, v)
    basis = _default_basis(spec)
    rows = [basis.coordinates(x) for x in vals]
    return _elim.rank(rows, spec.m, spec.subfield)


@lru_cache(maxsize=None)
def _default_basis(spec: FieldSpec) -> ExtensionBasis:
    return ExtensionBasis.polynomial(spec)


def _word_ranks(code: AnyCode) -> Iterator[int]:
    if isinstance(code, VectorCode):
        for v in code.vectors():
            yield vector_rank(v, code.spec)
        return
    F = code.spec.subfield
    k, m = code.k, code.m
    for w in code.flat_words():
        yield _rank_cached(w, k, m, F)


# -- distributions and distance -------------------------------------------------

def weight_distribution(code: AnyCode) -> WeightDistribution:
    """Exact rank counts W_0..W_k by enumerating every codeword.

    For matrix codes the vector has k+1 entries; ranks never exceed min(k, m).
    """
    counts = Counter(_word_ranks(code))
    k = code.k
    return WeightDistribution(tuple(counts.get(i, 0) for i in range(k + 1)))


def min_distance(code: AnyCode) -> int:
    if isinstance(code, (LinearMatrixCode, VectorCode)):
        if code.dim == 0:
            raise UndefinedDistance("minimum distance needs at least two codewords")
        return min(r for r in _word_ranks(code) if r > 0)
    words = code.flat_words()
    if len(words) < 2:
        raise UndefinedDistance("minimum distance needs at least two codewords")
    check_budget(len(words) * (len(words) - 1) // 2, "codeword pairs")
    F = code.spec.subfield
    best = None
    for a, b in itertools.combinations(words, 2):
        diff = tuple(F.sub(x, y) for x, y in zip(a, b))
        r = _rank_cached(diff, code.k, code.m, F)
        if best is None or r < best:
            best = r
    return best


def distance_distribution(code: MatrixCode) -> DistanceDistribution:
    """D_i = |{(M, N) : d(M, N) = i}| / |C| over all ordered pairs."""
    words = code.flat_words()
    n = len(words)
    check_budget(n * n, "codeword pairs")
    F = code.spec.subfield
    k, m = code.k, code.m
    counts = Counter()
    for a in words:
        for b in words:
            diff = tuple(F.sub(x, y) for x, y in zip(a, b))
            counts[_rank_cached(diff, k, m, F)] += 1
    return DistanceDistribution(tuple(Fraction(counts.get(i, 0), n) for i in range(k + 1)))


# -- duality ---------------------------------------------------------------------

def dual_code(C: LinearMatrixCode) -> LinearMatrixCode:
    """Trace-dual {N : Tr(M N^t) = 0 for all M in C}."""
    n = C.k * C.m
    if C.dim == 0:
        return LinearMatrixCode.full(C.spec, C.k, C.m)
    null = _elim.nullspace(C.flats, n, C.spec.subfield)
    return LinearMatrixCode.from_flats(C.spec, C.k, C.m, null)


def vector_dual(C: VectorCode) -> VectorCode:
    """{w : Σ v_i w_i = 0 for all v in C} over F_{q^m}."""
    if C.dim == 0:
        return VectorCode(C.spec, C.k, tuple(tuple(1 if i == j else 0 for j in range(C.k))
                                             for i in range(C.k)))
    null = _elim.nullspace(C.generator, C.k, C.spec)
    return VectorCode.span(C.spec, C.k, null)


# -- representation change ------------------------------------------------------

def gamma_expand(obj: VectorCode | Sequence[int | FieldElement], basis: ExtensionBasis):
    """Γ-expansion: the i-th row of Γ(v) holds the Γ-coordinates of v_i.

    Given a vector returns a ``MatrixFq``; given a ``VectorCode`` returns the
    F_q-linear matrix code Γ(C) of dimension m * dim(C).
    """
    spec = basis.spec
    if isinstance(obj, VectorCode):
        if obj.spec != spec:
            raise SpecMismatch("code and basis live in different fields")
        gens = []
        for g in obj.generator:
            for lam in basis.elements:
                scaled = [spec.mul(lam, x) for x in g]
                gens.append([c for x in scaled for c in basis.coordinates(x)])
        return LinearMatrixCode.from_flats(spec, obj.k, spec.m, gens)
    vals = as_values(spec, obj)
    entries = [c for x in vals for c in basis.coordinates(x)]
    return MatrixFq(spec, len(vals), spec.m, tuple(entries))


def vector_from_matrix(M: MatrixFq, basis: ExtensionBasis) -> tuple[int, ...]:
    """Inverse of Γ-expansion for a single matrix."""
    return tuple(basis.combine(row) for row in M.to_rows())


# -- sums, intersections, restriction ---------------------------------------------

def _same_ambient(A: LinearMatrixCode, B: LinearMatrixCode) -> None:
    if A.spec != B.spec or (A.k, A.m) != (B.k, B.m):
        raise SpecMismatch("codes live in different ambient spaces")


def code_sum(A: LinearMatrixCode, B: LinearMatrixCode) -> LinearMatrixCode:
    _same_ambient(A, B)
    return LinearMatrixCode.from_flats(A.spec, A.k, A.m, A.flats + B.flats)


def code_intersection(A: LinearMatrixCode, B: LinearMatrixCode) -> LinearMatrixCode:
    """A ∩ B = (A⊥ + B⊥)⊥."""
    _same_ambient(A, B)
    return dual_code(code_sum(dual_code(A), dual_code(B)))


def columnspace_code(spec: FieldSpec, k: int, m: int, U: Subspace) -> LinearMatrixCode:
    """F_q^{k x m}(U): matrices whose columns all lie in U; basis u ⊗ e_j."""
    if U.ambient_dim != k:
        raise SpecMismatch("subspace must live in F_q^k")
    gens = []
    for u in U.basis:
        for j in range(m):
            flat = [0] * (k * m)
            for i, x in enumerate(u):
                flat[i * m + j] = x
            gens.append(flat)
    return LinearMatrixCode.from_flats(spec, k, m, gens)


def restrict_columnspace(C: LinearMatrixCode, U: Subspace) -> LinearMatrixCode:
    """C(U) = {M in C : colsp(M) ⊆ U}."""
    return code_intersection(C, columnspace_code(C.spec, C.k, C.m, U))


def transform(C: LinearMatrixCode, A: MatrixFq, B: MatrixFq) -> LinearMatrixCode:
    """A·C·B for invertible A (k x k) and B (m x m); a rank-preserving isometry."""
    return LinearMatrixCode.span(C.spec, C.k, C.m, [A @ M @ B for M in C.basis])


def rebase(C: LinearMatrixCode, spec: FieldSpec) -> LinearMatrixCode:
    """The same code with entries carried into another field holding an isomorphic F_q."""
    table = subfield_isomorphism(C.spec, spec)
    return LinearMatrixCode.from_flats(spec, C.k, C.m, [[table[x] for x in f] for f in C.flats])


def coset(C: LinearMatrixCode, M: MatrixFq) -> GeneralCode:
    return GeneralCode(C.spec, C.k, C.m, tuple(M + W for W in C.words()))
