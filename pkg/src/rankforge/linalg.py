"""Exact linear algebra over F_q: matrices, subspaces of F_q^k and their lattice."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from . import _elim
from .config import check_budget
from .errors import IncompleteFunction, InvalidParameter, SpecMismatch
from .field import FieldElement, FieldSpec


@dataclass(frozen=True)
class MatrixFq:
    """A k x m matrix with entries in the F_q subfield of ``spec``, row-major."""

    spec: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 1 or self.cols < 1:
            raise InvalidParameter("matrix dimensions must be positive")
        if len(entries) != self.rows * self.cols:
            raise InvalidParameter(f"expected {self.rows * self.cols} entries, got {len(entries)}")
        sub = self.spec.subfield
        if not all(sub.contains(e) for e in entries):
            raise InvalidParameter("matrix entries must lie in F_q")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int]]) -> MatrixFq:
        """Build from nested lists; over a prime subfield, integers are reduced mod p."""
        flat = [int(x) for row in rows for x in row]
        if spec.subfield.prime is not None:
            flat = [x % spec.p for x in flat]
        return cls(spec, len(rows), len(rows[0]), tuple(flat))

    @classmethod
    def zero(cls, spec: FieldSpec, rows: int, cols: int) -> MatrixFq:
        return cls(spec, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixFq:
        return cls(spec, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [list(self.entries[j::self.cols]) for j in range(self.cols)]

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.spec, self.entries[i * self.cols + j])

    def _check(self, other: MatrixFq) -> None:
        if other.spec != self.spec:
            raise SpecMismatch("matrices over different fields")
        if other.shape != self.shape:
            raise SpecMismatch(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        F = self.spec.subfield
        return MatrixFq(self.spec, self.rows, self.cols,
                        tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: MatrixFq) -> MatrixFq:
        self._check(other)
        F = self.spec.subfield
        return MatrixFq(self.spec, self.rows, self.cols,
                        tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> MatrixFq:
        F = self.spec.subfield
        return MatrixFq(self.spec, self.rows, self.cols, tuple(F.neg(a) for a in self.entries))

    def scale(self, c: int) -> MatrixFq:
        F = self.spec.subfield
        return MatrixFq(self.spec, self.rows, self.cols, tuple(F.mul(c, a) for a in self.entries))

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        if other.spec != self.spec or self.cols != other.rows:
            raise SpecMismatch("incompatible matrix product")
        prod = _elim.matmul(self.to_rows(), other.to_rows(), self.spec.subfield)
        return MatrixFq.from_rows(self.spec, prod)

    def transpose(self) -> MatrixFq:
        return MatrixFq(self.spec, self.cols, self.rows,
                        tuple(x for col in self.columns() for x in col))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, spec: FieldSpec, data: Mapping) -> MatrixFq:
        return cls(spec, int(data["rows"]), int(data["cols"]), tuple(int(e) for e in data["entries"]))


def rank(M: MatrixFq) -> int:
    return _elim.rank(M.to_rows(), M.cols, M.spec.subfield)


def flat_rank(entries: Sequence[int], k: int, m: int, F) -> int:
    """Rank of a row-major flat k x m matrix; used by enumeration hot loops."""
    return _elim.rank([entries[i * m:(i + 1) * m] for i in range(k)], m, F)


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^k held as its RREF basis (no zero rows).

    The basis is canonical, so equality and hashing are structural.
    """

    spec: FieldSpec
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...] = field(default=())

    @classmethod
    def span(cls, spec: FieldSpec, k: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        vecs = [list(v) for v in vectors]
        if any(len(v) != k for v in vecs):
            raise InvalidParameter(f"vectors must have length {k}")
        red, _ = _elim.rref(vecs, k, spec.subfield)
        return cls(spec, k, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, spec: FieldSpec, k: int) -> Subspace:
        return cls(spec, k, ())

    @classmethod
    def full(cls, spec: FieldSpec, k: int) -> Subspace:
        return cls(spec, k, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        F = self.spec.subfield
        return _elim.rank(list(self.basis) + [list(v)], self.ambient_dim, F) == self.dim

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        if other.spec != self.spec or other.ambient_dim != self.ambient_dim:
            raise SpecMismatch("subspaces of different ambient spaces")
        return Subspace.span(self.spec, self.ambient_dim, self.basis + other.basis)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All q^dim vectors, in lex order of their coordinates on the basis."""
        F = self.spec.subfield
        k = self.ambient_dim
        for coeffs in itertools.product(F.elements, repeat=self.dim):
            v = [0] * k
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            yield tuple(v)

    def to_json(self) -> dict:
        return {"rows": self.dim, "cols": self.ambient_dim,
                "entries": [x for row in self.basis for x in row]}


def colsp(M: MatrixFq) -> Subspace:
    return Subspace.span(M.spec, M.rows, M.columns())


def orthogonal_complement(U: Subspace) -> Subspace:
    """U⊥ under the standard dot product of F_q^k."""
    if U.dim == 0:
        return Subspace.full(U.spec, U.ambient_dim)
    null = _elim.nullspace(U.basis, U.ambient_dim, U.spec.subfield)
    return Subspace.span(U.spec, U.ambient_dim, null)


def q_binomial(a: int, b: int, q: int) -> int:
    """Number of b-dimensional subspaces of F_q^a (0 outside 0 <= b <= a)."""
    if b < 0 or b > a or a < 0:
        return 0
    b = min(b, a - b)
    num = den = 1
    for i in range(b):
        num *= q ** (a - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _rref_patterns(spec: FieldSpec, k: int, u: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    elems = spec.subfield.elements
    for pivots in itertools.combinations(range(k), u):
        pivot_set = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, k) if c not in pivot_set]
        for fill in itertools.product(elems, repeat=len(free)):
            rows = [[0] * k for _ in range(u)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, fill):
                rows[r][c] = x
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(spec: FieldSpec, k: int, u: int) -> Iterator[Subspace]:
    """Every u-dimensional subspace of F_q^k once, sorted by RREF basis."""
    if not 0 <= u <= k:
        raise InvalidParameter(f"need 0 <= u <= k, got u={u}, k={k}")
    check_budget(q_binomial(k, u, spec.q), "subspaces")
    bases = sorted(_rref_patterns(spec, k, u))
    for b in bases:
        yield Subspace(spec, k, b)


def all_subspaces(spec: FieldSpec, k: int) -> Iterator[Subspace]:
    check_budget(sum(q_binomial(k, u, spec.q) for u in range(k + 1)), "subspaces")
    for u in range(k + 1):
        yield from enumerate_subspaces(spec, k, u)


def subspaces_of(V: Subspace, u: int) -> Iterator[Subspace]:
    """The u-dimensional subspaces of V, via coordinates on V's basis."""
    F = V.spec.subfield
    k = V.ambient_dim
    for W in enumerate_subspaces(V.spec, V.dim, u):
        vecs = []
        for coeffs in W.basis:
            v = [0] * k
            for c, b in zip(coeffs, V.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            vecs.append(v)
        yield Subspace.span(V.spec, k, vecs)


# -- Möbius inversion on the subspace lattice ---------------------------------

@dataclass
class LatticeFunction:
    """An integer-valued function on subspaces of F_q^k."""

    ambient_dim: int
    values: dict[Subspace, int] = field(default_factory=dict)

    def __getitem__(self, U: Subspace) -> int:
        try:
            return self.values[U]
        except KeyError:
            raise IncompleteFunction(f"no value for subspace {U.basis}") from None

    def __setitem__(self, U: Subspace, value: int) -> None:
        if U.ambient_dim != self.ambient_dim:
            raise SpecMismatch("subspace outside the lattice")
        self.values[U] = value


def moebius_invert(g: LatticeFunction, V: Subspace) -> int:
    """Recover f(V) from g(V) = Σ_{U ⊆ V} f(U).

    Uses μ(U, V) = (-1)^{i-u} q^{C(i-u, 2)} with i = dim V, u = dim U.
    """
    i = V.dim
    q = V.spec.q
    total = 0
    for u in range(i + 1):
        s = sum(g[U] for U in subspaces_of(V, u))
        total += (-1) ** (i - u) * q ** ((i - u) * (i - u - 1) // 2) * s
    return total
