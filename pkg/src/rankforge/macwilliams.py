"""Closed-form MacWilliams machinery for the rank metric.

Everything here is a formula evaluation in exact integers or rationals; no
codeword is ever enumerated. Divisions happen last and are checked for
integrality, so an impossible weight distribution raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .codes import WeightDistribution
from .errors import InconsistentInput, InvalidParameter
from .field import prime_power
from .linalg import q_binomial


def _c2(n: int) -> int:
    return n * (n - 1) // 2


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class CodeParams:
    """q, k <= m and the code cardinality |C|."""

    q: int
    k: int
    m: int
    size: int

    def __post_init__(self) -> None:
        prime_power(self.q)
        if not 1 <= self.k <= self.m:
            raise InvalidParameter(f"need 1 <= k <= m, got k={self.k}, m={self.m}")
        if self.size < 1:
            raise InvalidParameter("code size must be >= 1")

    @classmethod
    def linear(cls, q: int, k: int, m: int, dim: int) -> CodeParams:
        return cls(q, k, m, q ** dim)


def _as_weights(W: WeightDistribution | Sequence[int], k: int) -> tuple[int, ...]:
    counts = tuple(W.counts if isinstance(W, WeightDistribution) else (int(x) for x in W))
    if len(counts) != k + 1:
        raise InvalidParameter(f"expected {k + 1} weights, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise InconsistentInput("weights must be non-negative")
    return counts


def _check_total(counts: Sequence[int], size: int) -> None:
    if sum(counts) != size:
        raise InconsistentInput(f"weights sum to {sum(counts)}, expected |C| = {size}")


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise InconsistentInput(f"{what}: {num}/{den} is not an integer")
    return num // den


def macwilliams_transform(W: WeightDistribution | Sequence[int], params: CodeParams) -> WeightDistribution:
    """W(C⊥) from W(C):

        W_i(C⊥) = |C|^{-1} Σ_j W_j Σ_u (-1)^{i-u} q^{mu + C(i-u,2)} [k-u, k-i] [k-j, u]
    """
    q, k, m = params.q, params.k, params.m
    counts = _as_weights(W, k)
    _check_total(counts, params.size)
    out = []
    for i in range(k + 1):
        acc = 0
        for j, wj in enumerate(counts):
            if not wj:
                continue
            inner = 0
            for u in range(k + 1):
                inner += (_sign(i - u) * q ** (m * u + _c2(i - u))
                          * q_binomial(k - u, k - i, q) * q_binomial(k - j, u, q))
            acc += wj * inner
        value = _exact_div(acc, params.size, f"W_{i}(C⊥)")
        if value < 0:
            raise InconsistentInput(f"W_{i}(C⊥) = {value} is negative")
        out.append(value)
    dual_size = _exact_div(q ** (k * m), params.size, "|C⊥|")
    _check_total(out, dual_size)
    return WeightDistribution(tuple(out))


def binomial_moment(W: WeightDistribution | Sequence[int], nu: int, params: CodeParams) -> int:
    """Σ_{i=0}^{k-ν} W_i [k-i, ν]."""
    k, q = params.k, params.q
    if not 0 <= nu <= k:
        raise InvalidParameter(f"need 0 <= nu <= k, got {nu}")
    counts = _as_weights(W, k)
    return sum(counts[i] * q_binomial(k - i, nu, q) for i in range(k - nu + 1))


def dual_moment(W_dual: WeightDistribution | Sequence[int], nu: int, params: CodeParams) -> Fraction:
    """Right-hand side |C| q^{-mν} Σ_{j=0}^{ν} W_j(C⊥) [k-j, ν-j]."""
    k, q, m = params.k, params.q, params.m
    counts = _as_weights(W_dual, k)
    s = sum(counts[j] * q_binomial(k - j, nu - j, q) for j in range(nu + 1))
    return Fraction(params.size * s, q ** (m * nu))


def dual_weights_from_moments(W: WeightDistribution | Sequence[int], params: CodeParams) -> WeightDistribution:
    """Solve the ν-identities for W(C⊥).

    Identity ν involves W_0(C⊥)..W_ν(C⊥) with coefficient [k-ν, 0] = 1 on the
    last one, so forward substitution in ν is exact.
    """
    k, q, m = params.k, params.q, params.m
    counts = _as_weights(W, k)
    _check_total(counts, params.size)
    dual: list[Fraction] = []
    for nu in range(k + 1):
        rhs = Fraction(binomial_moment(counts, nu, params) * q ** (m * nu), params.size)
        known = sum(dual[j] * q_binomial(k - j, nu - j, q) for j in range(nu))
        dual.append(rhs - known)
    out = []
    for j, v in enumerate(dual):
        if v.denominator != 1 or v < 0:
            raise InconsistentInput(f"W_{j}(C⊥) = {v} is not a non-negative integer")
        out.append(int(v))
    return WeightDistribution(tuple(out))


# -- recursion from parameters and small weights ---------------------------------

@dataclass(frozen=True)
class RecursionInput:
    """Data that fixes a linear code's weight distribution.

    ``known`` maps index i to W_i for d <= i <= k - d_perp.
    """

    params: CodeParams
    dim: int
    d: int
    d_perp: int
    epsilon: int
    known: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.params
        if not 1 <= self.dim <= p.k * p.m - 1:
            raise InvalidParameter(f"need 1 <= dim <= km - 1, got {self.dim}")
        if not (1 <= self.d <= p.k and 1 <= self.d_perp <= p.k):
            raise InvalidParameter("distances must lie in 1..k")
        if self.epsilon not in (0, 1):
            raise InvalidParameter("epsilon must be 0 or 1")
        known = {int(i): int(v) for i, v in dict(self.known).items()}
        need = set(range(self.d, p.k - self.d_perp + 1))
        if set(known) != need:
            raise InvalidParameter(f"known weights must cover exactly indices {sorted(need)}")
        object.__setattr__(self, "known", known)


def weight_recursion(inp: RecursionInput) -> WeightDistribution:
    """Full W_0..W_k from (dim, d, d⊥, ε) and the middle weights.

    For 1 <= i <= d⊥:

        W_{k-d⊥+i} = (-1)^i q^{C(i,2)} Σ_{u=d⊥}^{k-d} [u, d⊥-i][u-d⊥+i-1, i-1] W_{k-u}
                   + [k, d⊥-i] Σ_{u=0}^{i-1-ε} (-1)^u q^{C(u,2)} [k-d⊥+i, u] (q^{dim-m(d⊥-i+u)} - 1)

    Negative exponents in the last factor produce rationals; the result must
    come out integral and sum to q^dim or InconsistentInput is raised.
    """
    p = inp.params
    q, k, m = p.q, p.k, p.m
    dp, d = inp.d_perp, inp.d
    W: list[int] = [0] * (k + 1)
    W[0] = 1
    for i, v in inp.known.items():
        W[i] = v
    for i in range(1, dp + 1):
        first = sum(q_binomial(u, dp - i, q) * q_binomial(u - dp + i - 1, i - 1, q) * W[k - u]
                    for u in range(dp, k - d + 1))
        second = Fraction(0)
        for u in range(0, i - inp.epsilon):
            e = inp.dim - m * (dp - i + u)
            second += _sign(u) * q ** _c2(u) * q_binomial(k - dp + i, u, q) * (Fraction(q) ** e - 1)
        value = _sign(i) * q ** _c2(i) * first + q_binomial(k, dp - i, q) * second
        if value.denominator != 1:
            raise InconsistentInput(f"recursion gives non-integer W_{k - dp + i} = {value}")
        idx = k - dp + i
        value = int(value)
        if idx < d:
            if value != 0:
                raise InconsistentInput(f"recursion gives W_{idx} = {value} below d = {d}")
            continue
        W[idx] = value
    if any(w < 0 for w in W):
        raise InconsistentInput(f"negative weight in {W}")
    if sum(W) != q ** inp.dim:
        raise InconsistentInput(f"weights {W} sum to {sum(W)}, expected q^dim = {q ** inp.dim}")
    return WeightDistribution(tuple(W))


# -- matrices with prescribed zero diagonal entries --------------------------------

@dataclass(frozen=True)
class ZeroPattern:
    """A set of 1-based diagonal positions (i, i) of a k x m matrix."""

    k: int
    m: int
    positions: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        pos = frozenset((int(i), int(j)) for i, j in self.positions)
        object.__setattr__(self, "positions", pos)
        for i, j in pos:
            if i != j:
                raise InvalidParameter(f"position ({i},{j}) is not on the diagonal")
            if not 1 <= i <= min(self.k, self.m):
                raise InvalidParameter(f"position ({i},{j}) outside the matrix")

    @classmethod
    def of(cls, k: int, m: int, positions: Iterable[tuple[int, int]]) -> ZeroPattern:
        return cls(k, m, frozenset(positions))


def count_zero_diagonal(pattern: ZeroPattern, q: int, r: int) -> int:
    """Number of k x m matrices over F_q of rank r vanishing on ``pattern``."""
    k, m = pattern.k, pattern.m
    if not 0 <= r <= k:
        raise InvalidParameter(f"need 0 <= r <= k, got {r}")
    s = len(pattern.positions)
    total = 0
    for t in range(k + 1):
        weight = comb(s, t) * (q - 1) ** t
        if not weight:
            continue
        inner = sum(_sign(r - u) * q ** (m * u + _c2(r - u))
                    * q_binomial(k - u, k - r, q) * q_binomial(k - t, u, q)
                    for u in range(k + 1))
        total += weight * inner
    return _exact_div(total, q ** s, "zero-pattern count")
