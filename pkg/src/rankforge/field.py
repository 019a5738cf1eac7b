"""Finite fields F_p ⊆ F_q ⊆ F_{q^m} realised as one quotient ring F_p[x]/(f).

Elements are canonical integers: the residue polynomial's coefficients read as
base-p digits, least significant first. The intermediate field F_q is the fixed
field of the q-Frobenius inside F_{p^n}, so no tower of quotient rings is built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import _elim
from .errors import FieldZeroDivision, InvalidParameter, NotABasis, SpecMismatch

MAX_FIELD_ORDER = 1 << 24
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^e, raising InvalidParameter when q is not a prime power."""
    if q < 2:
        raise InvalidParameter(f"q must be a prime power, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise InvalidParameter(f"q must be a prime power, got {q}")
    return p, e


# -- polynomials over F_p, little-endian coefficient lists -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        f = (a[-1] * inv_lead) % p
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - f * c) % p
        _trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..n//2."""
    poly = list(poly)
    n = len(poly) - 1
    if n < 1 or poly[-1] % p == 0:
        return False
    for deg in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lex-least monic irreducible polynomial of degree ``n`` over F_p.

    Order is by the little-endian coefficient tuple, so the constant term is
    the most significant key.
    """
    if not is_prime(p):
        raise InvalidParameter(f"p must be prime, got {p}")
    if n < 1:
        raise InvalidParameter(f"degree must be >= 1, got {n}")
    for low in itertools.product(range(p), repeat=n):
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("an irreducible polynomial exists for every degree")


# -- field specification -------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """The tower F_p ⊆ F_q ⊆ F_{p^n} with q = p^sub_degree and m = n / sub_degree."""

    p: int
    degree: int
    modulus: tuple[int, ...]
    sub_degree: int = 0

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidParameter(f"p must be prime, got {self.p}")
        if self.degree < 1:
            raise InvalidParameter(f"degree must be >= 1, got {self.degree}")
        if self.p ** self.degree > MAX_FIELD_ORDER:
            raise InvalidParameter(f"field order {self.p}^{self.degree} exceeds {MAX_FIELD_ORDER}")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if self.sub_degree == 0:
            object.__setattr__(self, "sub_degree", self.degree)
        if len(mod) != self.degree + 1 or mod[-1] != 1:
            raise InvalidParameter("modulus must be monic of the stated degree")
        if any(not 0 <= c < self.p for c in mod):
            raise InvalidParameter("modulus coefficients must lie in [0, p)")
        if not is_irreducible(mod, self.p):
            raise InvalidParameter(f"modulus {list(mod)} is reducible over F_{self.p}")
        if self.sub_degree < 1 or self.degree % self.sub_degree:
            raise InvalidParameter("sub_degree must divide degree")

    @classmethod
    def build(cls, p: int, degree: int, sub_degree: int | None = None,
              modulus: Sequence[int] | None = None) -> FieldSpec:
        if is_prime(p) and degree >= 1 and p ** degree > MAX_FIELD_ORDER:
            raise InvalidParameter(f"field order {p}^{degree} exceeds {MAX_FIELD_ORDER}")
        if modulus is None:
            modulus = find_irreducible(p, degree)
        return cls(p, degree, tuple(modulus), sub_degree or degree)

    # sizes
    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def q(self) -> int:
        return self.p ** self.sub_degree

    @property
    def m(self) -> int:
        return self.degree // self.sub_degree

    def to_json(self) -> dict:
        return {"p": self.p, "degree": self.degree, "modulus": list(self.modulus),
                "sub_degree": self.sub_degree}

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        return cls(int(data["p"]), int(data["degree"]), tuple(data["modulus"]),
                   int(data.get("sub_degree", data["degree"])))

    # element helpers
    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Encode a residue polynomial (little-endian) as its canonical integer."""
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    @property
    def generator_x(self) -> int:
        """The class of x modulo the modulus."""
        if self.degree == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    # arithmetic on canonical integers
    @property
    def prime(self) -> int | None:
        return self.p if self.degree == 1 else None

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.degree == 1:
            return (a + b) % self.p
        return self.from_coeffs([x + y for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs([-x for x in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.degree == 1:
            return (a - b) % self.p
        return self.from_coeffs([x - y for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def _slow_mul(self, a: int, b: int) -> int:
        x, y = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * self.degree)
        for i, c in enumerate(x):
            if c:
                for j, d in enumerate(y):
                    if d:
                        prod[i + j] = (prod[i + j] + c * d) % self.p
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]] | None:
        n = self.order - 1
        if self.order > _TABLE_LIMIT:
            return None
        if n == 1:
            return [1], [0, 0]
        prime_factors = [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
        for g in range(2, self.order):
            if all(self._slow_pow(g, n // f) != 1 for f in prime_factors):
                exp = [1] * n
                for i in range(1, n):
                    exp[i] = self._slow_mul(exp[i - 1], g)
                log = [0] * self.order
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise AssertionError("multiplicative group is cyclic")

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.degree == 1:
            return (a * b) % self.p
        t = self._tables
        if t is None:
            return self._slow_mul(a, b)
        exp, log = t
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldZeroDivision("inverse of zero")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        t = self._tables
        if t is None:
            return self._slow_pow(a, self.order - 2)
        exp, log = t
        return exp[(-log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.degree == 1:
            return pow(a, e, self.p)
        t = self._tables
        if t is None:
            return self._slow_pow(a, e % (self.order - 1))
        exp, log = t
        return exp[(log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int) -> int:
        """x -> x^q."""
        return self.pow(a, self.q)

    def trace(self, a: int) -> int:
        """Relative trace a + a^q + ... + a^{q^{m-1}} down to F_q."""
        total, x = 0, a
        for _ in range(self.m):
            total = self.add(total, x)
            x = self.frobenius(x)
        return total

    def in_subfield(self, a: int) -> bool:
        return self.frobenius(a) == a

    @cached_property
    def subfield(self) -> Subfield:
        return Subfield(self)

    def elements(self) -> range:
        return range(self.order)


def galois_field(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """F_q with no proper tower (q is both the base and the whole field)."""
    p, e = prime_power(q)
    return FieldSpec.build(p, e, e, modulus)


def extension_field(q: int, m: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """F_{q^m} with F_q designated as the subfield."""
    p, e = prime_power(q)
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    return FieldSpec.build(p, e * m, e, modulus)


class Subfield:
    """Arithmetic restricted to the q elements of F_q inside a FieldSpec."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.q = spec.q
        # constants 0..p-1 encode as themselves, so F_p arithmetic is plain mod p
        self.prime = spec.p if spec.sub_degree == 1 else None
        if self.prime is not None:
            self.elements = list(range(spec.p))
        elif spec.sub_degree == spec.degree:
            self.elements = list(range(spec.order))
        else:
            exp_log = spec._tables
            if exp_log is not None:
                exp, _ = exp_log
                step = (spec.order - 1) // (self.q - 1)
                self.elements = sorted([0] + [exp[i * step] for i in range(self.q - 1)])
            else:
                self.elements = [a for a in spec.elements() if spec.in_subfield(a)]

    def add(self, a: int, b: int) -> int:
        if self.prime is not None:
            return (a + b) % self.prime
        return self.spec.add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.prime is not None:
            return (a - b) % self.prime
        return self.spec.sub(a, b)

    def neg(self, a: int) -> int:
        if self.prime is not None:
            return (-a) % self.prime
        return self.spec.neg(a)

    def mul(self, a: int, b: int) -> int:
        if self.prime is not None:
            return (a * b) % self.prime
        return self.spec.mul(a, b)

    def inv(self, a: int) -> int:
        if self.prime is not None:
            if a == 0:
                raise FieldZeroDivision("inverse of zero")
            return pow(a, self.prime - 2, self.prime)
        return self.spec.inv(a)

    def contains(self, a: int) -> bool:
        if self.prime is not None:
            return 0 <= a < self.prime
        return 0 <= a < self.spec.order and self.spec.in_subfield(a)


def subfield_elements(spec: FieldSpec) -> list[FieldElement]:
    """The q elements of F_q inside F_{q^m}, sorted by canonical value."""
    return [FieldElement(spec, a) for a in spec.subfield.elements]


# -- elements ------------------------------------------------------------------

@dataclass(frozen=True, order=False)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.order:
            raise InvalidParameter(f"value {self.value} outside [0, {self.spec.order})")

    def _other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.spec != self.spec:
            raise SpecMismatch("operands live in different fields")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.value, b))

    def __sub__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __mul__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(b)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.frobenius(self.value))

    def in_subfield(self) -> bool:
        return self.spec.in_subfield(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value} in GF({self.spec.p}^{self.spec.degree}))"


def relative_trace(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.trace(a.value))


# -- bases of F_{q^m} over F_q --------------------------------------------------

def _gram(spec: FieldSpec, elements: Sequence[int]) -> list[list[int]]:
    return [[spec.trace(spec.mul(a, b)) for b in elements] for a in elements]


@dataclass(frozen=True)
class ExtensionBasis:
    """An F_q-basis γ_1..γ_m of F_{q^m}.

    Independence is checked through the trace form: its Gram matrix is
    invertible exactly when the elements form a basis.
    """

    spec: FieldSpec
    elements: tuple[int, ...]
    _dual: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        elems = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if len(elems) != self.spec.m:
            raise NotABasis(f"need {self.spec.m} elements, got {len(elems)}")
        if any(not 0 <= e < self.spec.order for e in elems):
            raise NotABasis("element outside the field")
        inv = _elim.inverse(_gram(self.spec, elems), self.spec.subfield)
        if inv is None:
            raise NotABasis("elements are linearly dependent over F_q")
        # γ'_i = Σ_l (G^{-1})_{il} γ_l satisfies Trace(γ'_i γ_j) = δ_ij
        S = self.spec
        dual = []
        for row in inv:
            acc = 0
            for coef, g in zip(row, elems):
                acc = S.add(acc, S.mul(coef, g))
            dual.append(acc)
        object.__setattr__(self, "_dual", tuple(dual))

    @classmethod
    def polynomial(cls, spec: FieldSpec) -> ExtensionBasis:
        """{1, x, ..., x^{m-1}} for x the class of the modulus variable."""
        x = spec.generator_x
        return cls(spec, tuple(spec.pow(x, j) for j in range(spec.m)))

    def coordinates(self, a: int) -> list[int]:
        """F_q-coordinates c with a = Σ c_j γ_j, read off via the dual basis."""
        S = self.spec
        return [S.trace(S.mul(d, a)) for d in self._dual]

    def combine(self, coords: Sequence[int]) -> int:
        S = self.spec
        acc = 0
        for c, g in zip(coords, self.elements):
            if c:
                acc = S.add(acc, S.mul(c, g))
        return acc

    def to_json(self) -> list[int]:
        return list(self.elements)


def dual_basis(basis: ExtensionBasis) -> ExtensionBasis:
    """The unique Γ' with Trace(γ'_i γ_j) = δ_ij."""
    return ExtensionBasis(basis.spec, basis._dual)


def as_values(spec: FieldSpec, xs: Iterable[int | FieldElement]) -> list[int]:
    out = []
    for x in xs:
        if isinstance(x, FieldElement):
            if x.spec != spec:
                raise SpecMismatch("element from a different field")
            out.append(x.value)
        else:
            x = int(x)
            if not 0 <= x < spec.order:
                raise InvalidParameter(f"element {x} outside [0, {spec.order})")
            out.append(x)
    return out


def subfield_isomorphism(src: FieldSpec, dst: FieldSpec) -> dict[int, int]:
    """A field isomorphism from src's F_q to dst's F_q, as a value table.

    A primitive element of the source subfield is sent to a root, inside the
    target subfield, of its minimal polynomial over F_p.
    """
    if src.q != dst.q or src.p != dst.p:
        raise SpecMismatch(f"subfields of order {src.q} and {dst.q} are not isomorphic")
    if src == dst or src.sub_degree == 1:
        return {a: a for a in src.subfield.elements}
    q, p, e = src.q, src.p, src.sub_degree
    sub = src.subfield.elements
    g = next(a for a in sub if a and all(src.pow(a, (q - 1) // f) != 1
                                        for f in range(2, q) if (q - 1) % f == 0 and is_prime(f)))
    # minimal polynomial of g over F_p: product over its Frobenius conjugates
    poly = [1]
    for j in range(e):
        root = src.pow(g, p ** j)
        new = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] = src.add(new[i + 1], c)
            new[i] = src.sub(new[i], src.mul(c, root))
        poly = new

    def value_at(spec: FieldSpec, x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = spec.add(spec.mul(acc, x), c)
        return acc

    h = next(b for b in dst.subfield.elements if b and value_at(dst, b) == 0)
    table = {0: 0}
    for i in range(q - 1):
        table[src.pow(g, i)] = dst.pow(h, i)
    return table
