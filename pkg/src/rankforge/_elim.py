"""Gaussian elimination over any field exposing ``add/sub/mul/inv`` on ints.

Elements are canonical integers with 0 as zero and 1 as one. A field object
may set ``prime`` to its characteristic when its elements are exactly
``0..p-1`` with modular arithmetic; the hot loops then skip method dispatch.
"""

from __future__ import annotations

from typing import Protocol, Sequence


class Ops(Protocol):
    prime: int | None

    def add(self, a: int, b: int) -> int: ...
    def sub(self, a: int, b: int) -> int: ...
    def mul(self, a: int, b: int) -> int: ...
    def inv(self, a: int) -> int: ...


def rref(rows: Sequence[Sequence[int]], ncols: int, F: Ops) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    p = F.prime
    pivots: list[int] = []
    r = 0
    nrows = len(mat)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        lead = row[c]
        if lead != 1:
            if p is not None:
                s = pow(lead, p - 2, p)
                row = [(x * s) % p for x in row]
            else:
                s = F.inv(lead)
                row = [F.mul(x, s) for x in row]
            mat[r] = row
        for i in range(nrows):
            if i != r:
                f = mat[i][c]
                if f:
                    other = mat[i]
                    if p is not None:
                        mat[i] = [(x - f * y) % p for x, y in zip(other, row)]
                    else:
                        mat[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int, F: Ops) -> int:
    """Rank by forward elimination only (no back substitution)."""
    mat = [list(r) for r in rows if any(r)]
    p = F.prime
    r = 0
    nrows = len(mat)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        if p is not None:
            s = pow(row[c], p - 2, p)
            for i in range(r + 1, nrows):
                f = mat[i][c]
                if f:
                    f = (f * s) % p
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], row)]
        else:
            s = F.inv(row[c])
            for i in range(r + 1, nrows):
                f = mat[i][c]
                if f:
                    f = F.mul(f, s)
                    mat[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(mat[i], row)]
        r += 1
    return r


def nullspace(rows: Sequence[Sequence[int]], ncols: int, F: Ops) -> list[list[int]]:
    """Basis of {x : rows . x = 0}, one vector per free column, in column order."""
    red, pivots = rref(rows, ncols, F)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = F.sub(0, row[free])
        basis.append(v)
    return basis


def inverse(matrix: Sequence[Sequence[int]], F: Ops) -> list[list[int]] | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug, 2 * n, F)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], F: Ops) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for t in range(inner):
                if row[t] and b[t][j]:
                    acc = F.add(acc, F.mul(row[t], b[t][j]))
            new.append(acc)
        out.append(new)
    return out
