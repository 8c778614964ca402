"""Exact integer matrix arithmetic.

Everything here works on Python integers, so there is no overflow and no
rounding. Matrices are small (5x5 or 6x5 in practice) and the algorithms are
chosen for exactness and determinism rather than asymptotic speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major as a tuple of tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> IntMatrix:
        return cls(tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)))

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        other = as_matrix(other)
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __mul__(self, k: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(k * v for v in r) for r in self.rows))

    __rmul__ = __mul__

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.ncols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def as_matrix(m: IntMatrix | Iterable[Iterable[int]]) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix(tuple(tuple(r) for r in m))


def _require_square(m: IntMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"square matrix required, got shape {m.shape}")


def determinant(m) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every intermediate is an integer (a minor of the input), so the entries
    grow only polynomially.
    """
    m = as_matrix(m)
    _require_square(m)
    n = m.nrows
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def adjugate(m) -> IntMatrix:
    """Transpose of the cofactor matrix, so that ``m @ adj == det(m) * I``."""
    m = as_matrix(m)
    _require_square(m)
    n = m.nrows
    if n == 1:
        return IntMatrix(((1,),))
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(m.rows) if k != i]
            cof[i][j] = (-1) ** (i + j) * determinant(minor)
    return IntMatrix(tuple(zip(*cof)))


@dataclass(frozen=True)
class SnfDecomposition:
    """``left @ original @ right`` is diagonal with entries ``diag``."""

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        nrows, ncols = self.left.nrows, self.right.ncols
        return IntMatrix(tuple(
            tuple(self.diag[i] if i == j and i < len(self.diag) else 0 for j in range(ncols))
            for i in range(nrows)
        ))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def smith_normal_form(m) -> SnfDecomposition:
    """Smith normal form with unimodular transforms.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block (ties broken by row, then column), which makes the output
    a deterministic function of the input.
    """
    m = as_matrix(m)
    nrows, ncols = m.shape
    a = [list(r) for r in m.rows]
    left = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    right = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + k * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in right:
            r[dst] += k * r[src]

    for t in range(min(nrows, ncols)):
        while True:
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot row and column are clear; enforce divisibility of the block
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]

    diag = tuple(a[i][i] for i in range(min(nrows, ncols)))
    return SnfDecomposition(diag, IntMatrix(tuple(map(tuple, left))), IntMatrix(tuple(map(tuple, right))))


@dataclass(frozen=True)
class KernelModN:
    """Solution group of ``m @ x == 0 (mod modulus)`` as a direct sum of cyclic groups.

    Each generator ``g`` has additive order ``orders[k]`` in
    ``(Z/modulus)^cols`` and the group is the internal direct sum of the
    cyclic subgroups they generate, so every element has a unique coefficient
    vector ``c`` with ``0 <= c[k] < orders[k]``.
    """

    modulus: int
    ncols: int
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.orders)

    def element(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        n = self.modulus
        out = [0] * self.ncols
        for c, g in zip(coeffs, self.generators):
            for i, v in enumerate(g):
                out[i] += c * v
        return tuple(v % n for v in out)

    def __iter__(self):
        from itertools import product

        for coeffs in product(*(range(o) for o in self.orders)):
            yield self.element(coeffs)


def kernel_mod(m, modulus: int, ncols: int | None = None) -> KernelModN:
    """Generators and orders for ``{x : m @ x == 0 (mod modulus)}``.

    With ``U m V = D`` in Smith form the substitution ``x = V y`` decouples
    the system into ``D_i y_i == 0 (mod modulus)``; coordinate ``i`` then
    contributes the cyclic factor generated by ``modulus / gcd(D_i, modulus)``
    times column ``i`` of ``V``, of order ``gcd(D_i, modulus)`` (``D_i = 0``
    beyond the rank).
    """
    if modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    m = as_matrix(m)
    snf = smith_normal_form(m)
    cols = m.ncols
    gens, orders = [], []
    for i in range(cols):
        d = snf.diag[i] if i < len(snf.diag) else 0
        order = gcd(d, modulus)
        if order == 1:
            continue
        step = modulus // order
        gens.append(tuple((step * snf.right[k, i]) % modulus for k in range(cols)))
        orders.append(order)
    return KernelModN(modulus, cols, tuple(gens), tuple(orders))
