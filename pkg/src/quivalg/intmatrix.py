"""Exact square integer matrices and their boolean reductions.

All arithmetic is on arbitrary-precision Python integers, so path counts and
Hilbert series coefficients never overflow or round.  Matrices are dense and
immutable; at the scale this package targets (a few thousand rows at the
very most) plain tuples beat any clever representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """A square matrix of non-negative exact integers."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Sequence[int]]):
        fixed = tuple(tuple(r) for r in rows)
        n = len(fixed)
        for r in fixed:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("entries must be exact integers")
                if x < 0:
                    raise ValueError("entries must be non-negative")
        object.__setattr__(self, "rows", fixed)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def total(self) -> int:
        """Sum of all entries."""
        return sum(sum(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @staticmethod
    def zeros(n: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * n for _ in range(n)))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return multiply(self, other)

    def __pow__(self, k: int) -> "IntMatrix":
        return power(self, k)


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dimension != b.dimension:
        raise ValueError(
            f"dimension mismatch: {a.dimension} x {a.dimension} times "
            f"{b.dimension} x {b.dimension}"
        )
    cols = tuple(zip(*b.rows)) if b.rows else ()
    return IntMatrix(
        tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
            for row in a.rows
        )
    )


def power(a: IntMatrix, k: int) -> IntMatrix:
    """a^k by repeated squaring, with a^0 the identity."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = IntMatrix.identity(a.dimension)
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product; block row i of the result is row i of ``a`` scaled by ``b``.

    The flat index convention is (i, i') -> i * dim(b) + i', matching the
    vertex order of a Kronecker square quiver.
    """
    nb = b.dimension
    n = a.dimension * nb
    rows = []
    for i in range(a.dimension):
        for ip in range(nb):
            row = [0] * n
            arow = a.rows[i]
            brow = b.rows[ip]
            for j in range(a.dimension):
                x = arow[j]
                if x:
                    base = j * nb
                    for jp in range(nb):
                        row[base + jp] = x * brow[jp]
            rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def nilpotency_index(a: IntMatrix) -> Optional[int]:
    """Least k >= 1 with a^k = 0, or None if a^n != 0 for n the dimension.

    For non-negative integer matrices a^n = 0 is decisive: a is nilpotent
    iff its n-th power vanishes.
    """
    n = a.dimension
    p = a
    for k in range(1, n + 1):
        if p.is_zero():
            return k
        p = multiply(p, a)
    return None


@dataclass(frozen=True)
class BoolMatrix:
    """A square boolean matrix; the support of a counting matrix."""

    rows: tuple[tuple[bool, ...], ...]

    def __init__(self, rows: Iterable[Sequence[bool]]):
        fixed = tuple(tuple(bool(x) for x in r) for r in rows)
        n = len(fixed)
        for r in fixed:
            if len(r) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", fixed)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> bool:
        return self.rows[i][j]

    def __mul__(self, other: "BoolMatrix") -> "BoolMatrix":
        return bool_multiply(self, other)


def support(a: IntMatrix) -> BoolMatrix:
    """Entrywise "is the entry positive" reduction."""
    return BoolMatrix(tuple(tuple(x > 0 for x in r) for r in a.rows))


def bool_multiply(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    if a.dimension != b.dimension:
        raise ValueError("dimension mismatch")
    n = a.dimension
    rng = range(n)
    return BoolMatrix(
        tuple(
            tuple(any(a.rows[i][k] and b.rows[k][j] for k in rng) for j in rng)
            for i in rng
        )
    )
