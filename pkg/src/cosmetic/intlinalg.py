"""Exact linear algebra over the integers.

Matrices are plain sequences of rows. Nothing here touches floating point:
determinants use Bareiss fraction-free elimination, the Smith normal form is
computed by unimodular row/column moves, and signatures by congruence
diagonalization over ``Fraction``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "as_matrix",
    "det",
    "smith_diagonal",
    "smith_normal_form",
    "signature",
    "transpose",
    "matmul",
]

IntMatrix = list[list[int]]


def as_matrix(rows: Sequence[Sequence[int]], square: bool = True) -> IntMatrix:
    m = [[int(x) for x in row] for row in rows]
    if not m or not m[0]:
        raise ValueError("matrix must have at least one row and column")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise ValueError("ragged matrix")
    if square and width != len(m):
        raise ValueError(f"expected a square matrix, got {len(m)}x{width}")
    return m


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss elimination; every division is exact."""
    A = as_matrix(M)
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d1 + ... + Z/dk``.

    ``invariant_factors`` satisfy ``d1 | d2 | ... | dk`` with every ``di >= 2``.
    """

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {factors}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_diagonal(cls, diagonal: Sequence[int], free_rank: int = 0) -> AbelianGroup:
        """Group from any diagonal of a relation matrix; zeros count as free rank."""
        diag = [abs(d) for d in diagonal]
        free_rank += sum(1 for d in diag if d == 0)
        return cls(tuple(d for d in diag if d > 1), free_rank)

    @classmethod
    def parse(cls, text: str) -> AbelianGroup:
        """Inverse of ``str()``, e.g. ``"Z/3 ⊕ Z/3"`` or ``"0"``."""
        text = text.strip()
        if text == "0":
            return cls()
        free, factors = 0, []
        for part in re.split(r"\s*[⊕+]\s*", text):
            if part == "Z":
                free += 1
            elif m := re.fullmatch(r"Z/(\d+)", part):
                factors.append(int(m.group(1)))
            else:
                raise ValueError(f"cannot parse group {text!r}")
        return cls(tuple(factors), free)

    @property
    def order(self) -> int | None:
        """Order of the group, or None when infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) + self.free_rank <= 1

    def __str__(self) -> str:
        if self.is_trivial():
            return "0"
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        return " ⊕ ".join(parts)


def smith_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonnegative Smith normal form diagonal of an arbitrary integer matrix.

    Returns ``min(rows, cols)`` entries ``s1 | s2 | ...``, zeros last.
    """
    A = as_matrix(M, square=False)
    rows, cols = len(A), len(A[0])
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]

        dirty = False
        p = A[t][t]
        for i in range(t + 1, rows):
            q = A[i][t] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            dirty |= A[i][t] != 0
        for j in range(t + 1, cols):
            q = A[t][j] // p
            if q:
                for row in A:
                    row[j] -= q * row[t]
            dirty |= A[t][j] != 0
        if dirty:
            # a remainder is now smaller than the pivot; re-pick
            continue
        # pivot must divide the rest of the block, otherwise fold in a row
        bad = next(
            (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
            None,
        )
        if bad is not None:
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            continue
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        t += 1
    return [abs(A[k][k]) if k < t else 0 for k in range(min(rows, cols))]


def smith_normal_form(M: Sequence[Sequence[int]]) -> AbelianGroup:
    """Cokernel of ``M`` acting on column vectors: ``Z^rows / M Z^cols``."""
    A = as_matrix(M, square=False)
    diag = smith_diagonal(A)
    extra_rows = len(A) - len(diag)
    return AbelianGroup.from_diagonal(diag, free_rank=extra_rows)


def signature(M: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Symmetric Gaussian elimination over the rationals. When every remaining
    diagonal entry is zero but some off-diagonal ``a_ij`` is not, adding row
    and column ``j`` to ``i`` creates the diagonal entry ``2 a_ij``; the pair
    ends up contributing one positive and one negative square.
    """
    A = [[Fraction(x) for x in row] for row in as_matrix(M)]
    n = len(A)
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(i)):
        raise ValueError("signature needs a symmetric matrix")
    pos = neg = 0
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            for r in range(n):
                A[i][r] += A[j][r]
            for r in range(n):
                A[r][i] += A[r][j]
            piv = i
        A[k], A[piv] = A[piv], A[k]
        for row in A:
            row[k], row[piv] = row[piv], row[k]
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
                for j in range(k, n):
                    A[j][i] -= f * A[j][k]
    return pos - neg
