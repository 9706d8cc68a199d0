"""Seifert matrices and the invariants they determine.

A Seifert matrix ``V`` is a ``2g x 2g`` integer matrix whose antisymmetrization
``V - V^T`` is unimodular. Everything computed here (Alexander polynomial,
determinant, double cover homology, signature) depends only on the
S-equivalence class of ``V``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import intlinalg
from .intlinalg import AbelianGroup
from .laurent import ONE, T, ZERO, LaurentPoly, eval_at_sign, normalize

__all__ = [
    "SeifertMatrix",
    "PretzelParams",
    "WhiteheadParams",
    "alexander",
    "alexander_raw",
    "knot_det",
    "symmetrize",
    "double_cover_homology",
    "knot_signature",
    "crossing_change",
    "pretzel_seifert",
    "whitehead_seifert",
]


@dataclass(frozen=True)
class SeifertMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = intlinalg.as_matrix(self.rows)
        if len(m) % 2:
            raise ValueError(f"Seifert matrix must have even size, got {len(m)}")
        anti = [[m[i][j] - m[j][i] for j in range(len(m))] for i in range(len(m))]
        if intlinalg.det(anti) != 1:
            raise ValueError(f"det(V - V^T) must be 1 for a knot Seifert matrix, got {m}")
        object.__setattr__(self, "rows", tuple(tuple(r) for r in m))

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return self.size // 2

    def _entry(self, i, j):
        if self.size != 2:
            raise ValueError("entry names a, b, c, d only make sense for 2x2 matrices")
        return self.rows[i][j]

    a = property(lambda self: self._entry(0, 0))
    b = property(lambda self: self._entry(0, 1))
    c = property(lambda self: self._entry(1, 0))
    d = property(lambda self: self._entry(1, 1))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> SeifertMatrix:
        return SeifertMatrix(tuple(zip(*self.rows)))


def seifert(rows: Sequence[Sequence[int]]) -> SeifertMatrix:
    return SeifertMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class PretzelParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if any(x % 2 == 0 for x in (self.p, self.q, self.r)):
            raise ValueError(f"pretzel parameters must be odd, got {(self.p, self.q, self.r)}")

    def __str__(self):
        return f"P({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class WhiteheadParams:
    clasp: str  # "+" or "-"
    n: int

    def __post_init__(self):
        if self.clasp not in ("+", "-"):
            raise ValueError(f"clasp must be '+' or '-', got {self.clasp!r}")

    def __str__(self):
        return f"D{self.clasp}(K,{self.n})"


def _poly_det(M: list[list[LaurentPoly]]) -> LaurentPoly:
    # cofactor expansion along the first row; sizes here are tiny
    n = len(M)
    if n == 1:
        return M[0][0]
    total = ZERO
    for j, entry in enumerate(M[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = entry * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_raw(V: SeifertMatrix) -> LaurentPoly:
    """``det(V - t V^T)`` exactly as computed, before normalization."""
    n = V.size
    M = [[V.rows[i][j] * ONE - V.rows[j][i] * T for j in range(n)] for i in range(n)]
    return _poly_det(M)


def alexander(V: SeifertMatrix) -> LaurentPoly:
    """Alexander polynomial, in the canonical form of :func:`normalize`."""
    return normalize(alexander_raw(V))


def symmetrize(V: SeifertMatrix) -> list[list[int]]:
    return [[V.rows[i][j] + V.rows[j][i] for j in range(V.size)] for i in range(V.size)]


def knot_det(V: SeifertMatrix) -> int:
    value = abs(eval_at_sign(alexander(V), -1))
    check = abs(intlinalg.det(symmetrize(V)))
    if value != check:
        raise AssertionError(f"|Delta(-1)| = {value} but |det(V + V^T)| = {check}")
    return value


def double_cover_homology(V: SeifertMatrix) -> AbelianGroup:
    """First homology of the double branched cover, presented by ``V + V^T``."""
    return intlinalg.smith_normal_form(symmetrize(V))


def knot_signature(V: SeifertMatrix) -> int:
    return intlinalg.signature(symmetrize(V))


def crossing_change(V: SeifertMatrix, eps: int) -> SeifertMatrix:
    """Replace the top-left entry ``a`` by ``a - eps``.

    This is the effect on a genus one Seifert matrix of changing a crossing
    of sign ``eps`` along an arc dual to the first basis curve.
    """
    if V.size != 2:
        raise ValueError("crossing_change is defined for 2x2 Seifert matrices only")
    if eps not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {eps!r}")
    (a, b), (c, d) = V.rows
    return SeifertMatrix(((a - eps, b), (c, d)))


def pretzel_seifert(params: PretzelParams) -> SeifertMatrix:
    """Genus one Seifert matrix ``1/2 [[p+q, q+1], [q-1, q+r]]`` of ``P(p,q,r)``."""
    p, q, r = params.p, params.q, params.r
    return SeifertMatrix((((p + q) // 2, (q + 1) // 2), ((q - 1) // 2, (q + r) // 2)))


def whitehead_seifert(params: WhiteheadParams) -> SeifertMatrix:
    """Seifert matrix of the n-twisted Whitehead double (any companion).

    The positive clasp gives ``[[-1, 0], [-1, n]]``. The negative clasp is the
    mirror of the positive clasp with twist ``-n``, and mirroring sends ``V``
    to ``-V^T``, which gives ``[[1, 1], [0, n]]``.
    """
    n = params.n
    if params.clasp == "+":
        return SeifertMatrix(((-1, 0), (-1, n)))
    return SeifertMatrix(((1, 1), (0, n)))
