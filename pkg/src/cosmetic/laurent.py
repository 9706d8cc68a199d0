"""Integer Laurent polynomials in one variable ``t``.

A polynomial is stored as an offset (the exponent of the lowest term) and a
tuple of coefficients, so ``LaurentPoly(-1, (1, -2))`` is ``t^-1 - 2``.
Coefficients are Python ints, hence arbitrary precision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "conj",
    "eval_at_sign",
    "normalize",
    "dot_equal",
]


@dataclass(frozen=True)
class LaurentPoly:
    offset: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        coeffs = coeffs[lo:hi]
        offset = int(self.offset) + lo if coeffs else 0
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "offset", offset)

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        """``c * t^k``."""
        return cls(k, (c,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        """Build from ``{exponent: coefficient}``."""
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str()``: read e.g. ``"2t^2 - 5t + 2"`` or ``"1 - 2t^-1"``."""
        s = re.sub(r"\s*([+-])\s*", r"\1", text.strip().replace("−", "-"))
        if not s or re.search(r"\s", s):
            raise ValueError(f"malformed polynomial {text!r}")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        pos = 0
        for m in _TERM_RE.finditer(s):
            if m.start() != pos:
                break
            pos = m.end()
            sign, digits, var, exp = m.groups()
            if not digits and not var:
                raise ValueError(f"malformed polynomial {text!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            k = (int(exp) if exp is not None else 1) if var else 0
            terms[k] = terms.get(k, 0) + c
        if pos != len(s):
            raise ValueError(f"malformed polynomial {text!r}")
        return cls.from_dict(terms)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low_degree(self) -> int:
        return self.offset

    @property
    def high_degree(self) -> int:
        return self.offset + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Difference between the highest and lowest exponent (0 for zero)."""
        return max(len(self.coeffs) - 1, 0)

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, s: int) -> int:
        return eval_at_sign(self, s)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"


_TERM_RE = re.compile(r"([+-])(\d*)(t)?(?:\^(-?\d+))?")

T = LaurentPoly(1, (1,))
ONE = LaurentPoly(0, (1,))
ZERO = LaurentPoly()


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    lo = min(f.offset, g.offset)
    hi = max(f.high_degree, g.high_degree)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(f.coeffs):
        out[f.offset - lo + i] += c
    for i, c in enumerate(g.coeffs):
        out[g.offset - lo + i] += c
    return LaurentPoly(lo, tuple(out))


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero() or g.is_zero():
        return ZERO
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return LaurentPoly(f.offset + g.offset, tuple(out))


def conj(f: LaurentPoly) -> LaurentPoly:
    """Substitute ``t -> t^-1``."""
    if f.is_zero():
        return f
    return LaurentPoly(-f.high_degree, f.coeffs[::-1])


def eval_at_sign(f: LaurentPoly, s: int) -> int:
    """Evaluate at ``t = 1`` or ``t = -1``.

    Other points are refused: a negative exponent would make the value a
    fraction.
    """
    if s == 1:
        return sum(f.coeffs)
    if s == -1:
        return sum(c if (f.offset + i) % 2 == 0 else -c for i, c in enumerate(f.coeffs))
    raise ValueError(f"can only evaluate at t = 1 or t = -1, got {s!r}")


def normalize(f: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``f`` up to the units ``±t^k``.

    The result has lowest exponent 0 and a positive leading coefficient.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no normal form")
    coeffs = f.coeffs
    if coeffs[-1] < 0:
        coeffs = tuple(-c for c in coeffs)
    return LaurentPoly(0, coeffs)


def dot_equal(f: LaurentPoly, g: LaurentPoly) -> bool:
    """Equality up to multiplication by a unit ``±t^k``."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return normalize(f) == normalize(g)


def render(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(f.high_degree, f.offset - 1, -1):
        c = f.coefficient(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly(terms: Iterable[tuple[int, int]]) -> LaurentPoly:
    """Sum of ``c * t^k`` over ``(c, k)`` pairs."""
    out: dict[int, int] = {}
    for c, k in terms:
        out[k] = out.get(k, 0) + c
    return LaurentPoly.from_dict(out)
