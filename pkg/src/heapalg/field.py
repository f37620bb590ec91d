"""Exact scalar fields: the rationals and GF(p).

Rationals are ``fractions.Fraction`` (always in lowest terms with a positive
denominator). GF(p) elements are ``GFElement`` residues.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GFElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> "GFElement":
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) and GF({other.p})")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF{self.p}({self.value})"


FieldScalar = Union[Fraction, GFElement]


class Field:
    """A field choice: ``Field(0)`` is the rationals, ``Field(p)`` is GF(p)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not is_prime(characteristic):
            raise FieldError(f"GF modulus must be prime, got {characteristic}")
        self.characteristic = characteristic

    @classmethod
    def parse(cls, text: str) -> "Field":
        """``q`` for the rationals, ``gf:p`` for GF(p)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise FieldError(f"bad field modulus in {text!r}") from None
            return cls(p)
        raise FieldError(f"unknown field {text!r}; use 'q' or 'gf:p'")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value) -> FieldScalar:
        if self.characteristic == 0:
            return Fraction(value)
        if isinstance(value, GFElement):
            if value.p != self.characteristic:
                raise FieldError(f"GF({value.p}) element used in GF({self.characteristic})")
            return value
        if isinstance(value, Fraction):
            return GFElement(value.numerator, self.characteristic) / value.denominator
        return GFElement(int(value), self.characteristic)

    @property
    def zero(self) -> FieldScalar:
        return self(0)

    @property
    def one(self) -> FieldScalar:
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __str__(self):
        return "q" if self.characteristic == 0 else f"gf:{self.characteristic}"

    def __repr__(self):
        return f"Field({self.characteristic})"


QQ = Field(0)
GF2 = Field(2)


def GF(p: int) -> Field:
    return Field(p)


def row_reduce(matrix: Sequence[Sequence], field: Field) -> tuple[list[list[FieldScalar]], list[int]]:
    """Reduced row echelon form by plain Gauss-Jordan elimination.

    Returns ``(rref, pivot_columns)``. Used for kernels and as the
    division-based cross-check of the fraction-free rank.
    """
    rows = [[field(x) for x in row] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c] if field.is_rational else rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence], field: Field) -> int:
    """Rank of an arbitrary matrix over ``field`` (division-based)."""
    return len(row_reduce(matrix, field)[1])


def nullspace(matrix: Sequence[Sequence], field: Field, ncols: int | None = None) -> list[list[FieldScalar]]:
    """A basis of ``{x : matrix x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rref, pivots = row_reduce(matrix, field) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][f]
        basis.append(vec)
    return basis
