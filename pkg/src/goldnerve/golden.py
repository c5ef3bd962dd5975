"""Exact arithmetic in Q(sqrt 5) in the basis {1, phi}, with vectors and matrices.

A scalar ``p + q*phi`` is stored as a triple of integers ``(a, b, d)`` with
``p = a/d`` and ``q = b/d``, ``d > 0`` and ``gcd(a, b, d) == 1``.  That form is
canonical, so equality and hashing are structural.  ``phi**2 == phi + 1`` is
the only rewriting rule needed for multiplication.

Floating point conversion (``float(x)``) exists for display only.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

SQRT5 = 5 ** 0.5


def sign_ab(a: int, b: int) -> int:
    """Sign of the real number ``a + b*phi`` for integers a, b."""
    # a + b*phi = (u + v*sqrt5) / 2
    u = 2 * a + b
    v = b
    if u >= 0 and v >= 0:
        return 0 if (u == 0 and v == 0) else 1
    if u <= 0 and v <= 0:
        return -1
    uu, vv = u * u, 5 * v * v
    if uu == vv:  # only possible when u == v == 0, excluded above
        return 0
    if u > 0:
        return 1 if uu > vv else -1
    return -1 if uu > vv else 1


class GoldenScalar:
    """An element ``p + q*phi`` of Q(sqrt 5)."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, p: int | Fraction = 0, q: int | Fraction = 0) -> None:
        p = Fraction(p)
        q = Fraction(q)
        d = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
        self._set(p.numerator * (d // p.denominator), q.numerator * (d // q.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int = 1) -> GoldenScalar:
        obj = object.__new__(cls)
        if d == 1:
            obj._a, obj._b, obj._d = a, b, 1
        else:
            if d < 0:
                a, b, d = -a, -b, -d
            obj._set(a, b, d)
        return obj

    @classmethod
    def from_ints(cls, a: int, b: int) -> GoldenScalar:
        """The integral element ``a + b*phi``."""
        return cls._raw(int(a), int(b), 1)

    @classmethod
    def coerce(cls, x: object) -> GoldenScalar:
        if isinstance(x, GoldenScalar):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Rational):
            return cls(Fraction(x))
        raise TypeError(f"cannot interpret {x!r} as a golden scalar")

    # components

    @property
    def p(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def q(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def ints(self) -> tuple[int, int]:
        """``(p, q)`` as integers; only valid for integral scalars."""
        if self._d != 1:
            raise ValueError(f"{self} is not in Z[phi]")
        return self._a, self._b

    def is_integral(self) -> bool:
        return self._d == 1

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    # arithmetic

    def __add__(self, other: object) -> GoldenScalar:
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GoldenScalar._raw(self._a + o._a, self._b + o._b, self._d)
        d = self._d * o._d
        return GoldenScalar._raw(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, d)

    __radd__ = __add__

    def __neg__(self) -> GoldenScalar:
        return GoldenScalar._raw(-self._a, -self._b, self._d)

    def __sub__(self, other: object) -> GoldenScalar:
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> GoldenScalar:
        return GoldenScalar.coerce(other) - self

    def __mul__(self, other: object) -> GoldenScalar:
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        bb = b1 * b2
        return GoldenScalar._raw(a1 * a2 + bb, a1 * b2 + b1 * a2 + bb, self._d * o._d)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenScalar:
        """Galois conjugate: ``phi -> 1 - phi``."""
        return GoldenScalar._raw(self._a + self._b, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``x * conjugate(x)``, a rational number."""
        a, b = self._a, self._b
        return Fraction(a * a + a * b - b * b, self._d * self._d)

    def inverse(self) -> GoldenScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        c = self.conjugate()
        n = self.norm()
        return GoldenScalar._raw(c._a * n.denominator, c._b * n.denominator, c._d * n.numerator)

    def __truediv__(self, other: object) -> GoldenScalar:
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> GoldenScalar:
        return GoldenScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> GoldenScalar:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # order

    def sign(self) -> int:
        return sign_ab(self._a, self._b)

    def _cmp(self, other: object) -> int:
        return (self - GoldenScalar.coerce(other)).sign()

    def __lt__(self, other: object) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: object) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: object) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: object) -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenScalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self == GoldenScalar.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        return (self._a + self._b * (1 + SQRT5) / 2) / self._d

    # rendering / serialization

    def __repr__(self) -> str:
        return f"GoldenScalar({self.p}, {self.q})"

    def __str__(self) -> str:
        p, q = self.p, self.q
        if q == 0:
            return str(p)
        if p == 0:
            return f"{q}*phi"
        sgn = "-" if q < 0 else "+"
        return f"{p} {sgn} {abs(q)}*phi"

    def to_json(self) -> list[int]:
        p, q = self.p, self.q
        return [p.numerator, p.denominator, q.numerator, q.denominator]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> GoldenScalar:
        pn, pd, qn, qd = data
        if pd <= 0 or qd <= 0:
            raise ValueError(f"bad golden scalar encoding {data!r}")
        return cls(Fraction(pn, pd), Fraction(qn, qd))


ZERO = GoldenScalar._raw(0, 0)
ONE = GoldenScalar._raw(1, 0)
PHI = GoldenScalar._raw(0, 1)
HALF = GoldenScalar(Fraction(1, 2))


def gs(p: int | Fraction = 0, q: int | Fraction = 0) -> GoldenScalar:
    """Shorthand constructor for ``p + q*phi``."""
    return GoldenScalar(p, q)


class GoldenVector:
    """Fixed-length vector over Q(sqrt 5)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[object]) -> None:
        self.coords: tuple[GoldenScalar, ...] = tuple(GoldenScalar.coerce(c) for c in coords)

    @classmethod
    def zeros(cls, n: int) -> GoldenVector:
        return cls([ZERO] * n)

    @classmethod
    def basis(cls, n: int, i: int) -> GoldenVector:
        c = [ZERO] * n
        c[i] = ONE
        return cls(c)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> GoldenScalar:
        return self.coords[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GoldenVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def _check(self, other: GoldenVector) -> None:
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: GoldenVector) -> GoldenVector:
        self._check(other)
        return GoldenVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: GoldenVector) -> GoldenVector:
        self._check(other)
        return GoldenVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> GoldenVector:
        return GoldenVector(-a for a in self.coords)

    def scale(self, c: object) -> GoldenVector:
        c = GoldenScalar.coerce(c)
        return GoldenVector(c * a for a in self.coords)

    def dot(self, other: GoldenVector) -> GoldenScalar:
        """Standard Euclidean dot product."""
        self._check(other)
        out = ZERO
        for a, b in zip(self.coords, other.coords):
            if a._a or a._b:
                out = out + a * b
        return out

    def coefficient_sum(self) -> GoldenScalar:
        out = ZERO
        for a in self.coords:
            out = out + a
        return out

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.coords) if not a.is_zero())

    def is_integral(self) -> bool:
        return all(a.is_integral() for a in self.coords)

    def conjugate(self) -> GoldenVector:
        return GoldenVector(a.conjugate() for a in self.coords)

    def to_json(self) -> list[list[int]]:
        return [a.to_json() for a in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> GoldenVector:
        return cls(GoldenScalar.from_json(c) for c in data)

    def __repr__(self) -> str:
        return "GoldenVector([" + ", ".join(str(a) for a in self.coords) + "])"


class SingularMatrixError(ArithmeticError):
    pass


class GoldenMatrix:
    """Dense rectangular matrix over Q(sqrt 5)."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[object]]) -> None:
        self.rows: tuple[tuple[GoldenScalar, ...], ...] = tuple(
            tuple(GoldenScalar.coerce(x) for x in r) for r in rows
        )
        nr = len(self.rows)
        nc = len(self.rows[0]) if nr else 0
        if any(len(r) != nc for r in self.rows):
            raise ValueError("ragged matrix rows")
        self.shape = (nr, nc)

    @classmethod
    def identity(cls, n: int) -> GoldenMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[object]) -> GoldenMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> GoldenScalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GoldenMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    @property
    def T(self) -> GoldenMatrix:
        return GoldenMatrix(zip(*self.rows)) if self.rows else GoldenMatrix([])

    def __add__(self, other: GoldenMatrix) -> GoldenMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return GoldenMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: GoldenMatrix) -> GoldenMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return GoldenMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c: object) -> GoldenMatrix:
        c = GoldenScalar.coerce(c)
        return GoldenMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: GoldenMatrix | GoldenVector) -> GoldenMatrix | GoldenVector:
        if isinstance(other, GoldenVector):
            if self.shape[1] != len(other):
                raise ValueError(f"shape mismatch: {self.shape} @ vector of length {len(other)}")
            return GoldenVector(GoldenVector(r).dot(other) for r in self.rows)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols = [GoldenVector(c) for c in zip(*other.rows)]
        return GoldenMatrix([[GoldenVector(r).dot(c) for c in cols] for r in self.rows])

    def conjugate(self) -> GoldenMatrix:
        return GoldenMatrix([[a.conjugate() for a in r] for r in self.rows])

    def is_integral(self) -> bool:
        return all(a.is_integral() for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self == self.T

    def submatrix(self, k: int) -> GoldenMatrix:
        """Leading principal k x k block."""
        return GoldenMatrix([r[:k] for r in self.rows[:k]])

    def determinant(self) -> GoldenScalar:
        n, m = self.shape
        if n != m:
            raise ValueError(f"determinant of non-square {self.shape} matrix")
        a = [list(r) for r in self.rows]
        det = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if piv is None:
                return ZERO
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            p = a[c][c]
            det = det * p
            pinv = p.inverse()
            for r in range(c + 1, n):
                if a[r][c].is_zero():
                    continue
                f = a[r][c] * pinv
                row_c = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], row_c)]
        return det

    def leading_principal_minors(self) -> list[GoldenScalar]:
        """All leading principal minors, from 1x1 up to the full matrix.

        Uses pivot products of elimination without row exchanges; if a zero
        pivot is met the remaining minors are computed one by one.
        """
        n, m = self.shape
        if n != m:
            raise ValueError(f"minors of non-square {self.shape} matrix")
        a = [list(r) for r in self.rows]
        minors: list[GoldenScalar] = []
        running = ONE
        for c in range(n):
            p = a[c][c]
            if p.is_zero():
                minors.extend(self.submatrix(k).determinant() for k in range(c + 1, n + 1))
                return minors
            running = running * p
            minors.append(running)
            pinv = p.inverse()
            for r in range(c + 1, n):
                if a[r][c].is_zero():
                    continue
                f = a[r][c] * pinv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return minors

    def inverse(self) -> GoldenMatrix:
        n, m = self.shape
        if n != m:
            raise ValueError(f"inverse of non-square {self.shape} matrix")
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            pinv = a[c][c].inverse()
            a[c] = [x * pinv for x in a[c]]
            for r in range(n):
                if r != c and not a[r][c].is_zero():
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return GoldenMatrix([row[n:] for row in a])

    def rank(self) -> int:
        return rank_of(GoldenVector(r) for r in self.rows)

    def to_json(self) -> list[list[list[int]]]:
        return [[a.to_json() for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> GoldenMatrix:
        return cls([[GoldenScalar.from_json(a) for a in r] for r in data])

    def __repr__(self) -> str:
        body = "\n ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)
        return f"GoldenMatrix(\n {body})"


def dot_with_form(x: GoldenVector, form: GoldenMatrix, y: GoldenVector) -> GoldenScalar:
    """Dense triple product ``x^T B y``."""
    return x.dot(form @ y)


def rank_of(vectors: Iterable[GoldenVector], stop_at: int | None = None) -> int:
    """Exact rank of a family of vectors by incremental echelon reduction.

    ``stop_at`` ends the scan early once that rank is reached.
    """
    basis: dict[int, list[GoldenScalar]] = {}  # pivot column -> normalized row
    for v in vectors:
        row = list(v.coords)
        for col, b in basis.items():
            c = row[col]
            if not c.is_zero():
                row = [x - c * y for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if not x.is_zero()), None)
        if piv is None:
            continue
        inv = row[piv].inverse()
        row = [x * inv for x in row]
        for col, b in basis.items():
            c = b[piv]
            if not c.is_zero():
                basis[col] = [x - c * y for x, y in zip(b, row)]
        basis[piv] = row
        if stop_at is not None and len(basis) >= stop_at:
            break
    return len(basis)
