"""Dense square matrices over any scalar backend.

Sized for the 8x8 rotation and 16x16 block work here, but generic in n.
Matrices are immutable; rows are tuples of scalars.  Known-zero entries are
skipped in products, which makes signed-permutation factors (basis
translations, the conjugation matrix) cheap.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import ApproxReal, Rational, format_scalar, invert


class DimensionMismatch(ValueError):
    pass


class NotOrthogonal(ValueError):
    pass


def _approx_eps(rows) -> float:
    """Largest tolerance among ApproxReal entries, 0.0 if there are none.

    Gates the raw-float fast paths below; they are equivalent to entrywise
    wrapped arithmetic because a run's tolerances are uniform and combine as
    the max.
    """
    eps = 0.0
    for row in rows:
        for e in row:
            if type(e) is ApproxReal and e.eps > eps:
                eps = e.eps
    return eps


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls(((0,) * n,) * n)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        n = self.n
        if other.n != n:
            raise DimensionMismatch(f"cannot multiply {n}x{n} by {other.n}x{other.n}")
        eps = max(_approx_eps(self.rows), _approx_eps(other.rows))
        if eps:
            a = [[float(e) for e in row] for row in self.rows]
            bcols = [[float(e) for e in col] for col in zip(*other.rows)]
            out = []
            for arow in a:
                out.append(
                    tuple(
                        ApproxReal(sum(x * y for x, y in zip(arow, col)), eps)
                        for col in bcols
                    )
                )
            return Matrix(out)
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [0] * n
            for k in range(n):
                aik = arow[k]
                if not aik:
                    continue
                brow = brows[k]
                for j in range(n):
                    bkj = brow[j]
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
            out.append(acc)
        return Matrix(out)

    def apply(self, vec) -> tuple:
        vec = tuple(vec)
        n = self.n
        if len(vec) != n:
            raise DimensionMismatch(f"vector of length {len(vec)} against {n}x{n}")
        eps = max(_approx_eps(self.rows), _approx_eps((vec,)))
        if eps:
            vf = [float(e) for e in vec]
            return tuple(
                ApproxReal(sum(float(r) * v for r, v in zip(row, vf)), eps)
                for row in self.rows
            )
        out = [0] * n
        for i, row in enumerate(self.rows):
            acc = 0
            for k in range(n):
                rk = row[k]
                if rk and vec[k]:
                    acc = acc + rk * vec[k]
            out[i] = acc
        return tuple(out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch("size mismatch")
        return Matrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch("size mismatch")
        return Matrix(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return Matrix(tuple(-e for e in row) for row in self.rows)

    def scale(self, s) -> "Matrix":
        return Matrix(tuple(e * s for e in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            return False
        for ra, rb in zip(self.rows, other.rows):
            for a, b in zip(ra, rb):
                if not (a == b):
                    return False
        return True

    def trace(self):
        t = 0
        for i, row in enumerate(self.rows):
            t = t + row[i]
        return t

    def det(self):
        """Determinant: fraction-free elimination for exact entries, partial-pivot
        LU on raw floats for the tolerance backend."""
        if any(isinstance(e, ApproxReal) for row in self.rows for e in row):
            return _det_float(self.rows)
        return _det_bareiss(self.rows)

    def to_json(self) -> list[list[str]]:
        """Row-major nested arrays of scalar literals."""
        return [[format_scalar(e) for e in row] for row in self.rows]

    @classmethod
    def from_json(cls, rows, backend) -> "Matrix":
        return cls([[backend.parse(e) if isinstance(e, str) else backend.scalar(e)
                     for e in row] for row in rows])

    def __repr__(self):
        return f"<Matrix {self.n}x{self.n}>"


_RATL = (int, Fraction, type(Rational(0)))


def _det_bareiss(rows):
    """Bareiss fraction-free elimination.

    Purely rational matrices are scaled row-wise to integers first, where the
    pivot divisions are exact integer divisions (they are minors); the row
    scaling divides back out of the result.  Matrices with sqrt-3 entries run
    the same elimination over the field directly.
    """
    n = len(rows)
    if all(isinstance(e, _RATL) for row in rows for e in row):
        m = []
        denom = 1
        for row in rows:
            q = [Rational(e) for e in row]
            d = 1
            for e in q:
                d = math.lcm(d, int(e.denominator))
            denom *= d
            m.append([int(e * d) for e in q])
        return Rational(_det_bareiss_int(m), denom)
    m = [[Rational(e) if type(e) is int else e for e in row] for row in rows]
    sign = 1
    prev = Rational(1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Rational(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Rational(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_bareiss_int(m):
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            mi = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_float(rows):
    n = len(rows)
    eps = 1e-9
    for row in rows:
        for e in row:
            if isinstance(e, ApproxReal):
                eps = e.eps
                break
        else:
            continue
        break
    m = [[float(e) for e in row] for row in rows]
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[p][k] == 0.0:
            return ApproxReal(0.0, eps)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        inv = 1.0 / m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return ApproxReal(det, eps)


def is_orthogonal(m: Matrix) -> bool:
    """m^t m = I, exactly or within tolerance.

    Checks column dot products pairwise for j <= i only; the Gram matrix is
    symmetric term by term, so this is the same test at half the work.
    """
    eps = _approx_eps(m.rows)
    if eps:
        cols = [[float(e) for e in col] for col in zip(*m.rows)]
        for i, ci in enumerate(cols):
            for j in range(i + 1):
                dot = sum(x * y for x, y in zip(ci, cols[j]))
                if abs(dot - (1.0 if i == j else 0.0)) > eps:
                    return False
        return True
    cols = list(zip(*m.rows))
    for i, ci in enumerate(cols):
        for j in range(i + 1):
            dot = 0
            for x, y in zip(ci, cols[j]):
                if x and y:
                    dot = dot + x * y
            if not (dot == (1 if i == j else 0)):
                return False
    return True


def is_special_orthogonal(m: Matrix) -> bool:
    """m^t m = I (exact, or within tolerance) and det +1 (sign test on floats)."""
    if not is_orthogonal(m):
        return False
    d = m.det()
    if isinstance(d, ApproxReal):
        return d.value > 0
    return d == 1


def trace_inner_product(a: Matrix, b: Matrix):
    """<a, b> = trace(a^t b) / n, the trace form normalized so <I, I> = 1."""
    if a.n != b.n:
        raise DimensionMismatch("size mismatch")
    total = 0
    for ra, rb in zip(a.rows, b.rows):
        for x, y in zip(ra, rb):
            if x and y:
                total = total + x * y
    return total * invert(a.n)


def random_rotation(rng, backend, n: int = 8, steps: int = 12) -> Matrix:
    """Random element of SO(n) as a product of plane rotations.

    Each factor uses the rational circle parametrization
    (cos, sin) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)), so exact-backend output
    is an exactly orthogonal rational matrix.
    """
    m = Matrix.identity(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        if backend.exact:
            t = Rational(rng.randint(-8, 8), rng.randint(1, 8))
        else:
            t = backend.scalar(rng.uniform(-2.0, 2.0))
        den = invert(1 + t * t)
        c = (1 - t * t) * den
        s = 2 * t * den
        g = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        g[i][i] = c
        g[j][j] = c
        g[i][j] = -s
        g[j][i] = s
        m = Matrix(g) * m
    return m
