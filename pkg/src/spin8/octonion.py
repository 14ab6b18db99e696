"""Octonion algebra on R^8.

Basis convention: e1 is the multiplicative unit, e2, e3, e4 span a quaternion
subalgebra (i, j, ij), and e5..e8 are l, i*l, j*l, (ij)*l for a doubling
generator l orthogonal to the quaternions.  The 8x8 unit product table is
generated once at import time by Cayley-Dickson doubling

    (a, b)(c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))

and is the single source of truth for every product in the package.
Conjugation is the full octonionic one: it fixes e1 and negates e2..e8.
"""

from __future__ import annotations

from .linalg import Matrix
from .scalars import (
    ApproxReal,
    Rational,
    format_scalar,
    infer_backend,
    invert,
    ParseError,
)


class NotUnit(ValueError):
    """Octonion expected to have norm 1."""


class NotImaginaryUnit(ValueError):
    """Octonion expected to be a unit vector with zero e1 component."""


# --- unit multiplication table ---------------------------------------------

_QUAT_CYCLE = {
    (1, 2): (1, 3), (2, 1): (-1, 3),
    (2, 3): (1, 1), (3, 2): (-1, 1),
    (3, 1): (1, 2), (1, 3): (-1, 2),
}


def _quat_mul(a: int, b: int) -> tuple[int, int]:
    # 0-based quaternion units 0=1, 1=i, 2=j, 3=k
    if a == 0:
        return (1, b)
    if b == 0:
        return (1, a)
    if a == b:
        return (-1, 0)
    return _QUAT_CYCLE[(a, b)]


def _unit_mul(i: int, j: int) -> tuple[int, int]:
    # 0-based octonion units as quaternion pairs: m<4 -> (q_m, 0), else (0, q_{m-4})
    hi, lo_i = (i >= 4), i % 4
    hj, lo_j = (j >= 4), j % 4
    if not hi and not hj:
        return _quat_mul(lo_i, lo_j)
    if not hi and hj:                      # (a,0)(0,d) = (0, d*a)
        s, k = _quat_mul(lo_j, lo_i)
        return (s, k + 4)
    if hi and not hj:                      # (0,b)(c,0) = (0, b*conj(c))
        s, k = _quat_mul(lo_i, lo_j)
        return (s if lo_j == 0 else -s, k + 4)
    # (0,b)(0,d) = (-conj(d)*b, 0)
    s, k = _quat_mul(lo_j, lo_i)
    return (-s if lo_j == 0 else s, k)


TABLE: tuple[tuple[tuple[int, int], ...], ...] = tuple(
    tuple(_unit_mul(i, j) for j in range(8)) for i in range(8)
)


def unit_product(i: int, j: int) -> tuple[int, int]:
    """(sign, k) with e_i * e_j = sign * e_k, all indices 1-based."""
    s, k = TABLE[i - 1][j - 1]
    return (s, k + 1)


def table_rows() -> list[list[str]]:
    """The basis product table as strings, e.g. "e4" or "-e4"."""
    return [
        [("e" if s > 0 else "-e") + str(k + 1) for (s, k) in row]
        for row in TABLE
    ]


def mul_coeffs(x, y):
    """Product of two octonion coefficient 8-tuples (the hot path).

    Tolerance-backend inputs are multiplied on raw floats and re-wrapped,
    which is exact-equivalent because a run's tolerances are uniform and
    propagate as the max.
    """
    eps = 0.0
    for c in x:
        if type(c) is ApproxReal and c.eps > eps:
            eps = c.eps
    for c in y:
        if type(c) is ApproxReal and c.eps > eps:
            eps = c.eps
    if eps:
        xf = [float(c) for c in x]
        yf = [float(c) for c in y]
        out = [0.0] * 8
        for xi, row in zip(xf, TABLE):
            if xi:
                for yj, (s, k) in zip(yf, row):
                    if yj:
                        out[k] = (out[k] + xi * yj) if s > 0 else (out[k] - xi * yj)
        return tuple(ApproxReal(v, eps) for v in out)
    out = [0] * 8
    for xi, row in zip(x, TABLE):
        if not xi:
            continue
        for yj, (s, k) in zip(y, row):
            if yj:
                out[k] = (out[k] + xi * yj) if s > 0 else (out[k] - xi * yj)
    return tuple(out)


# --- the algebra ------------------------------------------------------------

class Octonion:
    """8-vector of scalars with the Cayley-Dickson product."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 8:
            raise ValueError("octonion needs exactly 8 coefficients")
        self.coeffs = coeffs

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        """Basis octonion e_i (1-based); e_1 is the unit."""
        return _BASIS[i - 1]

    @classmethod
    def one(cls) -> "Octonion":
        return _BASIS[0]

    @classmethod
    def zero(cls) -> "Octonion":
        return _ZERO

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return Octonion(-c for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(mul_coeffs(self.coeffs, other.coeffs))

    def scale(self, s) -> "Octonion":
        return Octonion(c * s for c in self.coeffs)

    def conj(self) -> "Octonion":
        c = self.coeffs
        return Octonion((c[0],) + tuple(-v for v in c[1:]))

    def norm_sq(self):
        n = 0
        for c in self.coeffs:
            if c:
                n = n + c * c
        return n

    def inverse(self) -> "Octonion":
        """x^-1 = conj(x) / |x|^2."""
        return self.conj().scale(invert(self.norm_sq()))

    def is_unit(self) -> bool:
        return self.norm_sq() == 1

    def is_imaginary_unit(self) -> bool:
        return self.coeffs[0] == 0 and self.is_unit()

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"Octonion({format_octonion(self)})"

    def __str__(self):
        return format_octonion(self)


_BASIS = tuple(
    Octonion(tuple(1 if j == i else 0 for j in range(8))) for i in range(8)
)
_ZERO = Octonion((0,) * 8)


def ensure_unit(x: Octonion) -> Octonion:
    if not x.is_unit():
        raise NotUnit(f"expected a unit octonion, got |x|^2 = {x.norm_sq()}")
    return x


def ensure_imaginary_unit(v: Octonion) -> Octonion:
    if not v.is_imaginary_unit():
        raise NotImaginaryUnit(
            "expected a unit octonion with zero e1 component"
        )
    return v


def left_translation(x: Octonion) -> Matrix:
    """Matrix of y -> x*y; column j is x * e_j.

    Entries are just signed copies of the coefficients of x placed by the
    unit table, so no scalar products are needed.
    """
    g = [[0] * 8 for _ in range(8)]
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        row = TABLE[i]
        for j in range(8):
            s, k = row[j]
            g[k][j] = xi if s > 0 else -xi
    return Matrix(g)


def right_translation(x: Octonion) -> Matrix:
    """Matrix of y -> y*x."""
    g = [[0] * 8 for _ in range(8)]
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        for j in range(8):
            s, k = TABLE[j][i]
            g[k][j] = xi if s > 0 else -xi
    return Matrix(g)


def to_backend(x: Octonion, backend) -> Octonion:
    """Re-code the coefficients of x in the given backend."""
    return Octonion(tuple(backend.scalar(c) for c in x.coeffs))


def cube_root_of_unity(v: Octonion) -> Octonion:
    """s = (-1 + sqrt(3) v) / 2 for unit imaginary v.

    Satisfies s**3 = 1, s != 1 and s*s = conj(s); together with conj(s) and 1
    these are the cube roots of unity in the subalgebra spanned by 1 and v.
    """
    ensure_imaginary_unit(v)
    backend = infer_backend(v.coeffs)
    half = backend.scalar(Rational(1, 2))
    hr3 = backend.sqrt3() * half
    coeffs = [-half]
    for c in v.coeffs[1:]:
        coeffs.append(hr3 * c if c else 0)
    return Octonion(coeffs)


# --- parsing / formatting ---------------------------------------------------

def format_octonion(x: Octonion) -> str:
    return "[" + ", ".join(format_scalar(c) for c in x.coeffs) + "]"


def parse_octonion(text: str, backend) -> Octonion:
    """Parse "[c1, ..., c8]" with scalar literals in the backend's format."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError("octonion literal must be bracketed: [c1, ..., c8]")
    parts = t[1:-1].split(",")
    if len(parts) != 8:
        raise ParseError(f"octonion literal needs 8 entries, got {len(parts)}")
    return Octonion(tuple(backend.parse(p) for p in parts))


# --- random sampling --------------------------------------------------------
#
# Exact-backend points on spheres come from inverse stereographic projection
# of small random rational vectors, so they are exactly unit-norm rationals.

def _random_rational(rng, lim: int = 4):
    return Rational(rng.randint(-lim, lim), rng.randint(1, lim))


def _rational_unit_vector(rng, dim: int):
    u = [_random_rational(rng) for _ in range(dim - 1)]
    n = 0
    for c in u:
        n = n + c * c
    den = invert(n + 1)
    return tuple([(n - 1) * den] + [2 * c * den for c in u])


def _float_unit_vector(rng, dim: int, backend):
    while True:
        u = [rng.gauss(0.0, 1.0) for _ in range(dim)]
        n = sum(c * c for c in u) ** 0.5
        if n > 1e-6:
            return tuple(backend.scalar(c / n) for c in u)


def random_unit_octonion(rng, backend) -> Octonion:
    if backend.exact:
        return Octonion(_rational_unit_vector(rng, 8))
    return Octonion(_float_unit_vector(rng, 8, backend))


def random_imaginary_unit(rng, backend) -> Octonion:
    if backend.exact:
        return Octonion((0,) + _rational_unit_vector(rng, 7))
    return Octonion((0,) + _float_unit_vector(rng, 7, backend))


def random_octonion(rng, backend) -> Octonion:
    """A generic (not necessarily unit) octonion with small coefficients."""
    if backend.exact:
        return Octonion(tuple(_random_rational(rng) for _ in range(8)))
    return Octonion(tuple(backend.scalar(rng.uniform(-1, 1)) for _ in range(8)))


def random_quaternion(rng, backend) -> Octonion:
    """A random element of the quaternion subalgebra span(e1..e4)."""
    if backend.exact:
        head = tuple(_random_rational(rng) for _ in range(4))
    else:
        head = tuple(backend.scalar(rng.uniform(-1, 1)) for _ in range(4))
    return Octonion(head + (0, 0, 0, 0))
