"""Scalar arithmetic: exact rationals, the quadratic field Q(sqrt 3), and
tolerance-aware floats.

Everything else in this package is generic over these scalar types.  A scalar
supports +, -, *, /, unary minus and ==, with semantics fixed by its backend:
exact equality for ``Rational`` and ``QuadExt``, absolute-tolerance equality
for ``ApproxReal``.  Plain ``int`` values mix freely with every backend, which
lets identity matrices and basis vectors be written with literal 0 and 1.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is optional, Fraction works too
    Rational = Fraction

_RAT_TYPES = (int, Fraction, type(Rational(0)))
_NUM_TYPES = (int, float, Fraction, type(Rational(0)))

SQRT3 = math.sqrt(3.0)


class ParseError(ValueError):
    """Malformed scalar or octonion literal."""


class QuadExt:
    """a + b*sqrt(3) with exact rational coefficients.

    Closed under the field operations; (sqrt 3)**2 reduces to the rational 3,
    and equality is exact coefficient equality.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Rational(a)
        self.b = Rational(b)

    @classmethod
    def _fast(cls, a, b):
        # internal: a, b already normalized rationals
        self = object.__new__(cls)
        self.a = a
        self.b = b
        return self

    def __add__(self, other):
        if isinstance(other, QuadExt):
            return QuadExt._fast(self.a + other.a, self.b + other.b)
        if isinstance(other, _RAT_TYPES):
            return QuadExt._fast(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QuadExt):
            return QuadExt._fast(self.a - other.a, self.b - other.b)
        if isinstance(other, _RAT_TYPES):
            return QuadExt._fast(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RAT_TYPES):
            return QuadExt._fast(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            return QuadExt._fast(
                self.a * other.a + 3 * (self.b * other.b),
                self.a * other.b + self.b * other.a,
            )
        if isinstance(other, _RAT_TYPES):
            return QuadExt._fast(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RAT_TYPES):
            other = QuadExt(other)
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RAT_TYPES):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return QuadExt._fast(-self.a, -self.b)

    def inverse(self) -> "QuadExt":
        # a^2 = 3 b^2 has no rational solution besides a = b = 0, so the
        # field norm vanishes exactly on the zero element.
        n = self.a * self.a - 3 * (self.b * self.b)
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        return QuadExt._fast(self.a / n, -self.b / n)

    def conjugate(self) -> "QuadExt":
        """Galois conjugate a - b*sqrt(3)."""
        return QuadExt._fast(self.a, -self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _RAT_TYPES):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT3

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


class ApproxReal:
    """64-bit float compared with an absolute tolerance.

    Tolerances propagate through arithmetic as the max of the operands', so
    every comparison downstream of a computation stays at the tolerance its
    inputs were built with.  All quantities in this package are O(1) (inputs
    are unit vectors), which is why an absolute tolerance suffices.
    """

    __slots__ = ("value", "eps")

    def __init__(self, value, eps: float = 1e-9):
        if eps <= 0:
            raise ValueError("tolerance must be positive")
        self.value = float(value)
        self.eps = eps

    @classmethod
    def _fast(cls, value: float, eps: float):
        self = object.__new__(cls)
        self.value = value
        self.eps = eps
        return self

    def __add__(self, other):
        if type(other) is ApproxReal:
            return ApproxReal._fast(self.value + other.value, max(self.eps, other.eps))
        if isinstance(other, _NUM_TYPES):
            # float(other) first: float op mpq would escape to gmpy2's mpfr
            return ApproxReal._fast(self.value + float(other), self.eps)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is ApproxReal:
            return ApproxReal._fast(self.value - other.value, max(self.eps, other.eps))
        if isinstance(other, _NUM_TYPES):
            return ApproxReal._fast(self.value - float(other), self.eps)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _NUM_TYPES):
            return ApproxReal._fast(float(other) - self.value, self.eps)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is ApproxReal:
            return ApproxReal._fast(self.value * other.value, max(self.eps, other.eps))
        if isinstance(other, _NUM_TYPES):
            return ApproxReal._fast(self.value * float(other), self.eps)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        eps = max(self.eps, o.eps)
        if abs(o.value) <= eps:
            raise ZeroDivisionError("divisor indistinguishable from zero")
        return ApproxReal._fast(self.value / o.value, eps)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def _coerce(self, other):
        if type(other) is ApproxReal:
            return other
        if isinstance(other, _NUM_TYPES):
            return ApproxReal._fast(float(other), self.eps)
        return None

    def __neg__(self):
        return ApproxReal._fast(-self.value, self.eps)

    def __abs__(self):
        return ApproxReal._fast(abs(self.value), self.eps)

    def inverse(self) -> "ApproxReal":
        if abs(self.value) <= self.eps:
            raise ZeroDivisionError("divisor indistinguishable from zero")
        return ApproxReal._fast(1.0 / self.value, self.eps)

    def __eq__(self, other):
        if type(other) is ApproxReal:
            return abs(self.value - other.value) <= max(self.eps, other.eps)
        if isinstance(other, _NUM_TYPES):
            return abs(self.value - float(other)) <= self.eps
        return NotImplemented

    def __bool__(self):
        # Exact zero only; truthiness is used to skip known-zero terms in
        # product loops, which must not depend on the tolerance.
        return self.value != 0.0

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"ApproxReal({self.value!r}, eps={self.eps:g})"

    def __str__(self):
        return repr(self.value)


def invert(x):
    """Multiplicative inverse of any scalar, staying in its backend."""
    if isinstance(x, (QuadExt, ApproxReal)):
        return x.inverse()
    if type(x) is int:
        if x == 0:
            raise ZeroDivisionError("division by zero")
        return Rational(1, x)
    if x == 0:
        raise ZeroDivisionError("division by zero")
    return 1 / x


def is_exact_zero(x) -> bool:
    """True when x is the exact zero of its backend (never tolerance-based)."""
    return not x


def embed_float(x, eps: float = 1e-9) -> ApproxReal:
    """Map any scalar to the float backend (exact values to nearest double)."""
    return ApproxReal(float(x), eps)


def format_scalar(x) -> str:
    """Text form: "p/q" for rationals, "p/q+r/s*r3" for Q(sqrt 3), repr for floats."""
    if isinstance(x, ApproxReal):
        return repr(x.value)
    if isinstance(x, QuadExt):
        if not x.b:
            return str(x.a)
        r3 = f"{x.b}*r3" if x.b > 0 else f"-{-x.b}*r3"
        if not x.a:
            return r3
        sep = "+" if x.b > 0 else ""
        return f"{x.a}{sep}{r3}"
    if isinstance(x, float):
        return repr(x)
    return str(x)


_TERM = re.compile(
    r"([+-]?)(?:(\d+(?:\.\d*)?|\.\d+|\d+/\d+)(?:\*(r3))?|(r3))$"
)


def _parse_exact(text: str):
    """Parse "p/q", decimals, and "a+b*r3" forms into Rational or QuadExt."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty scalar literal")
    a = Rational(0)
    b = Rational(0)
    for part in re.split(r"(?=[+-])", s):
        if not part or part in "+-":
            if part:
                raise ParseError(f"bad scalar literal {text!r}")
            continue
        m = _TERM.match(part)
        if m is None or m.end() != len(part):
            raise ParseError(f"bad scalar literal {text!r}")
        sign, coef, r3a, r3b = m.groups()
        val = Rational(Fraction(coef)) if coef else Rational(1)
        if sign == "-":
            val = -val
        if r3a or r3b:
            b += val
        else:
            a += val
    return QuadExt(a, b) if b else a


class ExactBackend:
    """Produces exact scalars: Rational values, or QuadExt once sqrt 3 enters."""

    name = "exact"
    exact = True
    eps = 0.0

    def scalar(self, x):
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return Rational(x)

    def sqrt3(self):
        return QuadExt(0, 1)

    def parse(self, text: str):
        return _parse_exact(text)

    def __repr__(self):
        return "ExactBackend()"


class FloatBackend:
    """Produces ApproxReal scalars sharing one comparison tolerance."""

    name = "float"
    exact = False

    def __init__(self, eps: float = 1e-9):
        if eps <= 0:
            raise ValueError("tolerance must be positive")
        self.eps = float(eps)

    def scalar(self, x):
        if isinstance(x, ApproxReal):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return ApproxReal(float(x), self.eps)

    def sqrt3(self):
        return ApproxReal(SQRT3, self.eps)

    def parse(self, text: str):
        try:
            return ApproxReal(float(text), self.eps)
        except ValueError:
            return ApproxReal(float(_parse_exact(text)), self.eps)

    def __repr__(self):
        return f"FloatBackend(eps={self.eps:g})"


EXACT = ExactBackend()


def get_backend(name: str, eps: float = 1e-9):
    if name == "exact":
        return EXACT
    if name == "float":
        return FloatBackend(eps)
    raise ValueError(f"unknown backend {name!r}")


def infer_backend(values, default=EXACT):
    """Pick the backend matching a batch of scalar values (ints stay exact)."""
    for v in values:
        if isinstance(v, ApproxReal):
            return FloatBackend(v.eps)
    return default
