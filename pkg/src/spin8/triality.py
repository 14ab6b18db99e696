"""Rotation triples with the triality property, and their outer symmetries.

A triple (A, B, C) of special orthogonal 8x8 matrices is *verified* when

    B(x * y) = (C x) * (A y)          for all basis pairs x, y,

which pins the group of such triples down as the double cover of SO(8) acting
through three inequivalent 8-dimensional representations at once.  Every
constructor in this module re-runs the 64-basis-pair verification, including
products, so a verification failure after a group operation always means an
implementation bug rather than bad input.

The two outer symmetries are

    tau:   (A, B, C) -> (kBk, kCk, A)        (order 3)
    sigma: (A, B, C) -> (B, A, kCk)          (order 2)

with k the matrix of octonion conjugation; together they generate an S3 whose
common fixed group is the diagonal triples (D, D, D) with D an octonion
automorphism.
"""

from __future__ import annotations

from .linalg import Matrix, NotOrthogonal, _approx_eps, is_special_orthogonal
from .octonion import (
    Octonion,
    TABLE,
    ensure_unit,
    left_translation,
    mul_coeffs,
    right_translation,
)


class TrialityViolated(ValueError):
    """The three-rotation compatibility identity failed on a basis pair."""

    def __init__(self, pair, residual):
        self.pair = pair
        self.residual = residual
        i, j = pair
        super().__init__(
            f"B(e{i+1}*e{j+1}) != (C e{i+1})*(A e{j+1}), residual {residual:g}"
        )


def _columns(m: Matrix):
    return list(zip(*m.rows))


def _float_cols(m: Matrix):
    return [[float(e) for e in col] for col in zip(*m.rows)]


def _fmul(x, y):
    # octonion product on raw float 8-vectors
    out = [0.0] * 8
    for xi, row in zip(x, TABLE):
        if xi:
            for yj, (s, k) in zip(y, row):
                if yj:
                    out[k] = (out[k] + xi * yj) if s > 0 else (out[k] - xi * yj)
    return out


def _triality_holds(acols, bcols, ccols) -> bool:
    for i in range(8):
        ci = ccols[i]
        row = TABLE[i]
        for j in range(8):
            prod = mul_coeffs(ci, acols[j])
            s, k = row[j]
            bk = bcols[k]
            if s > 0:
                for a, b in zip(bk, prod):
                    if not (a == b):
                        return False
            else:
                for a, b in zip(bk, prod):
                    if not (a == -b):
                        return False
    return True


def _triality_defect(acols, bcols, ccols):
    """Worst float deviation over the 64 basis pairs, with its argmax pair."""
    worst, at = 0.0, (0, 0)
    for i in range(8):
        ci = ccols[i]
        row = TABLE[i]
        for j in range(8):
            prod = _fmul(ci, acols[j])
            s, k = row[j]
            bk = bcols[k]
            if s > 0:
                r = max(abs(a - b) for a, b in zip(bk, prod))
            else:
                r = max(abs(a + b) for a, b in zip(bk, prod))
            if r > worst:
                worst, at = r, (i, j)
    return at, worst


def triality_residual(a: Matrix, b: Matrix, c: Matrix) -> float:
    """Largest float deviation of B(xy) - (Cx)(Ay) over the 64 basis pairs."""
    return _triality_defect(_float_cols(a), _float_cols(b), _float_cols(c))[1]


class TrialityTriple:
    """A verified triple (A, B, C); the concrete model of a group element."""

    # _inv/_tau/_sigma memoize *freshly verified* images, forward only: a
    # cached value is never fabricated from the cache of its own inverse
    # image, so involution/order tests still exercise real constructions.
    __slots__ = ("A", "B", "C", "_inv", "_tau", "_sigma")
    _cached_identity = None

    def __init__(self, a: Matrix, b: Matrix, c: Matrix):
        for name, m in (("A", a), ("B", b), ("C", c)):
            if m.n != 8 or not is_special_orthogonal(m):
                raise NotOrthogonal(f"component {name} is not in SO(8)")
        eps = max(_approx_eps(a.rows), _approx_eps(b.rows), _approx_eps(c.rows))
        if eps:
            pair, res = _triality_defect(
                _float_cols(a), _float_cols(b), _float_cols(c)
            )
            if res > eps:
                raise TrialityViolated(pair, res)
        else:
            acols, bcols, ccols = _columns(a), _columns(b), _columns(c)
            if not _triality_holds(acols, bcols, ccols):
                pair, res = _triality_defect(
                    _float_cols(a), _float_cols(b), _float_cols(c)
                )
                raise TrialityViolated(pair, res)
        self.A = a
        self.B = b
        self.C = c
        self._inv = None
        self._tau = None
        self._sigma = None

    @classmethod
    def identity(cls) -> "TrialityTriple":
        if cls._cached_identity is None:
            i8 = Matrix.identity(8)
            cls._cached_identity = cls(i8, i8, i8)
        return cls._cached_identity

    def __mul__(self, other):
        if not isinstance(other, TrialityTriple):
            return NotImplemented
        return TrialityTriple(self.A * other.A, self.B * other.B, self.C * other.C)

    def inverse(self) -> "TrialityTriple":
        if self._inv is None:
            self._inv = TrialityTriple(
                self.A.transpose(), self.B.transpose(), self.C.transpose()
            )
        return self._inv

    def __eq__(self, other):
        if not isinstance(other, TrialityTriple):
            return NotImplemented
        return self.A == other.A and self.B == other.B and self.C == other.C

    def triality_residual(self) -> float:
        return triality_residual(self.A, self.B, self.C)

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json(), "C": self.C.to_json()}

    @classmethod
    def from_json(cls, obj: dict, backend) -> "TrialityTriple":
        """Parse {"A": mat, "B": mat, "C": mat}; the triple is re-verified."""
        return cls(
            Matrix.from_json(obj["A"], backend),
            Matrix.from_json(obj["B"], backend),
            Matrix.from_json(obj["C"], backend),
        )

    def __repr__(self):
        return "<TrialityTriple>"


def _kconj(m: Matrix) -> Matrix:
    # Conjugation by k = diag(1, -1, ..., -1): negate entries with exactly one
    # index in the e1 slot.
    rows = [tuple(m.rows[0][:1]) + tuple(-e for e in m.rows[0][1:])]
    for row in m.rows[1:]:
        rows.append((-row[0],) + tuple(row[1:]))
    return Matrix(rows)


def kappa_conjugate(d: Matrix) -> Matrix:
    """k d k for the octonion-conjugation matrix k; preserves SO(8)."""
    if not is_special_orthogonal(d):
        raise NotOrthogonal("kappa conjugation is used on SO(8) elements here")
    return _kconj(d)


def apply_tau(g: TrialityTriple) -> TrialityTriple:
    """The order-3 outer symmetry (A, B, C) -> (kBk, kCk, A)."""
    if g._tau is None:
        g._tau = TrialityTriple(_kconj(g.B), _kconj(g.C), g.A)
    return g._tau


def apply_sigma(g: TrialityTriple) -> TrialityTriple:
    """The outer involution (A, B, C) -> (B, A, kCk)."""
    if g._sigma is None:
        g._sigma = TrialityTriple(g.B, g.A, _kconj(g.C))
    return g._sigma


class GammaElement:
    """Element of the S3 generated by tau (order 3) and sigma (order 2).

    Stored in the normal form sigma^s tau^t with s in {0,1}, t in {0,1,2};
    as a map it is "tau t times, then sigma s times".  Words read "st" =
    sigma-after-tau.
    """

    __slots__ = ("s", "t")

    _WORDS = {"e": (0, 0), "t": (0, 1), "t2": (0, 2),
              "s": (1, 0), "st": (1, 1), "st2": (1, 2)}

    def __init__(self, s: int = 0, t: int = 0):
        self.s = s % 2
        self.t = t % 3

    @classmethod
    def identity(cls) -> "GammaElement":
        return cls(0, 0)

    @classmethod
    def tau(cls) -> "GammaElement":
        return cls(0, 1)

    @classmethod
    def sigma(cls) -> "GammaElement":
        return cls(1, 0)

    @classmethod
    def parse(cls, word: str) -> "GammaElement":
        try:
            return cls(*cls._WORDS[word.strip()])
        except KeyError:
            raise ValueError(f"unknown word {word!r}; use e|t|t2|s|st|st2") from None

    @classmethod
    def all_elements(cls) -> list["GammaElement"]:
        return [cls(*st) for st in cls._WORDS.values()]

    def word(self) -> str:
        return {v: k for k, v in self._WORDS.items()}[(self.s, self.t)]

    def __mul__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        # sigma^s1 tau^t1 sigma^s2 tau^t2, rewritten with tau sigma = sigma tau^-1
        if other.s:
            return GammaElement(self.s + 1, other.t - self.t)
        return GammaElement(self.s, self.t + other.t)

    def inverse(self) -> "GammaElement":
        # reflections are involutions; rotations invert the tau power
        return GammaElement(self.s, self.t if self.s else -self.t)

    def is_identity(self) -> bool:
        return self.s == 0 and self.t == 0

    def __eq__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self.s == other.s and self.t == other.t

    def __hash__(self):
        return hash((self.s, self.t))

    def __repr__(self):
        return f"GammaElement({self.word()!r})"


def apply_gamma(w: GammaElement, g: TrialityTriple) -> TrialityTriple:
    """Act by the word w on a triple (tau first, then sigma)."""
    for _ in range(w.t):
        g = apply_tau(g)
    for _ in range(w.s):
        g = apply_sigma(g)
    return g


class SemidirectElement:
    """Pair (g, w) of a triple and an S3 word, the isometry g after w.

    Multiplication follows w g = w(g) w:  (g, w)(h, u) = (g * w(h), w u).
    """

    __slots__ = ("spin", "gamma")

    def __init__(self, spin: TrialityTriple, gamma: GammaElement):
        self.spin = spin
        self.gamma = gamma

    @classmethod
    def identity(cls) -> "SemidirectElement":
        return cls(TrialityTriple.identity(), GammaElement.identity())

    def __mul__(self, other):
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return SemidirectElement(
            self.spin * apply_gamma(self.gamma, other.spin),
            self.gamma * other.gamma,
        )

    def inverse(self) -> "SemidirectElement":
        winv = self.gamma.inverse()
        return SemidirectElement(apply_gamma(winv, self.spin.inverse()), winv)

    def __eq__(self, other):
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return self.gamma == other.gamma and self.spin == other.spin

    def __repr__(self):
        return f"<SemidirectElement gamma={self.gamma.word()!r}>"


def spin_from_unit(s: Octonion) -> TrialityTriple:
    """The verified triple (L(s), L(conj s), x -> conj(s) x conj(s)) for unit s."""
    ensure_unit(s)
    sb = s.conj().coeffs
    cols = []
    for j in range(8):
        ej = [0] * 8
        ej[j] = 1
        cols.append(mul_coeffs(sb, mul_coeffs(tuple(ej), sb)))
    c = Matrix(tuple(tuple(cols[j][i] for j in range(8)) for i in range(8)))
    return TrialityTriple(
        left_translation(s), left_translation(Octonion(sb)), c
    )


def triple_from_pair(a: Matrix, b: Matrix) -> TrialityTriple:
    """Recover the third rotation from a pair via C(x) = B(x) * conj(A(e1)).

    The recovery is only a candidate; the constructor's full verification is
    what decides membership, so a pair outside the group raises
    TrialityViolated (or NotOrthogonal).
    """
    a1 = Octonion(a.column(0))
    c = right_translation(a1.conj()) * b
    return TrialityTriple(a, b, c)


def is_g2(g: TrialityTriple) -> bool:
    """True iff the triple is diagonal, i.e. an octonion automorphism.

    Checks A = B = C and then A(xy) = A(x)A(y) on all 64 basis pairs; for a
    verified triple the second condition is implied by the first, so it acts
    as a consistency cross-check.
    """
    if not (g.A == g.B and g.A == g.C):
        return False
    acols = _columns(g.A)
    for i in range(8):
        row = TABLE[i]
        for j in range(8):
            prod = mul_coeffs(acols[i], acols[j])
            s, k = row[j]
            ak = acols[k]
            if s > 0:
                if not all(a == b for a, b in zip(ak, prod)):
                    return False
            else:
                if not all(a == -b for a, b in zip(ak, prod)):
                    return False
    return True
