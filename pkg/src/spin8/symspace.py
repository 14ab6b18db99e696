"""The sphere-pair model S7 x S7 of the quotient by the automorphism group.

A verified triple (A, B, C) acts by (x, y) -> (A x, B y); the orbit map
g -> g(o) at the base point o = (1, 1) identifies the quotient with the
product of unit spheres.  The outer S3 descends to

    tau(x, y)   = (conj y, x * conj y)
    sigma(x, y) = (y, x)

Fix(tau) is {o} together with the 6-sphere Y of pairs (s, conj s) where s
runs over the nontrivial cube roots of unity; Fix(sigma) is the diagonal, and
the two intersect only in o.  The point-symmetry groups transported from o
make Y the polar of o, and the three-point configuration {o, (s, conj s),
(conj s, s)} the unique maximal antipodal set through o for the order-3
structure.

(The abstract construction also assumes a right-invariant metric upstairs;
that hypothesis has no computational counterpart here and only the group
actions are modelled.)
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .octonion import (
    Octonion,
    cube_root_of_unity,
    ensure_unit,
    format_octonion,
    parse_octonion,
    random_imaginary_unit,
    to_backend,
)
from .scalars import infer_backend
from .triality import (
    GammaElement,
    SemidirectElement,
    TrialityTriple,
    apply_gamma,
    spin_from_unit,
)

_TAU = GammaElement.tau()
_TAU2 = GammaElement(0, 2)


class AntipodalityViolated(RuntimeError):
    """An antipodality certificate failed; indicates an implementation bug."""


class SpherePoint:
    """A pair of unit octonions (validated at construction)."""

    __slots__ = ("x", "y")

    def __init__(self, x: Octonion, y: Octonion):
        self.x = ensure_unit(x)
        self.y = ensure_unit(y)

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def is_diagonal(self) -> bool:
        return self.x == self.y

    def to_json(self) -> dict:
        return {"x": format_octonion(self.x), "y": format_octonion(self.y)}

    @classmethod
    def from_json(cls, obj: dict, backend) -> "SpherePoint":
        return cls(
            parse_octonion(obj["x"], backend), parse_octonion(obj["y"], backend)
        )

    def __repr__(self):
        return f"SpherePoint({format_octonion(self.x)}, {format_octonion(self.y)})"


def base_point() -> SpherePoint:
    return SpherePoint(Octonion.one(), Octonion.one())


def act(g: TrialityTriple, pt: SpherePoint) -> SpherePoint:
    return SpherePoint(
        Octonion(g.A.apply(pt.x.coeffs)), Octonion(g.B.apply(pt.y.coeffs))
    )


def tau_sphere(pt: SpherePoint) -> SpherePoint:
    yb = pt.y.conj()
    return SpherePoint(yb, pt.x * yb)


def sigma_sphere(pt: SpherePoint) -> SpherePoint:
    return SpherePoint(pt.y, pt.x)


def gamma_sphere(w: GammaElement, pt: SpherePoint) -> SpherePoint:
    for _ in range(w.t):
        pt = tau_sphere(pt)
    for _ in range(w.s):
        pt = sigma_sphere(pt)
    return pt


def act_semidirect(el: SemidirectElement, pt: SpherePoint) -> SpherePoint:
    """The isometry (g, w): first the word, then the triple."""
    return act(el.spin, gamma_sphere(el.gamma, pt))


def fix_tau_point(v: Octonion) -> SpherePoint:
    """The point (s, conj s) of Y parametrized by a unit imaginary v."""
    s = cube_root_of_unity(v)
    return SpherePoint(s, s.conj())


def is_fixed_by_tau(pt: SpherePoint) -> bool:
    """Direct evaluation; tau_fixed_characterization is the independent test."""
    return tau_sphere(pt) == pt


def tau_fixed_characterization(pt: SpherePoint) -> bool:
    """conj(x) = y = x^2, equivalent to tau-fixedness point by point."""
    return pt.y == pt.x.conj() and pt.y == pt.x * pt.x


def phi_x(witness: TrialityTriple, w: GammaElement) -> SemidirectElement:
    """Point-symmetry homomorphism at x = witness(o): w -> (witness * w(witness^-1), w).

    Independent of the witness up to right multiplication by automorphism
    triples, since the words fix those pointwise.
    """
    return SemidirectElement(witness * apply_gamma(w, witness.inverse()), w)


def kai_sides(
    gx: TrialityTriple,
    gy: TrialityTriple,
    gamma: GammaElement,
    delta: GammaElement,
) -> tuple[SemidirectElement, SemidirectElement]:
    """Both sides of the conjugation identity for point symmetries.

    Left: gamma_x delta_y gamma_x^-1.  Right: the symmetry of the image point
    gamma_x(y) at the conjugated word, with the image's transporter read off
    the semidirect product: (k, gamma)(gy, e) = (k * gamma(gy), gamma) and the
    word part fixes o, so k * gamma(gy) maps o to gamma_x(y).
    """
    gamma_x = phi_x(gx, gamma)
    delta_y = phi_x(gy, delta)
    lhs = gamma_x * delta_y * gamma_x.inverse()
    gz = gamma_x.spin * apply_gamma(gamma, gy)
    rhs = phi_x(gz, gamma * delta * gamma.inverse())
    return lhs, rhs


def kai_check(gx, gy, gamma, delta, points) -> bool:
    """Compare both sides of the conjugation identity as maps on sample points."""
    lhs, rhs = kai_sides(gx, gy, gamma, delta)
    return all(act_semidirect(lhs, p) == act_semidirect(rhs, p) for p in points)


class PolarSphere:
    """The polar 6-sphere of a basepoint: the image of Y under a transporter."""

    __slots__ = ("basepoint", "witness")

    def __init__(self, witness: TrialityTriple):
        self.witness = witness
        self.basepoint = act(witness, base_point())

    def point_at(self, v: Octonion) -> SpherePoint:
        return act(self.witness, fix_tau_point(v))

    def point_group_fixes(self, z: SpherePoint) -> bool:
        """Whether the transported order-3 symmetry group at the basepoint fixes z."""
        for w in (_TAU, _TAU2):
            if act_semidirect(phi_x(self.witness, w), z) != z:
                return False
        return True


@dataclass
class AntipodalSet:
    points: list
    v: Octonion


def antipodal_set(v: Octonion) -> AntipodalSet:
    """The three-point set {o, (s, conj s), (conj s, s)} with certificates.

    Verifies that the symmetry group at each of the three points (transported
    from o by the identity, L(s)-type, and L(conj s)-type triples) fixes every
    point of the set.  A failed certificate raises; it must never fire.
    """
    s = cube_root_of_unity(v)
    o = base_point()
    p = SpherePoint(s, s.conj())
    q = SpherePoint(s.conj(), s)
    points = [o, p, q]
    witnesses = [
        TrialityTriple.identity(),
        spin_from_unit(s),
        spin_from_unit(s.conj()),
    ]
    for base, witness in zip(points, witnesses):
        if act(witness, o) != base:
            raise AntipodalityViolated(f"witness does not transport o to {base!r}")
        for w in (_TAU, _TAU2):
            el = phi_x(witness, w)
            for target in points:
                if act_semidirect(el, target) != target:
                    raise AntipodalityViolated(
                        f"symmetry at {base!r} moves {target!r}"
                    )
    return AntipodalSet(points, v)


@dataclass
class ScanRow:
    t: Octonion
    candidate: SpherePoint
    accepted: bool
    residual: float


@dataclass
class ScanReport:
    v: Octonion
    rows: list

    def accepted_candidates(self) -> list:
        return [r.candidate for r in self.rows if r.accepted]

    def rejected_count(self) -> int:
        return sum(1 for r in self.rows if not r.accepted)


def maximality_scan(v: Octonion, trials: int, rng) -> ScanReport:
    """Scan for points of Y that could extend {o, p, q}.

    Candidates are (s*t, conj(s)*conj(t)) for cube roots of unity t: the three
    closed-form ones (t = 1, s, conj s from w = v, -v) plus cube roots built
    from `trials` random unit imaginaries.  A candidate extends the set iff
    conj(s)*conj(t) = conj(s*t), i.e. iff s and t commute, which forces the
    candidate back into {p, q, o}; the report records every decision.

    `rng` may be a random.Random or a plain integer seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if isinstance(rng, int):
        rng = random.Random(rng)
    s = cube_root_of_unity(v)
    backend = infer_backend(s.coeffs)
    one = to_backend(Octonion.one(), backend)
    candidates = [one, cube_root_of_unity(v), cube_root_of_unity(-v)]
    candidates += [
        cube_root_of_unity(random_imaginary_unit(rng, backend))
        for _ in range(trials)
    ]
    rows = []
    for t in candidates:
        st = s * t
        pair = s.conj() * t.conj()
        want = st.conj()
        residual = max(
            abs(float(a) - float(b)) for a, b in zip(pair.coeffs, want.coeffs)
        )
        rows.append(
            ScanRow(
                t=t,
                candidate=SpherePoint(st, pair),
                accepted=(pair == want),
                residual=residual,
            )
        )
    return ScanReport(v, rows)


def polar_intersection_check(v: Octonion) -> bool:
    """Pairwise intersections of the three polar 6-spheres land in {o, p, q}.

    Checks o, q in Fix of the group at p; o, p at q; p, q at o; and that p, q
    are antipodal in Y in the parameter sense q = fix_tau_point(-v).
    """
    s = cube_root_of_unity(v)
    o = base_point()
    p = SpherePoint(s, s.conj())
    q = SpherePoint(s.conj(), s)
    polar_o = PolarSphere(TrialityTriple.identity())
    polar_p = PolarSphere(spin_from_unit(s))
    polar_q = PolarSphere(spin_from_unit(s.conj()))
    return (
        polar_p.point_group_fixes(o)
        and polar_p.point_group_fixes(q)
        and polar_q.point_group_fixes(o)
        and polar_q.point_group_fixes(p)
        and polar_o.point_group_fixes(p)
        and polar_o.point_group_fixes(q)
        and q == fix_tau_point(-v)
    )
