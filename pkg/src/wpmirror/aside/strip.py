"""Exact planar strip model of the vanishing cycles for two weights.

Each curve lives in the strip 0 <= Re(z) <= 1 with vertical period 4(l-1)
and consists of two straight segments joined by a half-circle in the
Re(z) <= 0 half-plane.  All coordinates are Gaussian integers or exact
rationals; Maslov degrees are computed as rational multiples of pi that
must cancel to integers exactly.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from ..bside import BigradedHom
from ..weights import ExteriorBasisElement


def _require_strip_weights(w):
    if w.n != 1:
        raise ValueError("the strip model needs exactly two weights")
    if w.a[0] > w.a[1]:
        raise ValueError("strip model expects a0 <= a1; normalize the weights first")


class PointKind(enum.Enum):
    ARC = "arc"          # half-circle / half-circle crossing
    SEG_PM = "seg_pm"    # s_{j+} with s_{k-}
    SEG_MP = "seg_mp"    # s_{k+} with s_{j-}


@dataclass(frozen=True)
class StripCurve:
    """One vanishing cycle in strip coordinates (Gaussian-integer tuples)."""

    index: int
    p_plus: tuple
    p_minus: tuple
    q_plus: tuple
    q_minus: tuple
    arc_center: tuple
    arc_radius: int

    def slope_plus(self, w):
        """Slope of the segment from p_plus to q_plus."""
        return 2 * self.index - 2 * w.l + 4 * w.a[0]

    def slope_minus(self):
        """Slope of the segment from p_minus to q_minus."""
        return 2 * self.index


def build_curves(w):
    """The l-1 vanishing cycles of the strip model, exact coordinates."""
    _require_strip_weights(w)
    l = w.l
    curves = []
    for k in range(l - 1):
        p_plus = (0, 2 * k + 1)
        p_minus = (0, 2 * k + 1 - 2 * (l - 1))
        q_minus = (1, 4 * k + 1 - 2 * (l - 1))
        q_plus = (1, q_minus[1] + 4 * w.a[0] - 2)
        curves.append(StripCurve(
            index=k,
            p_plus=p_plus,
            p_minus=p_minus,
            q_plus=q_plus,
            q_minus=q_minus,
            arc_center=(0, p_minus[1] + (l - 1)),
            arc_radius=l - 1,
        ))
    return curves


def shift_period(curve, w, steps=1):
    """The curve translated by `steps` vertical periods 4(l-1)."""
    dy = 4 * (w.l - 1) * steps

    def sh(p):
        return (p[0], p[1] + dy)

    return StripCurve(
        index=curve.index,
        p_plus=sh(curve.p_plus),
        p_minus=sh(curve.p_minus),
        q_plus=sh(curve.q_plus),
        q_minus=sh(curve.q_minus),
        arc_center=sh(curve.arc_center),
        arc_radius=curve.arc_radius,
    )


@dataclass(frozen=True)
class IntersectionPoint:
    """A labeled intersection of two curves (indices j < k).

    Segment crossings carry an exact x-coordinate in (0, 1) and the integer
    period shift that realizes them; half-circle crossings are symbolic.
    """

    j: int
    k: int
    kind: PointKind
    x: object  # Fraction for segment kinds, None for ARC
    d: object  # period shift for segment kinds, None for ARC
    degree: int
    label: ExteriorBasisElement

    @property
    def pair(self):
        return (self.j, self.k)


def _seg_pm_x(w, j, k):
    """x-coordinate of s_{j+} crossing s_{k-}, shift d = 0."""
    return Fraction((j - k) + (w.l - 1), (k - j) + w.l - 2 * w.a[0])


def _seg_mp_x(w, j, k):
    """x-coordinate of s_{k+} crossing s_{j-}, shift d = -1."""
    return Fraction((k - j) - (w.l - 1), (j - k) + w.l - 2 * w.a[0])


def intersections(w, j, k):
    """All intersection points of curves j < k, one period representative each.

    The half-circles always cross once; the segment crossings exist exactly
    when the index gap admits them (a0 <= k-j, resp. a1 <= k-j).
    """
    _require_strip_weights(w)
    if not 0 <= j < k <= w.l - 2:
        raise ValueError(f"need 0 <= j < k <= l-2, got j={j}, k={k}")
    points = [IntersectionPoint(j, k, PointKind.ARC, None, None, 0,
                                ExteriorBasisElement(()))]
    if w.a[0] <= k - j:
        x = _seg_pm_x(w, j, k)
        assert 0 < x < 1, f"seg_pm x={x} outside (0,1)"
        points.append(IntersectionPoint(j, k, PointKind.SEG_PM, x, 0, 1,
                                        ExteriorBasisElement((0,))))
    if w.a[1] <= k - j:
        x = _seg_mp_x(w, j, k)
        assert 0 < x < 1, f"seg_mp x={x} outside (0,1)"
        points.append(IntersectionPoint(j, k, PointKind.SEG_MP, x, -1, 1,
                                        ExteriorBasisElement((1,))))
    return points


def _phi_plus(w, i):
    """Boundary grading at the upper endpoint of curve i, in units of pi."""
    q_plus_im = 4 * i + 1 - 2 * (w.l - 1) + 4 * w.a[0] - 2
    return 1 - Fraction(q_plus_im, 2 * (w.l - 1))


def _phi_minus(w, i):
    """Boundary grading at the lower endpoint of curve i, in units of pi."""
    q_minus_im = 4 * i + 1 - 2 * (w.l - 1)
    return Fraction(-q_minus_im, 2 * (w.l - 1))


def _xi_semicircle(w, r):
    """Angle swept along the boundary semicircle of height parameter r,
    in units of pi."""
    return 1 - Fraction(r, w.l - 1)


def maslov_degree(w, p):
    """Maslov degree of an intersection point via the exact angle pipeline.

    Every case-specific path decomposition is evaluated as a rational
    multiple of pi; the result must cancel to an integer exactly.
    """
    _require_strip_weights(w)
    j, k = p.j, p.k
    # Path endpoints: the marked boundary points of curves k (upper role)
    # and j (lower role).
    q_plus_im_k = 4 * k + 1 - 2 * (w.l - 1) + 4 * w.a[0] - 2
    q_minus_im_j = 4 * j + 1 - 2 * (w.l - 1)
    phi_k = _phi_plus(w, k)
    phi_j = _phi_minus(w, j)
    if p.kind is PointKind.ARC:
        # Boundary semicircle traversed backwards, no extra loop.
        r = Fraction(q_plus_im_k - q_minus_im_j, 2)
        xi = -_xi_semicircle(w, r)
        orientation = 0
    elif p.kind is PointKind.SEG_PM:
        # Same semicircle plus a full backwards loop around the boundary.
        r = Fraction(q_plus_im_k - q_minus_im_j, 2)
        xi = -_xi_semicircle(w, r) - 2
        orientation = 1
    elif p.kind is PointKind.SEG_MP:
        # Straight chord between the endpoint gradings, then a backwards loop.
        xi = (phi_j - phi_k) - 2
        orientation = 1
    else:  # pragma: no cover
        raise ValueError(f"unknown point kind {p.kind}")
    mu = -(xi + orientation + phi_k - phi_j)
    if mu.denominator != 1:
        raise ArithmeticError(
            f"Maslov pipeline failed to cancel: mu = {mu} pi for {p}"
        )
    return int(mu)


def hom_space(w, j, k):
    """The morphism space from curve j to curve k: labeled intersection
    points graded by Maslov degree; identity for j = k, zero for j > k."""
    _require_strip_weights(w)
    if j == k:
        return BigradedHom(j, k, ((0, ExteriorBasisElement(())),))
    if j > k:
        return BigradedHom(j, k, ())
    basis = [(maslov_degree(w, p), p.label) for p in intersections(w, j, k)]
    basis.sort(key=lambda t: (t[0], t[1].subset))
    return BigradedHom(j, k, tuple(basis))
