"""Marked polytopes, bisections, coherence weights, and the numeric
critical-value splitting of deformed potentials.

Geometry stays in dimensions one and two with exact integer/rational
predicates.  The deformation machinery perturbs a Laurent polynomial by
integral weights, tracks its critical values along a decreasing parameter
schedule, and verifies that they split into the critical values of the two
halves of a bisection.
"""

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .weights import LatticePolytope, normalized_volume, _affine_rank, _convex_hull_2d


def _pt(p):
    """Normalize a point to a 1- or 2-tuple of ints."""
    if isinstance(p, int):
        return (p,)
    return tuple(int(x) for x in p)


def _as2(p):
    return p if len(p) == 2 else (p[0], 0)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _contains(poly, p, strict=False):
    """Exact membership of a point in a 1- or 2-dimensional polytope."""
    pts = [_as2(v) for v in poly.vertices]
    q = _as2(p)
    if _affine_rank(pts) <= 1:
        # Interval (possibly embedded in the plane): parametrize along it.
        base = min(pts)
        direction = (max(pts)[0] - base[0], max(pts)[1] - base[1])
        if direction == (0, 0):
            return q == base and not strict
        if _cross(base, max(pts), q) != 0:
            return False
        t = Fraction((q[0] - base[0]) * direction[0] + (q[1] - base[1]) * direction[1],
                     direction[0] ** 2 + direction[1] ** 2)
        return (0 < t < 1) if strict else (0 <= t <= 1)
    hull = _convex_hull_2d(pts)
    for i in range(len(hull)):
        c = _cross(hull[i], hull[(i + 1) % len(hull)], q)
        if c < 0 or (strict and c == 0):
            return False
    return True


@dataclass(frozen=True)
class MarkedPolytope:
    """A polytope with a chosen set of marked lattice points containing its
    vertices."""

    Q: LatticePolytope
    A: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(_pt(p) for p in self.A))

    def violations(self):
        out = []
        hull_pts = set(self._hull_vertices())
        if not hull_pts <= set(self.A):
            out.append(f"vertices {sorted(hull_pts - set(self.A))} not marked")
        for p in self.A:
            if not _contains(self.Q, p):
                out.append(f"marked point {p} outside the polytope")
        return out

    def _hull_vertices(self):
        pts = [_as2(v) for v in self.Q.vertices]
        if _affine_rank(pts) <= 1:
            lo, hi = min(pts), max(pts)
            verts = [lo, hi]
        else:
            verts = _convex_hull_2d(pts)
        if self.Q.ambient_dim == 1:
            return [(v[0],) for v in verts]
        return verts


@dataclass(frozen=True)
class Subdivision:
    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))


@dataclass(frozen=True)
class Bisection:
    cell0: MarkedPolytope
    cell1: MarkedPolytope

    @property
    def subdivision(self):
        return Subdivision((self.cell0, self.cell1))


@dataclass(frozen=True)
class PLWeight:
    """An integral weight on the marked points."""

    values: tuple  # of (point, int), sorted

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((_pt(k), int(v)) for k, v in d.items())))

    def as_dict(self):
        return dict(self.values)

    def __call__(self, p):
        return dict(self.values)[_pt(p)]


@dataclass
class ValidationReport:
    passed: bool
    violations: list = field(default_factory=list)


def _shared_region_1d(c0, c1):
    """Intersection of two intervals, as a (lo, hi) pair or None."""
    pts0 = [_as2(v)[0] for v in c0.Q.vertices]
    pts1 = [_as2(v)[0] for v in c1.Q.vertices]
    lo, hi = max(min(pts0), min(pts1)), min(max(pts0), max(pts1))
    if lo > hi:
        return None
    return (lo, hi)


def _edges(hull):
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def _clip_polygons(c0, c1):
    """Exact intersection of two convex polygons (Sutherland–Hodgman with
    rational vertices); returns the list of intersection vertices."""
    subject = [tuple(map(Fraction, _as2(v))) for v in _convex_hull_2d(
        [_as2(v) for v in c0.Q.vertices])]
    clip = _convex_hull_2d([_as2(v) for v in c1.Q.vertices])
    for a, b in _edges(clip):
        if not subject:
            break
        out = []
        prev = subject[-1]
        for cur in subject:
            side_prev = _cross(a, b, prev)
            side_cur = _cross(a, b, cur)
            if side_cur >= 0:
                if side_prev < 0:
                    out.append(_line_intersect(a, b, prev, cur))
                out.append(cur)
            elif side_prev >= 0:
                out.append(_line_intersect(a, b, prev, cur))
            prev = cur
        # Deduplicate consecutive repeats
        subject = []
        for p in out:
            if not subject or subject[-1] != p:
                subject.append(p)
        if len(subject) > 1 and subject[0] == subject[-1]:
            subject.pop()
    return subject


def _line_intersect(a, b, p, q):
    """Intersection of line ab with segment pq, exact."""
    d1 = (b[0] - a[0], b[1] - a[1])
    d2 = (q[0] - p[0], q[1] - p[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    t = Fraction((p[0] - a[0]) * d2[1] - (p[1] - a[1]) * d2[0], denom)
    return (a[0] + t * d1[0], a[1] + t * d1[1])


def _poly_area2(pts):
    s = 0
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        s += x0 * y1 - x1 * y0
    return abs(s)


def validate_subdivision(s, parent):
    """Check the four subdivision clauses with exact arithmetic:
    full-dimensional cells, union equal to the parent, pairwise common-face
    intersections, and matching marked points on overlaps."""
    report = ValidationReport(passed=True)

    def fail(msg):
        report.passed = False
        report.violations.append(msg)

    for mp in list(s.cells) + [parent]:
        for v in mp.violations():
            fail(v)

    dim = _affine_rank([_as2(v) for v in parent.Q.vertices])
    for idx, cell in enumerate(s.cells):
        if _affine_rank([_as2(v) for v in cell.Q.vertices]) != dim:
            fail(f"cell {idx} is not full-dimensional")
        for v in cell.Q.vertices:
            if not _contains(parent.Q, v):
                fail(f"cell {idx} leaves the parent polytope at {v}")

    if not report.passed:
        return report

    # Union: containment plus additivity of measure (interiors disjoint is
    # implied by the face condition below).
    total = sum(normalized_volume(c.Q) for c in s.cells)
    if total != normalized_volume(parent.Q):
        fail(f"cells cover measure {total}, parent has {normalized_volume(parent.Q)}")

    for (i, ci), (j, cj) in itertools.combinations(enumerate(s.cells), 2):
        if dim == 1:
            shared = _shared_region_1d(ci, cj)
            if shared is None:
                shared_pts = []
            elif shared[0] != shared[1]:
                fail(f"cells {i},{j} overlap on a full interval {shared}")
                continue
            else:
                x = shared[0]
                shared_pts = [(x,) if parent.Q.ambient_dim == 1 else (x, 0)]
                ends_i = [min(_as2(v)[0] for v in ci.Q.vertices),
                          max(_as2(v)[0] for v in ci.Q.vertices)]
                ends_j = [min(_as2(v)[0] for v in cj.Q.vertices),
                          max(_as2(v)[0] for v in cj.Q.vertices)]
                if x not in ends_i or x not in ends_j:
                    fail(f"cells {i},{j} meet at {x}, not a face of both")
        else:
            inter = _clip_polygons(ci, cj)
            if not inter:
                shared_pts = []
            elif _poly_area2(inter) != 0:
                fail(f"cells {i},{j} overlap with positive area")
                continue
            else:
                if not _is_common_face(ci, cj, inter):
                    fail(f"cells {i},{j} intersection is not a common face")
                shared_pts = inter
        # Matching marked points on the overlap.
        region = shared_pts
        mi = {p for p in ci.A if _on_region(p, region)}
        mj = {p for p in cj.A if _on_region(p, region)}
        if mi != mj:
            fail(f"cells {i},{j} mark the shared face differently: {sorted(mi)} vs {sorted(mj)}")
    return report


def _on_region(p, region):
    """Whether a lattice point lies on a shared region given by its exact
    vertices (a point or a segment)."""
    if not region:
        return False
    q = tuple(map(Fraction, _as2(p)))
    if len(region) == 1:
        return q == tuple(map(Fraction, _as2(region[0])))
    a, b = (tuple(map(Fraction, _as2(region[0]))),
            tuple(map(Fraction, _as2(region[-1]))))
    if _cross(a, b, q) != 0:
        return False
    dot = (q[0] - a[0]) * (b[0] - a[0]) + (q[1] - a[1]) * (b[1] - a[1])
    lensq = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return 0 <= dot <= lensq


def _is_common_face(ci, cj, inter):
    """The exact intersection (a point or segment) must be a vertex or a
    full edge of both polygons."""
    def faces(c):
        hull = _convex_hull_2d([_as2(v) for v in c.Q.vertices])
        out = [frozenset([(Fraction(v[0]), Fraction(v[1]))]) for v in hull]
        out += [frozenset([(Fraction(a[0]), Fraction(a[1])),
                           (Fraction(b[0]), Fraction(b[1]))])
                for a, b in _edges(hull)]
        return out

    key = frozenset({(Fraction(p[0]), Fraction(p[1])) for p in inter})
    if len(key) > 2:
        return False
    return key in faces(ci) and key in faces(cj)


def validate_bisection(b, parent):
    """A bisection is a two-cell subdivision with the origin interior to the
    first cell and the marked points jointly exhausting the parent's."""
    report = validate_subdivision(b.subdivision, parent)
    origin = (0,) * parent.Q.ambient_dim
    if not _contains(b.cell0.Q, origin, strict=True):
        report.passed = False
        report.violations.append("origin not interior to the first cell")
    if set(b.cell0.A) | set(b.cell1.A) != set(parent.A):
        report.passed = False
        report.violations.append("marked points of the cells do not cover the parent's")
    return report


def _wall_functional(b):
    """The primitive integral affine functional vanishing on the shared wall
    and negative on the interior of the second cell.  Returns (const, grad)."""
    dim = b.cell0.Q.ambient_dim
    if dim == 1:
        shared = _shared_region_1d(b.cell0, b.cell1)
        if shared is None or shared[0] != shared[1]:
            raise ValueError("cells do not share a wall point")
        wall = shared[0]
        pts1 = [_as2(v)[0] for v in b.cell1.Q.vertices]
        mid1 = Fraction(sum(pts1), len(pts1))
        sign = -1 if mid1 > wall else 1
        return (-sign * wall, (sign,))
    inter = _clip_polygons(b.cell0, b.cell1)
    lattice = [p for p in inter if p[0].denominator == 1 and p[1].denominator == 1]
    if len(set(inter)) < 2 or len(lattice) < 2:
        raise ValueError("shared wall is not spanned by lattice points")
    p, q = inter[0], inter[-1]
    d = (q[0] - p[0], q[1] - p[1])
    g = gcd(int(d[0]), int(d[1]))
    normal = (int(d[1]) // g, -int(d[0]) // g)
    const = -(normal[0] * p[0] + normal[1] * p[1])
    hull1 = _convex_hull_2d([_as2(v) for v in b.cell1.Q.vertices])
    cx = Fraction(sum(v[0] for v in hull1), len(hull1))
    cy = Fraction(sum(v[1] for v in hull1), len(hull1))
    if normal[0] * cx + normal[1] * cy + const > 0:
        normal = (-normal[0], -normal[1])
        const = -const
    return (int(const), normal)


def coherence_weight(b):
    """The distinguished integral weight of a bisection: zero on the marked
    points of the origin cell and the primitive wall functional on the rest.
    Its piecewise-linear extension is concave with linearity domains exactly
    the two cells."""
    const, grad = _wall_functional(b)

    def lam(p):
        q = _as2(p)
        return int(const + sum(g * x for g, x in zip(grad, q)))

    values = {}
    for p in b.cell0.A:
        values[p] = 0
    for p in b.cell1.A:
        v = lam(p)
        if p in values and v != 0:
            raise ValueError(f"shared marked point {p} off the wall")
        values[p] = v if p not in values else 0
    return PLWeight.from_dict(values)


def reparameterized_weight(b):
    """The coherence weight re-based at the second cell: subtract the wall
    functional, so the weight vanishes on the second cell's marked points
    and is negative at the origin."""
    const, grad = _wall_functional(b)
    eta = coherence_weight(b)

    def lam(p):
        q = _as2(p)
        return int(const + grad[0] * q[0] + (grad[1] * q[1] if len(grad) > 1 else 0))

    values = {p: v - lam(p) for p, v in eta.values}
    return PLWeight.from_dict(values)


@dataclass(frozen=True)
class DeformedPotential:
    """A Laurent polynomial with rational coefficients perturbed by an
    integral weight: the coefficient at alpha becomes c_alpha * t^{-psi(alpha)}."""

    coefficients: tuple  # of (point, Fraction)
    weight: PLWeight
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           tuple(sorted((_pt(k), Fraction(v))
                                        for k, v in dict(self.coefficients).items())))
        if self.t <= 0:
            raise ValueError("deformation parameter must be positive")


def deform_coeffs(p):
    """The deformed coefficient list at parameter t, exact rationals."""
    t = Fraction(p.t)
    psi = p.weight.as_dict()
    return {alpha: c * t ** (-psi[alpha]) for alpha, c in p.coefficients}


def critical_values_univariate(coeffs):
    """Critical values of a one-variable Laurent polynomial: roots of
    z f'(z) cleared to an ordinary polynomial, evaluated back through f.

    For generic coefficients the count equals the lattice length of the
    Newton segment of f.
    """
    support = {int(a[0]) if not isinstance(a, int) else a: v
               for a, v in coeffs.items() if v != 0}
    if len(support) < 2:
        raise ValueError("need at least two monomials for critical points")
    d_support = {a: a * c for a, c in support.items() if a != 0}
    if not d_support:
        raise ValueError("constant-like input has no critical points")
    lo, hi = min(d_support), max(d_support)
    poly = [complex(d_support.get(a, 0)) for a in range(hi, lo - 1, -1)]
    roots = np.roots(poly)

    def f(z):
        return sum(complex(c) * z ** a for a, c in support.items())

    return [f(complex(z)) for z in roots]


def seeded_coefficients(A, seed, tolerance=1e-4, a0=None, a1=None):
    """Small nonzero integer coefficients from a seeded generator, rejecting
    configurations whose restricted potentials have nearly colliding or
    nearly zero critical values (within 10x the matching tolerance)."""
    rng = random.Random(seed)
    points = [_pt(p) for p in A]
    for _ in range(200):
        cand = {p: Fraction(rng.choice([x for x in range(-3, 4) if x != 0]))
                for p in points}
        ok = True
        for part in (a0, a1, points):
            if part is None:
                continue
            sub = {p: cand[_pt(p)] for p in part if _pt(p) in cand}
            if len(sub) < 2:
                continue
            try:
                vals = critical_values_univariate(
                    {p[0]: c for p, c in ((_pt(k), v) for k, v in sub.items())})
            except ValueError:
                ok = False
                break
            for i, u in enumerate(vals):
                if abs(u) < 10 * tolerance:
                    ok = False
                for v in vals[i + 1:]:
                    if abs(u - v) < 10 * tolerance:
                        ok = False
        if ok:
            return cand
    raise RuntimeError("could not draw a generic coefficient vector")


def _extrapolate_to_zero(ts, vs):
    """Lagrange extrapolation of a sampled trajectory to t = 0."""
    total = 0j
    for i, (ti, vi) in enumerate(zip(ts, vs)):
        weight = 1.0
        for j, tj in enumerate(ts):
            if j != i:
                weight *= (0.0 - tj) / (ti - tj)
        total += complex(vi) * weight
    return total


def _best_assignment(targets, values):
    """Injective nearest matching of each target to a distinct value,
    minimizing the worst error; brute force, sizes stay tiny."""
    best = None
    for combo in itertools.permutations(range(len(values)), len(targets)):
        errs = [abs(targets[i] - values[j]) for i, j in enumerate(combo)]
        worst = max(errs) if errs else 0.0
        if best is None or worst < best[0]:
            best = (worst, combo, errs)
    return best


@dataclass
class SplittingReport:
    ok: bool
    m: int
    r: int
    targets_cell0: list
    targets_cell1: list
    steps: list  # per t: dict with values and matches
    violations: list = field(default_factory=list)


def track_splitting(b, coeffs=None, t_schedule=None, seed=42, tolerance=1e-4):
    """Numerically verify the critical-value splitting of a 1D bisection.

    Along a decreasing schedule the deformed potential's critical values
    split: m of them approach the critical values of the restriction to the
    origin cell, and under the re-based weight the remaining r - m approach
    those of the other cell, all nonzero.
    """
    if t_schedule is None:
        t_schedule = [Fraction(1, 10 ** k) for k in (1, 2, 3)]
    t_schedule = [Fraction(t) for t in t_schedule]
    if any(t <= 0 for t in t_schedule) or any(
            a <= b for a, b in zip(t_schedule, t_schedule[1:])):
        raise ValueError("schedule must be strictly decreasing and positive")

    a_all = sorted(set(b.cell0.A) | set(b.cell1.A))
    if any(len(p) != 1 for p in a_all):
        raise ValueError("critical-value tracking is 1D only")
    if coeffs is None:
        coeffs = seeded_coefficients(a_all, seed, tolerance,
                                     a0=b.cell0.A, a1=b.cell1.A)
    coeffs = {_pt(k): Fraction(v) for k, v in coeffs.items()}

    eta = coherence_weight(b)
    tau = reparameterized_weight(b)

    def restricted(points):
        return {p[0]: coeffs[p] for p in points}

    targets0 = critical_values_univariate(restricted(b.cell0.A))
    targets1 = critical_values_univariate(restricted(b.cell1.A))
    m = len(targets0)

    violations = []
    if any(abs(v) < tolerance for v in targets1):
        violations.append("restriction to the second cell has a zero critical value")

    steps = []
    r = None
    for t in t_schedule:
        w_t = deform_coeffs(DeformedPotential(tuple(coeffs.items()), eta, t))
        wt_t = deform_coeffs(DeformedPotential(tuple(coeffs.items()), tau, t))
        vals = critical_values_univariate({p[0]: c for p, c in w_t.items()})
        vals_re = critical_values_univariate({p[0]: c for p, c in wt_t.items()})
        if r is None:
            r = len(vals)
        if len(vals) != r or len(vals_re) != r:
            violations.append(f"critical-value count changed at t={t}")
            continue
        err0, match0, _ = _best_assignment(targets0, vals)
        err1, match1, _ = _best_assignment(targets1, vals_re)
        steps.append({
            "t": t,
            "values": vals,
            "values_rebased": vals_re,
            "match_cell0": match0,
            "match_cell1": match1,
            "err_cell0": err0,
            "err_cell1": err1,
        })
    if not steps:
        violations.append("no schedule step could be evaluated")
    else:
        # The matched trajectories are analytic in t, so their values at
        # t = 0 are recovered by polynomial extrapolation; two refinement
        # points below the schedule sharpen the limit estimate without
        # changing the tracked schedule itself.
        refine = [t_schedule[-1] / 10, t_schedule[-1] / 100]
        refined = []
        for t in refine:
            w_t = deform_coeffs(DeformedPotential(tuple(coeffs.items()), eta, t))
            wt_t = deform_coeffs(DeformedPotential(tuple(coeffs.items()), tau, t))
            vals = critical_values_univariate({p[0]: c for p, c in w_t.items()})
            vals_re = critical_values_univariate({p[0]: c for p, c in wt_t.items()})
            _, match0, _ = _best_assignment(targets0, vals)
            _, match1, _ = _best_assignment(targets1, vals_re)
            refined.append({"t": t, "values": vals, "values_rebased": vals_re,
                            "match_cell0": match0, "match_cell1": match1})
        for key, targets in (("cell0", targets0), ("cell1", targets1)):
            for ti, target in enumerate(targets):
                samples = steps + refined
                ts = [float(s["t"]) for s in samples]
                vs = [s["values" if key == "cell0" else "values_rebased"]
                      [s[f"match_{key}"][ti]] for s in samples]
                limit = _extrapolate_to_zero(ts, vs)
                err = abs(limit - target)
                if err > tolerance:
                    violations.append(
                        f"{key} critical value {target:.6g} not reached: "
                        f"extrapolated error {err:.3g}")
        if len(steps) > 1 and (steps[-1]["err_cell0"] > steps[0]["err_cell0"] + tolerance
                               or steps[-1]["err_cell1"] > steps[0]["err_cell1"] + tolerance):
            violations.append("matching error not decreasing along the schedule")
        if m + (r - m) != r:
            violations.append("splitting counts do not conserve")
    return SplittingReport(
        ok=not violations,
        m=m,
        r=r or 0,
        targets_cell0=targets0,
        targets_cell1=targets1,
        steps=steps,
        violations=violations,
    )


@dataclass(frozen=True)
class Triangulation1D:
    cells: tuple       # of (lo, hi) integer pairs
    phi: tuple         # aligned with the input point list
    coherent_assumed: bool = True


def triangulations_1d(A):
    """All triangulations of a 1D marked interval: one per subset of the
    interior marked points, with the volume vector phi computed by lattice
    lengths.  Every 1D triangulation is regular; the coherence flag records
    that this is assumed rather than certified."""
    pts = sorted(int(p if isinstance(p, int) else _pt(p)[0]) for p in A)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    interior = pts[1:-1]
    out = []
    for rbits in range(2 ** len(interior)):
        used = [p for i, p in enumerate(interior) if rbits >> i & 1]
        knots = [pts[0]] + used + [pts[-1]]
        cells = tuple((a, b) for a, b in zip(knots, knots[1:]))
        phi = tuple(sum(b - a for a, b in cells if p in (a, b)) for p in pts)
        out.append(Triangulation1D(cells, phi))
    return out


def load_config(path):
    """Read a tracking-experiment config: marked points, the two cells,
    coefficients or a seed, the schedule, and the tolerance."""
    with open(path) as fh:
        raw = json.load(fh)
    for key in ("A", "A0", "A1"):
        if key not in raw:
            raise ValueError(f"config missing {key}")
    cfg = {
        "A": [_pt(p) for p in raw["A"]],
        "A0": [_pt(p) for p in raw["A0"]],
        "A1": [_pt(p) for p in raw["A1"]],
        "seed": raw.get("seed", 42),
        "tolerance": float(raw.get("tolerance", 1e-4)),
        "t_schedule": [Fraction(str(t)) for t in raw.get(
            "t_schedule", ["1/10", "1/100", "1/1000"])],
    }
    if "coefficients" in raw:
        cfg["coefficients"] = {
            _pt(json.loads(k) if isinstance(k, str) else k): Fraction(str(v))
            for k, v in raw["coefficients"].items()
        }
    return cfg


def bisection_from_config(cfg):
    def interval(points):
        xs = [p[0] for p in points]
        return MarkedPolytope(LatticePolytope((min(xs), max(xs))), tuple(points))

    parent = interval(cfg["A"])
    return Bisection(interval(cfg["A0"]), interval(cfg["A1"])), parent
