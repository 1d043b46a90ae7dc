"""Weighted graded-ring arithmetic, the weighted exterior algebra, and
small lattice-polytope utilities shared by all other modules.

Everything here is exact: arbitrary-precision integers and `fractions.Fraction`
only, no floating point, so that downstream certificates are bit-stable.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd


@dataclass(frozen=True)
class Weights:
    """A vector of positive integer weights (a_0, ..., a_n)."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) == 0:
            raise ValueError("weights must be non-empty")
        if any(x < 1 for x in self.a):
            raise ValueError(f"weights must be positive, got {self.a}")

    @property
    def n(self):
        return len(self.a) - 1

    @property
    def l(self):
        """Total weight l = sum(a_i)."""
        return sum(self.a)

    @property
    def num_objects(self):
        """Number of objects in the exceptional range [0, l-2]."""
        return self.l - 1

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __repr__(self):
        return f"Weights{self.a}"


@dataclass(frozen=True)
class Monomial:
    """A monomial in the weighted polynomial ring, stored by exponents."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    def weighted_degree(self, w):
        return sum(a * e for a, e in zip(w.a, self.exponents))

    def __mul__(self, other):
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials over different variable sets")
        return Monomial(tuple(x + y for x, y in zip(self.exponents, other.exponents)))

    def __str__(self):
        if not any(self.exponents):
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class ExteriorBasisElement:
    """A basis element e_J of the exterior algebra, J a sorted index subset."""

    subset: tuple

    def __post_init__(self):
        subset = tuple(sorted(int(i) for i in self.subset))
        if len(set(subset)) != len(subset):
            raise ValueError("repeated index in exterior subset")
        object.__setattr__(self, "subset", subset)

    @property
    def degree(self):
        return len(self.subset)

    def weight(self, w):
        return sum(w.a[i] for i in self.subset)

    def __str__(self):
        if not self.subset:
            return "e()"
        return "e(" + ",".join(str(i) for i in self.subset) + ")"


@dataclass(frozen=True)
class LatticePolytope:
    """A lattice polytope of dimension <= 2, given by its vertices.

    One-dimensional intervals may be given either by integers or by
    degenerate (collinear) coordinate tuples.
    """

    vertices: tuple

    def __post_init__(self):
        verts = []
        for v in self.vertices:
            if isinstance(v, (int,)):
                verts.append((int(v),))
            else:
                verts.append(tuple(int(x) for x in v))
        if not verts:
            raise ValueError("empty vertex list")
        dims = {len(v) for v in verts}
        if len(dims) != 1:
            raise ValueError("mixed coordinate dimensions")
        if len(verts[0]) > 2:
            raise ValueError("only dimensions 1 and 2 are supported")
        object.__setattr__(self, "vertices", tuple(verts))

    @property
    def ambient_dim(self):
        return len(self.vertices[0])


def graded_dim(w, k):
    """Dimension of the degree-k piece of the weighted polynomial ring."""
    if k < 0:
        return 0
    # Count exponent vectors with sum a_i e_i = k by a running convolution.
    counts = [0] * (k + 1)
    counts[0] = 1
    for a in w.a:
        for d in range(a, k + 1):
            counts[d] += counts[d - a]
    return counts[k]


def monomial_basis(w, k):
    """All monomials of weighted degree k, in the fixed lexicographic order.

    The order (largest leading exponent first) is the basis order used in
    every downstream table and certificate.
    """
    if k < 0:
        return []
    out = []

    def rec(i, remaining, prefix):
        if i == w.n:
            if remaining % w.a[i] == 0:
                out.append(Monomial(prefix + (remaining // w.a[i],)))
            return
        for e in range(remaining // w.a[i], -1, -1):
            rec(i + 1, remaining - e * w.a[i], prefix + (e,))

    rec(0, k, ())
    return out


def sheaf_cohomology_dim(w, p, k):
    """dim H^p of the degree-k twisting sheaf on the weighted projective space."""
    if p < 0 or p > w.n:
        raise ValueError(f"cohomological degree {p} outside [0, {w.n}]")
    if p == 0 and k >= 0:
        return graded_dim(w, k)
    if p == w.n and k <= -w.l:
        return graded_dim(w, -k - w.l)
    return 0


def exterior_basis(w, r, s):
    """All exterior basis elements of homological degree r and weight s."""
    if r < 0 or r > w.n + 1:
        return []
    out = []
    for J in combinations(range(w.n + 1), r):
        if sum(w.a[i] for i in J) == s:
            out.append(ExteriorBasisElement(J))
    return out


def _affine_rank(points):
    """Affine rank of a set of 1- or 2-dimensional integer points."""
    pts = [p if len(p) == 2 else (p[0], 0) for p in points]
    base = pts[0]
    vecs = [(p[0] - base[0], p[1] - base[1]) for p in pts[1:]]
    vecs = [v for v in vecs if v != (0, 0)]
    if not vecs:
        return 0
    v0 = vecs[0]
    for v in vecs[1:]:
        if v0[0] * v[1] - v0[1] * v[0] != 0:
            return 2
    return 1


def _convex_hull_2d(points):
    """Andrew's monotone chain; returns hull vertices counterclockwise."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def normalized_volume(p):
    """d! times the euclidean volume: twice the area of a polygon, or the
    lattice length of a (possibly degenerate) 1-dimensional interval.

    Zero-dimensional input is rejected.
    """
    rank = _affine_rank(p.vertices)
    if rank == 0:
        raise ValueError("degenerate polytope: all vertices coincide")
    pts = [v if len(v) == 2 else (v[0], 0) for v in p.vertices]
    if rank == 1:
        base = pts[0]
        # Project onto the carrier line and take the extreme points.
        direction = next(
            (q[0] - base[0], q[1] - base[1]) for q in pts if q != base
        )
        params = [(q[0] - base[0]) * direction[0] + (q[1] - base[1]) * direction[1]
                  for q in pts]
        lo, hi = pts[params.index(min(params))], pts[params.index(max(params))]
        return gcd(abs(hi[0] - lo[0]), abs(hi[1] - lo[1]))
    hull = _convex_hull_2d(pts)
    twice_area = 0
    for i in range(len(hull)):
        x0, y0 = hull[i]
        x1, y1 = hull[(i + 1) % len(hull)]
        twice_area += x0 * y1 - x1 * y0
    return abs(twice_area)
