"""The Fukaya side for two weights: the exact strip model of vanishing
cycles, intersection enumeration, Maslov degrees, disc-word products, and
the critical data of the potential."""

from .strip import (
    IntersectionPoint,
    PointKind,
    StripCurve,
    build_curves,
    hom_space,
    intersections,
    maslov_degree,
    shift_period,
)
from .words import (
    DiscWord,
    Letter,
    classify_disc_word,
    enumerate_accepted_words,
    higher_products_vanish,
    m2_product,
)
from .potential import (
    CriticalDatum,
    HPolyRoots,
    critical_data,
    h_poly_roots,
    monodromy_data,
)

__all__ = [
    "IntersectionPoint",
    "PointKind",
    "StripCurve",
    "build_curves",
    "hom_space",
    "intersections",
    "maslov_degree",
    "shift_period",
    "DiscWord",
    "Letter",
    "classify_disc_word",
    "enumerate_accepted_words",
    "higher_products_vanish",
    "m2_product",
    "CriticalDatum",
    "HPolyRoots",
    "critical_data",
    "h_poly_roots",
    "monodromy_data",
]
