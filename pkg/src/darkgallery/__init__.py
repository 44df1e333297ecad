"""darkgallery: exact guard placement and coverage-depth certification
for galleries where guards block each other's sight lines."""

from .geometry import (
    Rat,
    Point2,
    Line,
    Halfplane,
    ConvexPolygon,
    Wedge,
    SimplePolygon,
    PARALLEL,
    COINCIDENT,
    orientation,
    cross,
    line_intersection,
    halfplane_intersection,
    convex_hull,
)
from .darkness import (
    GuardSet,
    DarknessWitness,
    DepthCertificate,
    BoundaryCensus,
    max_darkness,
    min_depth,
    has_j_dark,
    find_collinear_triple,
    find_concurrent_dark_rays,
    boundary_census,
)
from .construct import (
    ConstructionError,
    RegimePlan,
    plan,
    place_vertex_guards,
    place_4n_minus_2,
    place_general_position,
    place_wedge,
    guards_for_wedge,
    construct,
)
from .simple import (
    Comb,
    FiskPlan,
    make_comb,
    comb_cover,
    triangulate,
    three_color,
    fisk_plan,
    fisk_cover,
)
from .sampling import SampleReport, visible, depth_at_sample, sample_depth
from .documents import (
    DocumentError,
    PlacementDocument,
    CertificateDocument,
    JDarkResult,
)
from .render import render_svg, render_placement
from .fixtures import (
    builtin_fixture,
    triangle_fixture,
    square_fixture,
    wedge_fixture,
)

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "Point2",
    "Line",
    "Halfplane",
    "ConvexPolygon",
    "Wedge",
    "SimplePolygon",
    "PARALLEL",
    "COINCIDENT",
    "orientation",
    "cross",
    "line_intersection",
    "halfplane_intersection",
    "convex_hull",
    "GuardSet",
    "DarknessWitness",
    "DepthCertificate",
    "BoundaryCensus",
    "max_darkness",
    "min_depth",
    "has_j_dark",
    "find_collinear_triple",
    "find_concurrent_dark_rays",
    "boundary_census",
    "ConstructionError",
    "RegimePlan",
    "plan",
    "place_vertex_guards",
    "place_4n_minus_2",
    "place_general_position",
    "place_wedge",
    "guards_for_wedge",
    "construct",
    "Comb",
    "FiskPlan",
    "make_comb",
    "comb_cover",
    "triangulate",
    "three_color",
    "fisk_plan",
    "fisk_cover",
    "SampleReport",
    "visible",
    "depth_at_sample",
    "sample_depth",
    "DocumentError",
    "PlacementDocument",
    "CertificateDocument",
    "JDarkResult",
    "render_svg",
    "render_placement",
    "builtin_fixture",
    "triangle_fixture",
    "square_fixture",
    "wedge_fixture",
]
