"""Fabrics of kissing circles: inverted square grids filled with circles."""

from .fabric import (
    Chain,
    ComplexRootsError,
    DescartesQuad,
    Fabric,
    FrameCircle,
    IntegralReport,
    WindowMissError,
    build_fabric,
    chain_closed_form,
    chain_recurrence_step,
    check_integral_premise,
    descartes_fourth,
    frame_delta,
    frame_kappa,
    region_bends,
    shared_circle,
    tangency_circle,
    verify_integral,
)
from .grid import GridSpec, Orientation, SymmetryGroup, cell_circle, classify_symmetry, grid_line
from .inversive import (
    AT_INFINITY,
    CarrierPointError,
    Circle,
    GeneralizedCircle,
    Inversion,
    Line,
    Point,
    curvature,
    invert_gcircle,
    invert_point,
    orthogonal,
    tangent,
)

__version__ = "0.1.0"
