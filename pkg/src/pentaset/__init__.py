"""Exact enumeration, analysis, and verification of the discrete point set
of fifth-cyclotomic integers whose Galois conjugate stays in a disc."""

__version__ = "0.1.0"

from .cyclotomic import (  # noqa: F401
    CycInt,
    GoldenInt,
    UnitDecomposition,
    abs_sq,
    decompose_unit,
    embed_approx,
    field_norm,
    galois_apply,
    golden_cmp,
    is_unit,
)
from .modelset import (  # noqa: F401
    PointRecord,
    Snapshot,
    Window,
    analyze,
    classify_distance,
    contains,
    enumerate_points,
    min_distance,
    stats,
)
from .verify import VerificationReport, run_check, verify_all  # noqa: F401
from .io_render import (  # noqa: F401
    RenderOptions,
    read_snapshot,
    render_svg,
    write_snapshot,
)
