"""Circle skinning with rational-envelope curves."""

from .documents import VERSION as __version__
from .documents import InputError, output_document, parse_input
from .geom import (
    Circle,
    GeneralizedCircle,
    GeometryError,
    Line2,
    TangencySolution,
    apollonius_same_side,
    invert_point,
    outer_common_tangents,
    radical_line,
    rotate_cw,
)
from .minkowski import (
    MatSample,
    envelope_eval,
    envelope_points_from_hermite,
    is_space_like,
    lift,
)
from .pipeline import SkinConfig, SkinResult, catmull_rom_tangents, skin
from .planner import (
    AdmissibilityError,
    AdmissibilityReport,
    TouchPlan,
    plan_touchpoints,
    validate_admissibility,
)
from .reconstruct import ReconstructionResult, construct_apex, reconstruct_tangent
from .resegment import (
    RESegment,
    build_re_segment,
    envelope_tangent,
    hermite_spine,
    ph_spine,
    radius_profile,
    sample_envelope,
    sample_offsets,
    tangent_lengths,
)
from .svgout import render_svg
