"""Resonance, blow-ups, pencils and foliation analysis."""

from .charts import BlowupChart, BlowupKind, charts_for
from .resonance import (
    Eigenvalues,
    blowup_eigenvalue_law,
    is_strongly_diagonalizable,
    nonneg_resonance_search,
    strong_resonances,
)
from .blowup import (
    StrictTransformResult,
    axis_invariance,
    linear_diagonal,
    transform_all_charts,
    transform_form,
    transform_vector_field,
)
from .pencil import (
    Pencil,
    PencilCase,
    PencilClassification,
    axis_2form,
    classify,
    connection_form,
    curvature,
    curvature_factor,
    decompose_over_pair,
    log_axis_formula,
    log_pencil,
    member,
    member_codim1_locus,
    pencil_condition,
    pencil_from_three,
    sample_exceptional_parameters,
    theta_is_unique,
    verify_axis_invariant_hypersurface,
    verify_theta_on_members,
)
from .foliation import (
    NormalFormKind,
    SimpleSingularityReport,
    invariant_axes,
    invariant_hypersurface_candidates,
    invariant_hypersurface_check,
    invariant_hypersurface_search,
    jouanolou,
    jouanolou_field,
    log_form,
    recognize_normal_form,
    residue_basis,
    simple_ch_check,
    tangent_log_pencil,
)

__all__ = [
    "BlowupChart",
    "BlowupKind",
    "charts_for",
    "Eigenvalues",
    "blowup_eigenvalue_law",
    "is_strongly_diagonalizable",
    "nonneg_resonance_search",
    "strong_resonances",
    "StrictTransformResult",
    "axis_invariance",
    "linear_diagonal",
    "transform_all_charts",
    "transform_form",
    "transform_vector_field",
    "Pencil",
    "PencilCase",
    "PencilClassification",
    "axis_2form",
    "classify",
    "connection_form",
    "curvature",
    "curvature_factor",
    "decompose_over_pair",
    "log_axis_formula",
    "log_pencil",
    "member",
    "member_codim1_locus",
    "pencil_condition",
    "pencil_from_three",
    "sample_exceptional_parameters",
    "theta_is_unique",
    "verify_theta_on_members",
    "verify_axis_invariant_hypersurface",
    "NormalFormKind",
    "SimpleSingularityReport",
    "invariant_axes",
    "invariant_hypersurface_candidates",
    "invariant_hypersurface_check",
    "invariant_hypersurface_search",
    "jouanolou",
    "jouanolou_field",
    "log_form",
    "recognize_normal_form",
    "residue_basis",
    "simple_ch_check",
    "tangent_log_pencil",
]
