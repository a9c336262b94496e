"""quiverkit: translation quivers, restricted powers, arc models, mesh surfaces."""

from .arcs import (
    MINUS,
    PLUS,
    BoundarySpec,
    PuncturedPolygon,
    TaggedArc,
    arc_span,
    arc_vertex_label,
    boundary_length,
    build_gamma_odot,
    enumerate_m_arcs,
    is_m_arc,
    m_moves,
    rho,
    tau_m_arc,
)
from .components import (
    ComponentEntry,
    DecompositionReport,
    VertexMapping,
    connected_components,
    d_component,
    decompose,
    find_isomorphism,
    is_translation_iso,
    sigma,
    sigma_image,
    x_k_vertices,
)
from .core import (
    ROW_ZERO,
    ROW_ZERO_BAR,
    RowLabel,
    TranslationQuiver,
    ValidationReport,
    VertexLabel,
    build_gamma_d,
    build_gamma_d_m,
    build_za_quotient,
    full_subquiver,
    make_vertex,
    translate,
    validate,
)
from .export import (
    SCHEMA_VERSION,
    ParseError,
    document_text,
    export_arcs_svg,
    export_dot,
    export_json,
    import_json,
    load_quiver,
    save_quiver,
)
from .paths import QPath, enumerate_sectional_paths, is_restricted, is_sectional, power
from .topology import MeshComplex, SurfaceReport, classify_surface, mesh_complex

__version__ = "0.1.0"

__all__ = [
    "BoundarySpec",
    "ComponentEntry",
    "DecompositionReport",
    "MINUS",
    "MeshComplex",
    "PLUS",
    "ParseError",
    "PuncturedPolygon",
    "QPath",
    "ROW_ZERO",
    "ROW_ZERO_BAR",
    "RowLabel",
    "SCHEMA_VERSION",
    "SurfaceReport",
    "TaggedArc",
    "TranslationQuiver",
    "ValidationReport",
    "VertexLabel",
    "VertexMapping",
    "arc_span",
    "arc_vertex_label",
    "boundary_length",
    "build_gamma_d",
    "build_gamma_d_m",
    "build_gamma_odot",
    "build_za_quotient",
    "classify_surface",
    "connected_components",
    "d_component",
    "decompose",
    "document_text",
    "enumerate_m_arcs",
    "enumerate_sectional_paths",
    "export_arcs_svg",
    "export_dot",
    "export_json",
    "find_isomorphism",
    "full_subquiver",
    "import_json",
    "is_m_arc",
    "is_restricted",
    "is_sectional",
    "is_translation_iso",
    "load_quiver",
    "m_moves",
    "make_vertex",
    "mesh_complex",
    "power",
    "rho",
    "save_quiver",
    "sigma",
    "sigma_image",
    "tau_m_arc",
    "translate",
    "validate",
    "x_k_vertices",
]
