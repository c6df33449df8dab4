"""Exact checks on the quartic and sextic families, their special fibers and reduction graphs."""

from .families import (
    CurveFamily,
    ProjPoint,
    elem_text,
    fermat_cubic,
    gradient,
    is_singular_at,
    quartic_family,
    sextic_family,
    sextic_S,
    sextic_T,
    splitting_field,
)
from .graphs import (
    Configuration,
    DualGraph,
    GraphAction,
    QuotientGraph,
    VoltageCover,
    betti_genus,
    double_cover,
    four_lines_configuration,
    graph_quotient,
    group_label,
    infinity_configuration,
    parse_action,
    parse_graph,
    single_edge_fixture,
)
from .monomial import (
    MonomialMap,
    all_monomial_maps,
    as_map,
    as_perm,
    even_maps,
    monomial_group,
    monomial_stabilizer,
    point_orbits,
    preserves,
)
from .singular import (
    INFINITY,
    SingularReport,
    mirror_line_singular_points,
    pencil_parameter,
    singular_parameters,
    singular_points,
    special_fiber_factorizations,
)
from .tangency import (
    Bitangency,
    LineIsComponent,
    NotBitangent,
    bitangency,
    first_orbit,
    four_bitangent_lines,
    orbit_report,
    pencil_two_torsion,
    quartic_tangency_points,
    tangency_orbits,
)

__all__ = [
    "Bitangency", "Configuration", "CurveFamily", "DualGraph", "GraphAction", "INFINITY", "LineIsComponent",
    "MonomialMap", "NotBitangent", "ProjPoint", "QuotientGraph", "SingularReport", "VoltageCover",
    "all_monomial_maps", "as_map", "as_perm", "betti_genus", "bitangency", "double_cover", "elem_text",
    "even_maps", "fermat_cubic", "first_orbit", "four_bitangent_lines", "four_lines_configuration",
    "gradient", "graph_quotient", "group_label", "infinity_configuration", "is_singular_at",
    "mirror_line_singular_points", "monomial_group", "monomial_stabilizer", "orbit_report",
    "parse_action", "parse_graph", "pencil_parameter", "pencil_two_torsion", "point_orbits", "preserves",
    "quartic_family", "quartic_tangency_points", "sextic_S", "sextic_T", "sextic_family",
    "single_edge_fixture", "singular_parameters", "singular_points", "special_fiber_factorizations",
    "splitting_field", "tangency_orbits",
]
