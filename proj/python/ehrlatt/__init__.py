"""Exact lattice point counts, Ehrhart polynomials and lattice surface area."""

from ._core import (
    EhrlattError,
    Polytope,
    corollary_volume,
    count_points,
    count_triple,
    dual_vertices,
    ehrhart_polynomial,
    is_fano,
    is_reflexive,
    parse_vertex_file,
    pick_area,
    read_vertex_file,
    run_command,
    surface_closed_form,
    surface_direct,
    surface_from_determinants,
    surface_from_ehrhart,
    volume,
)

__all__ = [
    "EhrlattError",
    "Polytope",
    "corollary_volume",
    "count_points",
    "count_triple",
    "dual_vertices",
    "ehrhart_polynomial",
    "is_fano",
    "is_reflexive",
    "parse_vertex_file",
    "pick_area",
    "read_vertex_file",
    "run_command",
    "surface_closed_form",
    "surface_direct",
    "surface_from_determinants",
    "surface_from_ehrhart",
    "volume",
]
