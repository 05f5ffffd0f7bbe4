#pragma once

#include <cstddef>
#include <vector>

#include "ehrlatt/polytope.hpp"

namespace ehrlatt {

/// A facet expressed in coordinates of its own (d-1)-dimensional lattice.
struct FacetGeometry {
    HalfSpace halfspace;
    std::vector<LatticePoint> facet_vertices;
    IntMatrix lattice_chart;                   // rows: basis of {x : <normal, x> = 0} ∩ Z^d
    std::vector<LatticePoint> chart_vertices;  // facet vertices minus the first, in chart coordinates
    Rational relative_volume;
};

/// Vertices of p lying on the facet hyperplane of h.
std::vector<LatticePoint> facet_vertices(const Polytope& p, const HalfSpace& h);

/// Integer coordinates y with y * chart = w. Throws InternalConsistency if w
/// is not in the lattice spanned by the chart rows.
IntVector chart_coordinates(const IntMatrix& chart, std::span<const Integer> w);

/// Fan triangulation of the convex hull of points (full-dimensional in Z^m)
/// from its lexicographically smallest vertex, recursing into every facet not
/// containing the apex. Simplices are returned as index lists into points.
std::vector<std::vector<std::size_t>> fan_triangulation(const std::vector<LatticePoint>& points,
                                                        std::size_t m);

/// Euclidean m-volume of the convex hull of points, full-dimensional in Z^m.
Rational hull_volume(const std::vector<LatticePoint>& points, std::size_t m);

FacetGeometry facet_geometry(const Polytope& p, const HalfSpace& h);

/// vol_{d-1}(F) / det(aff F ∩ Z^d).
Rational relative_facet_volume(const Polytope& p, const HalfSpace& h);

/// Sum of relative facet volumes.
Rational surface_direct(const Polytope& p);

Rational volume_direct(const Polytope& p);

}  // namespace ehrlatt
