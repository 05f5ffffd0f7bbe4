#pragma once

#include <vector>

#include "ehrlatt/surface.hpp"

namespace ehrlatt {

/// Vertices of P* = {y : <x, y> >= -1 for all x in P}.
struct DualDescription {
    std::vector<RatVector> vertices;
    bool is_lattice = false;
};

bool origin_in_interior(const Polytope& p);

/// Fano: the origin is strictly interior and every vertex is primitive.
bool is_fano(const Polytope& p);

/// One dual vertex normal / (-offset) per facet. Requires the origin to be
/// strictly interior.
DualDescription dual_polytope(const Polytope& p);

/// Every facet (primitive normal) has offset -1 and the origin is interior.
bool is_reflexive(const Polytope& p);

/// vol(P) == surf(P) / d, both computed geometrically. Fano input only.
bool check_volume_surface_identity(const Polytope& p);

/// Determinant-formula surface divided by d. Equals vol(P) when P is reflexive.
Rational corollary_volume(const Polytope& p, CountOptions opts = {});

}  // namespace ehrlatt
