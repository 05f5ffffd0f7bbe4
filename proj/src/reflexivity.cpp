#include "ehrlatt/reflexivity.hpp"

#include <algorithm>

#include "ehrlatt/facet_oracle.hpp"

namespace ehrlatt {

bool origin_in_interior(const Polytope& p) {
    return std::all_of(p.facets().begin(), p.facets().end(),
                       [](const HalfSpace& f) { return f.offset < 0; });
}

bool is_fano(const Polytope& p) {
    if (!origin_in_interior(p)) return false;
    return std::all_of(p.vertices().begin(), p.vertices().end(),
                       [](const LatticePoint& v) { return gcd_of(v) == 1; });
}

DualDescription dual_polytope(const Polytope& p) {
    if (!origin_in_interior(p)) {
        throw Error(ErrorKind::UnboundedDual,
                    "origin is not strictly interior, so the dual is unbounded");
    }
    DualDescription dual;
    dual.is_lattice = true;
    for (const auto& f : p.facets()) {
        const Integer scale = -f.offset;
        RatVector y;
        y.reserve(f.normal.size());
        for (const auto& a : f.normal) y.push_back(make_rational(a, scale));
        dual.is_lattice = dual.is_lattice && scale == 1;
        dual.vertices.push_back(std::move(y));
    }
    return dual;
}

bool is_reflexive(const Polytope& p) {
    return std::all_of(p.facets().begin(), p.facets().end(),
                       [](const HalfSpace& f) { return f.offset == -1; });
}

bool check_volume_surface_identity(const Polytope& p) {
    if (!is_fano(p)) {
        throw Error(ErrorKind::Precondition, "volume identity is stated for Fano polytopes");
    }
    const Rational d(static_cast<unsigned long>(p.dim()));
    return volume_direct(p) == surface_direct(p) / d;
}

Rational corollary_volume(const Polytope& p, CountOptions opts) {
    const Rational d(static_cast<unsigned long>(p.dim()));
    return surface_from_determinants(p, opts) / d;
}

}  // namespace ehrlatt
