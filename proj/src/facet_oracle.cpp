#include "ehrlatt/facet_oracle.hpp"

#include <algorithm>

namespace ehrlatt {

namespace {

Rational simplex_volume(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& s,
                        std::size_t m) {
    IntMatrix edges(m, m);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 0; j < m; ++j) edges(i - 1, j) = pts[s[i]][j] - pts[s[0]][j];
    }
    return make_rational(abs(det_int(edges)), factorial(static_cast<unsigned>(m)));
}

std::size_t lex_min_index(const std::vector<LatticePoint>& pts) {
    return static_cast<std::size_t>(std::min_element(pts.begin(), pts.end()) - pts.begin());
}

}  // namespace

std::vector<LatticePoint> facet_vertices(const Polytope& p, const HalfSpace& h) {
    if (std::find(p.facets().begin(), p.facets().end(), h) == p.facets().end()) {
        throw Error(ErrorKind::NotAFacet, "half-space is not a facet of the polytope");
    }
    std::vector<LatticePoint> out;
    for (const auto& v : p.vertices()) {
        if (h.evaluate(v) == 0) out.push_back(v);
    }
    return out;
}

IntVector chart_coordinates(const IntMatrix& chart, std::span<const Integer> w) {
    const std::size_t rows = chart.rows();
    const std::size_t d = chart.cols();
    if (w.size() != d) throw Error(ErrorKind::Dimension, "chart coordinate input has wrong length");
    if (rows + 1 != d) {
        throw Error(ErrorKind::Dimension, "lattice chart must have d - 1 rows");
    }
    if (rows == 0) return {};

    // Solve on a nonsingular (d-1)x(d-1) minor, then check the dropped column.
    const IntMatrix ct = chart.transposed();
    std::vector<std::size_t> keep;
    for (std::size_t drop = 0; drop < d && keep.empty(); ++drop) {
        if (det_int(chart.without_column(drop)) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (j != drop) keep.push_back(j);
        }
    }
    if (keep.empty()) {
        throw Error(ErrorKind::InternalConsistency, "lattice chart is rank deficient");
    }
    std::vector<IntVector> sel;
    IntVector rhs;
    for (std::size_t j : keep) {
        sel.push_back(ct.row_vector(j));
        rhs.push_back(w[j]);
    }
    const RatVector y = solve_cramer(IntMatrix::from_rows(sel), rhs);
    IntVector out;
    out.reserve(rows);
    for (const auto& q : y) {
        if (!is_integral(q)) {
            throw Error(ErrorKind::InternalConsistency,
                        "point has non-integral chart coordinates");
        }
        out.push_back(q.get_num());
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (dot(out, ct.row(j)) != w[j]) {
            throw Error(ErrorKind::InternalConsistency, "point does not lie in the chart lattice");
        }
    }
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> fan_over_hull(const std::vector<LatticePoint>& points,
                                                    const Polytope& hull) {
    const std::size_t m = hull.dim();
    const auto& verts = hull.vertices();
    auto is_vertex = [&](const LatticePoint& x) {
        return std::binary_search(verts.begin(), verts.end(), x);
    };
    const std::size_t apex = lex_min_index(points);

    std::vector<std::vector<std::size_t>> simplices;
    for (const auto& f : hull.facets()) {
        if (f.evaluate(points[apex]) == 0) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (f.evaluate(points[i]) == 0 && is_vertex(points[i])) {
                // Keep only the first copy of repeated points.
                const bool seen = std::any_of(idx.begin(), idx.end(), [&](std::size_t j) {
                    return points[j] == points[i];
                });
                if (!seen) idx.push_back(i);
            }
        }
        const IntMatrix chart = hnf_kernel_basis(f.normal);
        std::vector<LatticePoint> local;
        local.reserve(idx.size());
        for (std::size_t i : idx) {
            IntVector w(m);
            for (std::size_t j = 0; j < m; ++j) w[j] = points[i][j] - points[idx[0]][j];
            local.push_back(chart_coordinates(chart, w));
        }
        for (const auto& s : fan_triangulation(local, m - 1)) {
            std::vector<std::size_t> simplex{apex};
            for (std::size_t i : s) simplex.push_back(idx[i]);
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_triangulation(const std::vector<LatticePoint>& points,
                                                        std::size_t m) {
    if (m == 1) {
        auto [lo, hi] = std::minmax_element(points.begin(), points.end());
        return {{static_cast<std::size_t>(lo - points.begin()),
                 static_cast<std::size_t>(hi - points.begin())}};
    }
    return fan_over_hull(points, build_polytope(points, m));
}

Rational hull_volume(const std::vector<LatticePoint>& points, std::size_t m) {
    if (m == 1) {
        auto [lo, hi] = std::minmax_element(points.begin(), points.end());
        return Rational((*hi)[0] - (*lo)[0]);
    }
    Rational vol = 0;
    for (const auto& s : fan_triangulation(points, m)) vol += simplex_volume(points, s, m);
    return vol;
}

FacetGeometry facet_geometry(const Polytope& p, const HalfSpace& h) {
    FacetGeometry g;
    g.halfspace = h;
    g.facet_vertices = facet_vertices(p, h);
    const std::size_t d = p.dim();
    if (g.facet_vertices.size() < d) {
        throw Error(ErrorKind::NotAFacet, "supporting hyperplane meets fewer than d vertices");
    }
    g.lattice_chart = hnf_kernel_basis(h.normal);
    const LatticePoint& origin = g.facet_vertices.front();
    for (const auto& v : g.facet_vertices) {
        IntVector w(d);
        for (std::size_t j = 0; j < d; ++j) w[j] = v[j] - origin[j];
        g.chart_vertices.push_back(chart_coordinates(g.lattice_chart, w));
    }
    g.relative_volume = hull_volume(g.chart_vertices, d - 1);
    return g;
}

Rational relative_facet_volume(const Polytope& p, const HalfSpace& h) {
    return facet_geometry(p, h).relative_volume;
}

Rational surface_direct(const Polytope& p) {
    Rational total = 0;
    for (const auto& f : p.facets()) total += relative_facet_volume(p, f);
    return total;
}

Rational volume_direct(const Polytope& p) {
    Rational vol = 0;
    for (const auto& s : fan_over_hull(p.vertices(), p)) {
        vol += simplex_volume(p.vertices(), s, p.dim());
    }
    return vol;
}

}  // namespace ehrlatt
