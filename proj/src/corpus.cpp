#include "ehrlatt/corpus.hpp"

namespace ehrlatt::corpus {

namespace {

std::vector<LatticePoint> points(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<LatticePoint> out;
    for (const auto& r : rows) {
        LatticePoint pt;
        for (long v : r) pt.emplace_back(v);
        out.push_back(std::move(pt));
    }
    return out;
}

Entry entry(std::string name, std::initializer_list<std::initializer_list<long>> rows,
            std::size_t d) {
    return {std::move(name), build_polytope(points(rows), d)};
}

LatticePoint unit_vector(std::size_t d, std::size_t i, long s) {
    LatticePoint e(d, Integer(0));
    e[i] = s;
    return e;
}

Polytope box(std::size_t d, long lo, long hi) {
    std::vector<LatticePoint> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        LatticePoint v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
        pts.push_back(std::move(v));
    }
    return build_polytope(std::move(pts), d);
}

}  // namespace

Polytope unit_cube(std::size_t d) { return box(d, 0, 1); }

Polytope centered_cube(std::size_t d) { return box(d, -1, 1); }

Polytope standard_simplex(std::size_t d) {
    std::vector<LatticePoint> pts{LatticePoint(d, Integer(0))};
    for (std::size_t i = 0; i < d; ++i) pts.push_back(unit_vector(d, i, 1));
    return build_polytope(std::move(pts), d);
}

Polytope cross_polytope(std::size_t d) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(unit_vector(d, i, 1));
        pts.push_back(unit_vector(d, i, -1));
    }
    return build_polytope(std::move(pts), d);
}

std::vector<Entry> irregular(std::size_t d) {
    switch (d) {
        case 2:
            return {
                entry("triangle-a", {{0, 0}, {3, 1}, {1, 2}}, 2),
                entry("quadrilateral", {{0, 0}, {4, 0}, {3, 2}, {1, 3}}, 2),
                entry("pentagon", {{0, 0}, {2, 0}, {3, 1}, {2, 3}, {0, 2}}, 2),
                entry("triangle-b", {{-1, -1}, {4, 1}, {1, 3}}, 2),
                entry("sliver", {{0, 0}, {1, 0}, {3, 7}}, 2),
            };
        case 3:
            return {
                entry("reeve-3", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}, 3),
                entry("square-pyramid", {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 3}}, 3),
                entry("prism",
                      {{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 2}, {2, 0, 2}, {0, 1, 2}}, 3),
                entry("hexahedron", {{0, 0, 0}, {3, 0, 0}, {0, 2, 0}, {1, 1, 2}, {2, 2, 1}}, 3),
                entry("simplex-3", {{0, 0, 0}, {2, 1, 0}, {1, 3, 1}, {0, 1, 2}}, 3),
            };
        case 4:
            return {
                entry("reeve-4", {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                  {1, 1, 1, 2}}, 4),
                entry("simplex-prism", {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                        {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}},
                      4),
                entry("stacked", {{0, 0, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0},
                                  {0, 0, 0, 1}, {1, 1, 1, 1}}, 4),
                entry("cube-pyramid", {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                                       {0, 0, 1, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0},
                                       {1, 2, 0, 2}}, 4),
                entry("simplex-4", {{0, 0, 0, 0}, {1, 2, 0, 0}, {0, 1, 3, 0}, {1, 0, 1, 2},
                                    {2, 1, 1, 1}}, 4),
            };
        default:
            return {};
    }
}

Polytope random_polytope(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coord(-2, 2);
    std::uniform_int_distribution<std::size_t> extra(0, 3);
    while (true) {
        const std::size_t n = d + 1 + extra(rng);
        std::vector<LatticePoint> pts(n, LatticePoint(d));
        for (auto& pt : pts) {
            for (auto& c : pt) c = coord(rng);
        }
        try {
            return build_polytope(std::move(pts), d);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::LowerDimensional) throw;
        }
    }
}

std::vector<Entry> random_family(std::size_t d, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Entry> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({"random-" + std::to_string(d) + "d-" + std::to_string(i),
                       random_polytope(d, rng)});
    }
    return out;
}

std::vector<Entry> standard_corpus() {
    std::vector<Entry> out;
    for (std::size_t d = 2; d <= 5; ++d) {
        out.push_back({"unit-cube-" + std::to_string(d), unit_cube(d)});
        out.push_back({"standard-simplex-" + std::to_string(d), standard_simplex(d)});
    }
    for (std::size_t d = 2; d <= 4; ++d) {
        out.push_back({"cross-polytope-" + std::to_string(d), cross_polytope(d)});
        out.push_back({"centered-cube-" + std::to_string(d), centered_cube(d)});
        for (auto& e : irregular(d)) out.push_back(std::move(e));
    }
    return out;
}

std::vector<Entry> fano_corpus() {
    return {
        {"centered-square", centered_cube(2)},
        {"diamond", cross_polytope(2)},
        entry("reflexive-triangle", {{1, 0}, {0, 1}, {-1, -1}}, 2),
        {"centered-cube-3", centered_cube(3)},
        {"octahedron", cross_polytope(3)},
        entry("reflexive-simplex-3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, 3),
        entry("fano-triangle", {{1, 0}, {0, 1}, {-3, -1}}, 2),
        entry("tall-rectangle", {{1, 3}, {1, -3}, {-1, 3}, {-1, -3}}, 2),
        entry("tall-box", {{1, 1, 3}, {1, 1, -3}, {1, -1, 3}, {1, -1, -3},
                           {-1, 1, 3}, {-1, 1, -3}, {-1, -1, 3}, {-1, -1, -3}}, 3),
        entry("reflexive-simplex-3b", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}}, 3),
        entry("fano-simplex-3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -2, -3}}, 3),
    };
}

}  // namespace ehrlatt::corpus
