#include "doctest.h"

#include "ehrlatt/corpus.hpp"
#include "ehrlatt/enumeration.hpp"
#include "oracles.hpp"

using namespace ehrlatt;

TEST_CASE("count_points examples") {
    CHECK(count_points(corpus::unit_cube(3), false) == 8);
    CHECK(count_points(dilate(corpus::unit_cube(3), 2), true) == 1);
    CHECK(count_points(corpus::cross_polytope(3), false) == 7);
    CHECK(oracle::brute_force_count(corpus::cross_polytope(3), false) == 7);
}

TEST_CASE("count_triple examples") {
    const CountTriple c3 = count_triple(corpus::unit_cube(3), 1);
    CHECK(c3.k == 1);
    CHECK(c3.total == 8);
    CHECK(c3.interior == 0);
    CHECK(c3.boundary == 8);

    const CountTriple c4 = count_triple(corpus::unit_cube(4), 2);
    CHECK(c4.total == 81);
    CHECK(c4.interior == 1);
    CHECK(c4.boundary == 80);

    const CountTriple s3 = count_triple(corpus::standard_simplex(3), 1);
    CHECK(s3.total == 4);
    CHECK(s3.interior == 0);
    CHECK(s3.boundary == 4);
}

TEST_CASE("dilation_series examples") {
    auto boundaries = [](const DilationSeries& s) {
        std::vector<Integer> b;
        for (const auto& e : s.entries) b.push_back(e.boundary);
        return b;
    };
    CHECK(boundaries(dilation_series(corpus::unit_cube(5), 2)) == std::vector<Integer>{32, 242});
    CHECK(boundaries(dilation_series(corpus::unit_cube(4), 2)) == std::vector<Integer>{16, 80});
    CHECK(boundaries(dilation_series(corpus::unit_cube(2), 1)) == std::vector<Integer>{4});

    const DilationSeries s = dilation_series(corpus::unit_cube(2), 3);
    CHECK(s.at(3).total == 16);
    try {
        s.at(4);
        FAIL("expected insufficient-series");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientSeries);
    }
}

TEST_CASE("axis-aligned boxes match the product formula") {
    const std::vector<std::vector<long>> boxes{{2, 3}, {1, 4, 2}, {3, 1, 1, 2}};
    for (const auto& edges : boxes) {
        const std::size_t d = edges.size();
        std::vector<LatticePoint> corners;
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            LatticePoint v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? edges[i] : 0;
            corners.push_back(v);
        }
        const Polytope box = build_polytope(corners, d);
        for (long k = 1; k <= 4; ++k) {
            Integer total = 1, interior = 1;
            for (long e : edges) {
                total *= k * e + 1;
                interior *= k * e - 1;
            }
            const CountTriple c = count_triple(box, static_cast<unsigned>(k));
            CHECK(c.total == total);
            CHECK(c.interior == interior);
        }
    }
}

TEST_CASE("line scan agrees with the point-by-point oracle") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 45; ++i) {
        const std::size_t d = 2 + i % 3;
        const Polytope p = corpus::random_polytope(d, rng);
        for (unsigned k : {1u, 2u}) {
            const Polytope kp = dilate(p, k);
            REQUIRE(count_points(kp, false) == oracle::brute_force_count(kp, false));
            REQUIRE(count_points(kp, true) == oracle::brute_force_count(kp, true));
        }
    }
}

TEST_CASE("boundary points lie on a facet hyperplane") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const Polytope p = corpus::random_polytope(2 + i % 2, rng);
        Integer on_facet = 0;
        auto [lo, hi] = bounding_box(p);
        oracle::for_each_grid_point(lo, hi, [&](const LatticePoint& x) {
            if (!contains(p, x, false)) return;
            for (const auto& f : p.facets()) {
                if (f.evaluate(x) == 0) {
                    ++on_facet;
                    return;
                }
            }
        });
        CHECK(count_triple(p, 1).boundary == on_facet);
    }
}

TEST_CASE("counts do not depend on the thread count") {
    const Polytope p = dilate(corpus::irregular(3)[1].polytope, 4);
    const auto one = count_total_and_interior(p, {1});
    for (unsigned t : {2u, 3u, 7u, 64u}) {
        const auto many = count_total_and_interior(p, {t});
        CHECK(many.first == one.first);
        CHECK(many.second == one.second);
    }
}

TEST_CASE("counts grow with the dilation factor") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 15; ++i) {
        const std::size_t d = 2 + i % 3;
        const Polytope p = corpus::random_polytope(d, rng);
        const DilationSeries s = dilation_series(p, 4);
        for (unsigned k = 1; k <= 4; ++k) {
            const CountTriple& c = s.at(k);
            CHECK(c.boundary == c.total - c.interior);
            CHECK(c.interior >= 0);
            CHECK(c.boundary >= Integer(static_cast<unsigned long>(d + 1)));
            if (k > 1) {
                CHECK(c.total > s.at(k - 1).total);
                CHECK(c.interior >= s.at(k - 1).interior);
            }
        }
    }
}
