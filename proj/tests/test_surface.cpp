#include "doctest.h"

#include "ehrlatt/corpus.hpp"
#include "ehrlatt/facet_oracle.hpp"
#include "ehrlatt/surface.hpp"
#include "oracles.hpp"

using namespace ehrlatt;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("system shape") {
    CHECK(system_size(2) == 1);
    CHECK(system_size(3) == 1);
    CHECK(system_size(4) == 2);
    CHECK(system_size(5) == 2);
    CHECK(system_size(9) == 4);
    CHECK(system_exponents(2).empty());
    CHECK(system_exponents(3).empty());
    CHECK(system_exponents(4) == std::vector<unsigned>{1});
    CHECK(system_exponents(5) == std::vector<unsigned>{2});
    CHECK(system_exponents(8) == std::vector<unsigned>{5, 3, 1});
    CHECK(system_exponents(9) == std::vector<unsigned>{6, 4, 2});
}

TEST_CASE("denominator determinants for d = 2..9") {
    // Independently evaluated with a computer algebra system.
    const std::vector<long> expected{1, 1, -6, -12, -720, -4320, 3628800, 87091200};
    for (std::size_t d = 2; d <= 9; ++d) {
        CHECK(det_int(denominator_matrix(d)) == expected[d - 2]);
    }
}

TEST_CASE("build_system examples") {
    const auto sys4 = build_system(dilation_series(corpus::unit_cube(4), 2), 4);
    CHECK(sys4.parity == Parity::Even);
    CHECK(sys4.numerator == IntMatrix{{16, 1}, {80, 2}});
    CHECK(sys4.denominator == IntMatrix{{1, 1}, {8, 2}});

    const auto sys3 = build_system(dilation_series(corpus::unit_cube(3), 1), 3);
    CHECK(sys3.parity == Parity::Odd);
    CHECK(sys3.numerator == IntMatrix{{6}});
    CHECK(sys3.denominator == IntMatrix{{1}});

    const auto sys5 = build_system(dilation_series(corpus::unit_cube(5), 2), 5);
    CHECK(sys5.numerator == IntMatrix{{30, 1}, {240, 4}});
    CHECK(sys5.denominator == IntMatrix{{1, 1}, {16, 4}});

    try {
        build_system(dilation_series(corpus::unit_cube(4), 1), 4);
        FAIL("expected insufficient-series");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientSeries);
    }
}

TEST_CASE("determinant quotient on unit cubes") {
    CHECK(surface_from_determinants(corpus::unit_cube(3)) == 6);
    CHECK(surface_from_determinants(corpus::unit_cube(4)) == 8);
    CHECK(surface_from_determinants(corpus::unit_cube(5)) == 10);
}

TEST_CASE("closed forms") {
    CHECK(surface_closed_form(corpus::unit_cube(3)) == 6);
    CHECK(surface_closed_form(corpus::unit_cube(4)) == 8);
    CHECK(surface_closed_form(corpus::unit_cube(5)) == 10);
    CHECK(surface_closed_form(5, 32, 242) == 10);
    CHECK(surface_closed_form_d5_misprint(32, 242) == 9);
    CHECK(surface_closed_form(corpus::cross_polytope(4)) == q(8, 3));
    try {
        surface_closed_form(6, 0, 0);
        FAIL("expected dimension error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("the d = 5 closed form is the expanded determinant quotient") {
    // det([[b1-2, 1], [b2-2, 4]]) / det([[1, 1], [16, 4]]) for arbitrary counts
    for (long b1 = 6; b1 < 60; b1 += 7) {
        for (long b2 = b1; b2 < 400; b2 += 31) {
            const Rational quotient =
                make_rational(det_int(IntMatrix{{b1 - 2, 1}, {b2 - 2, 4}}),
                              det_int(IntMatrix{{1, 1}, {16, 4}}));
            CHECK(surface_closed_form(5, b1, b2) == quotient);
            CHECK(surface_closed_form(5, b1, b2) - surface_closed_form_d5_misprint(b1, b2) == 1);
        }
    }
}

TEST_CASE("pick_area") {
    CHECK(pick_area(corpus::unit_cube(2)) == 1);
    CHECK(pick_area(oracle::make({{0, 0}, {2, 0}, {0, 2}})) == 2);
    CHECK(pick_area(corpus::centered_cube(2)) == 4);
    try {
        pick_area(corpus::unit_cube(3));
        FAIL("expected dimension error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("boundary identity examples") {
    const Polytope c3 = corpus::unit_cube(3);
    CHECK(count_triple(c3, 2).boundary == 26);
    CHECK(verify_boundary_identity(c3, interpolate(c3), 2));

    const Polytope sq = corpus::unit_cube(2);
    CHECK(count_triple(sq, 3).boundary == 12);
    CHECK(verify_boundary_identity(sq, interpolate(sq), 3));

    const Polytope c4 = corpus::unit_cube(4);
    CHECK(verify_boundary_identity(c4, interpolate(c4), 1));

    CHECK_FALSE(verify_boundary_identity(c3, EhrhartPolynomial({1, 3, 4, 1}), 1));
}

TEST_CASE("boundary identity for k = 1..d across the corpus") {
    for (const auto& entry : corpus::standard_corpus()) {
        const Polytope& p = entry.polytope;
        if (p.dim() > 4) continue;
        const EhrhartPolynomial e = interpolate(p);
        for (unsigned k = 1; k <= p.dim(); ++k) {
            INFO(entry.name << " k=" << k);
            CHECK(verify_boundary_identity(p, e, k));
        }
    }
}

TEST_CASE("surface scales by k^(d-1) under dilation") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 9; ++i) {
        const std::size_t d = 2 + i % 3;
        const Polytope p = corpus::random_polytope(d, rng);
        const Rational s = surface_from_determinants(p);
        for (unsigned long k : {2ul, 3ul}) {
            CHECK(surface_from_determinants(dilate(p, k)) ==
                  s * Rational(ipow(Integer(k), static_cast<unsigned>(d - 1))));
        }
    }
}

TEST_CASE("determinant quotient equals the facet sum on random polytopes") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        const std::size_t d = 2 + i % 3;
        const Polytope p = corpus::random_polytope(d, rng);
        CHECK(surface_from_determinants(p) == surface_direct(p));
        CHECK(surface_closed_form(p) == surface_direct(p));
    }
}
