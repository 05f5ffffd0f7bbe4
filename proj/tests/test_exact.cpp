#include "doctest.h"

#include <random>

#include "ehrlatt/exact.hpp"
#include "oracles.hpp"

using namespace ehrlatt;

TEST_CASE("det_int small examples") {
    CHECK(det_int(IntMatrix{{1, 1}, {8, 2}}) == -6);
    CHECK(det_int(IntMatrix{{5}}) == 5);
    CHECK(det_int(IntMatrix{{1, 1}, {16, 4}}) == -12);
    CHECK(det_int(IntMatrix(0, 0)) == 1);
    CHECK(det_int(IntMatrix{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}) == 0);
    // zero leading pivot forces a row swap
    CHECK(det_int(IntMatrix{{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}) == -1);
}

TEST_CASE("det_int rejects non-square input") {
    try {
        det_int(IntMatrix{{1, 2, 3}, {4, 5, 6}});
        FAIL("expected a dimension error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("det_int agrees with cofactor expansion") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const IntMatrix m = oracle::random_matrix(rng, n, -9, 9);
        std::vector<std::vector<Integer>> rows(n);
        for (std::size_t r = 0; r < n; ++r) rows[r] = m.row_vector(r);
        REQUIRE(det_int(m) == oracle::cofactor_det(rows));
    }
}

TEST_CASE("det_int handles entries beyond 64 bits") {
    const Integer big = ipow(10, 30);
    IntMatrix m(3, 3);
    m(0, 0) = big;
    m(1, 1) = big;
    m(2, 2) = big;
    m(0, 2) = 7;
    CHECK(det_int(m) == ipow(10, 90));
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix{{1, 0, 0}, {0, 1, 0}}) == 2);
    CHECK(rank(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(rank(IntMatrix{{0, 1, 1}, {0, 2, 2}, {1, 0, 1}}) == 2);
}

TEST_CASE("solve_cramer examples") {
    auto x = solve_cramer(IntMatrix{{2}}, IntVector{6});
    CHECK(x == RatVector{3});

    x = solve_cramer(IntMatrix{{1, 1}, {8, 2}}, IntVector{4, 14});
    CHECK(x == RatVector{1, 3});

    x = solve_cramer(IntMatrix::identity(2), IntVector{-17, 5});
    CHECK(x == RatVector{-17, 5});

    x = solve_cramer(IntMatrix{{3}}, IntVector{2});
    CHECK(x[0] == make_rational(2, 3));
}

TEST_CASE("solve_cramer rejects singular systems") {
    try {
        solve_cramer(IntMatrix{{1, 2}, {2, 4}}, IntVector{1, 1});
        FAIL("expected a singular-system error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularSystem);
    }
}

TEST_CASE("solve_cramer solutions satisfy the system exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-20, 20);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = oracle::random_matrix(rng, n, -9, 9);
        IntVector rhs(n);
        for (auto& v : rhs) v = dist(rng);
        if (det_int(m) == 0) continue;
        const RatVector x = solve_cramer(m, rhs);
        for (std::size_t r = 0; r < n; ++r) {
            Rational lhs = 0;
            for (std::size_t c = 0; c < n; ++c) lhs += Rational(m(r, c)) * x[c];
            REQUIRE(lhs == Rational(rhs[r]));
        }
        ++solved;
    }
    CHECK(solved > 200);
}

TEST_CASE("rationals stay normalized") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
        if (b == 0 || e == 0) continue;
        const Rational p = make_rational(a, b);
        const Rational q = make_rational(c, e);
        for (const Rational& r : {Rational(p + q), Rational(p - q), Rational(p * q)}) {
            REQUIRE(r.get_den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
            REQUIRE(g == 1);
        }
    }
    CHECK(to_string(make_rational(0, -5)) == "0");
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
}

namespace {

// Every kernel vector with entries in [-r, r] must be an integer combination
// of the basis rows.
void check_kernel_basis(const IntVector& normal, long r) {
    const IntMatrix basis = hnf_kernel_basis(normal);
    const std::size_t d = normal.size();
    REQUIRE(basis.rows() == d - 1);
    REQUIRE(basis.cols() == d);
    for (std::size_t i = 0; i < basis.rows(); ++i) REQUIRE(dot(basis.row(i), normal) == 0);

    // gcd of the maximal minors is 1 exactly when the rows span the full
    // kernel lattice.
    IntVector minors;
    for (std::size_t c = 0; c < d; ++c) minors.push_back(det_int(basis.without_column(c)));
    CHECK(gcd_of(minors) == 1);

    LatticePoint lo(d, Integer(-r)), hi(d, Integer(r));
    oracle::for_each_grid_point(lo, hi, [&](const LatticePoint& x) {
        if (dot(x, normal) != 0) return;
        // Solve y * basis = x on a nonsingular minor and require integrality.
        for (std::size_t drop = 0; drop < d; ++drop) {
            const IntMatrix sq = basis.without_column(drop);
            if (det_int(sq) == 0) continue;
            IntVector rhs;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != drop) rhs.push_back(x[j]);
            }
            const RatVector y = solve_cramer(sq.transposed(), rhs);
            for (const auto& q : y) REQUIRE(is_integral(q));
            return;
        }
        FAIL("basis is rank deficient");
    });
}

}  // namespace

TEST_CASE("hnf_kernel_basis examples") {
    const IntMatrix e3 = hnf_kernel_basis(IntVector{0, 0, 1});
    CHECK(e3 == IntMatrix{{1, 0, 0}, {0, 1, 0}});

    const IntMatrix two = hnf_kernel_basis(IntVector{2, 3});
    REQUIRE(two.rows() == 1);
    CHECK(two == IntMatrix{{3, -2}});

    check_kernel_basis(IntVector{1, 1, 1}, 3);
    check_kernel_basis(IntVector{2, 3}, 6);
}

TEST_CASE("hnf_kernel_basis spans the kernel lattice for random primitive normals") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-6, 6);
    int checked = 0;
    while (checked < 40) {
        const std::size_t d = 2 + checked % 3;
        IntVector n(d);
        for (auto& v : n) v = dist(rng);
        if (gcd_of(n) != 1) continue;
        check_kernel_basis(n, d == 4 ? 2 : 3);
        ++checked;
    }
}

TEST_CASE("hnf_kernel_basis preconditions") {
    try {
        hnf_kernel_basis(IntVector{0, 0, 0});
        FAIL("expected degenerate-normal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateNormal);
    }
    try {
        hnf_kernel_basis(IntVector{2, 4, 6});
        FAIL("expected precondition");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
    }
}

TEST_CASE("hermite_normal_form is canonical for the row lattice") {
    const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const IntMatrix h = hermite_normal_form(a);
    // Same lattice after a unimodular row operation.
    const IntMatrix b{{2, 4, 4}, {-4, 10, 16}, {10, -4, -16}};
    CHECK(hermite_normal_form(b) == h);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (h(r, c) == 0) ++c;
        CHECK(h(r, c) > 0);
        for (std::size_t above = 0; above < r; ++above) {
            CHECK(h(above, c) >= 0);
            CHECK(h(above, c) < h(r, c));
        }
    }
    CHECK(abs(det_int(h)) == abs(det_int(a)));
}
