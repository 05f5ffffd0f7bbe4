#include "ehrlatt/surface.hpp"

namespace ehrlatt {

namespace {

Integer power(unsigned k, unsigned e) { return ipow(Integer(k), e); }

void require_dimension(std::size_t d) {
    if (d < 2) throw Error(ErrorKind::Dimension, "surface formulas need d >= 2");
}

}  // namespace

unsigned system_size(std::size_t d) {
    require_dimension(d);
    return static_cast<unsigned>(d % 2 == 1 ? (d - 1) / 2 : d / 2);
}

std::vector<unsigned> system_exponents(std::size_t d) {
    require_dimension(d);
    const unsigned last = d % 2 == 1 ? 2 : 1;
    std::vector<unsigned> out;
    for (long e = static_cast<long>(d) - 3; e >= static_cast<long>(last); e -= 2) {
        out.push_back(static_cast<unsigned>(e));
    }
    return out;
}

IntMatrix denominator_matrix(std::size_t d) {
    const unsigned t = system_size(d);
    const auto exps = system_exponents(d);
    IntMatrix m(t, t);
    for (unsigned k = 1; k <= t; ++k) {
        m(k - 1, 0) = power(k, static_cast<unsigned>(d - 1));
        for (std::size_t j = 0; j < exps.size(); ++j) m(k - 1, j + 1) = power(k, exps[j]);
    }
    return m;
}

SurfaceSystem build_system(const DilationSeries& series, std::size_t d) {
    SurfaceSystem sys;
    sys.d = d;
    sys.parity = d % 2 == 1 ? Parity::Odd : Parity::Even;
    sys.t = system_size(d);
    sys.exponents = system_exponents(d);
    if (series.length() < sys.t) {
        throw Error(ErrorKind::InsufficientSeries,
                    "surface system for d = " + std::to_string(d) + " needs b(kP) for k = 1.." +
                        std::to_string(sys.t));
    }
    sys.denominator = denominator_matrix(d);
    sys.numerator = sys.denominator;
    for (unsigned k = 1; k <= sys.t; ++k) {
        Integer b = series.at(k).boundary;
        if (sys.parity == Parity::Odd) b -= 2;
        sys.numerator(k - 1, 0) = std::move(b);
    }
    return sys;
}

Rational SurfaceSystem::surface() const {
    return make_rational(det_int(numerator), det_int(denominator));
}

Rational surface_from_determinants(const Polytope& p, CountOptions opts) {
    const std::size_t d = p.dim();
    return build_system(dilation_series(p, system_size(d), opts), d).surface();
}

Rational surface_closed_form(std::size_t d, const Integer& b1, const Integer& b2) {
    switch (d) {
        case 2: return Rational(b1);
        case 3: return Rational(b1 - 2);
        case 4: return make_rational(b2 - 2 * b1, 6);
        case 5: return make_rational(b2 - 4 * b1 + 6, 12);
        default:
            throw Error(ErrorKind::Dimension,
                        "closed forms exist for d = 2..5, not d = " + std::to_string(d));
    }
}

Rational surface_closed_form(const Polytope& p, CountOptions opts) {
    const std::size_t d = p.dim();
    if (d < 2 || d > 5) return surface_closed_form(d, 0, 0);
    const Integer b1 = count_triple(p, 1, opts).boundary;
    const Integer b2 = d >= 4 ? count_triple(p, 2, opts).boundary : Integer(0);
    return surface_closed_form(d, b1, b2);
}

Rational surface_closed_form_d5_misprint(const Integer& b1, const Integer& b2) {
    return make_rational(b2 - 4 * b1 - 6, 12);
}

Rational pick_area(const Polytope& p, CountOptions opts) {
    if (p.dim() != 2) throw Error(ErrorKind::Dimension, "Pick's formula is for polygons");
    const CountTriple c = count_triple(p, 1, opts);
    return Rational(c.interior) + make_rational(c.boundary, 2) - 1;
}

bool verify_boundary_identity(const Polytope& p, const EhrhartPolynomial& e, unsigned k,
                              CountOptions opts) {
    if (k < 1) throw Error(ErrorKind::Precondition, "boundary identity needs k >= 1");
    const std::size_t d = p.dim();
    if (e.dim() != d) throw Error(ErrorKind::Dimension, "polynomial degree does not match");
    Rational predicted = 0;
    Rational kq(k);
    Rational kpow = 1;
    for (std::size_t j = 0; j <= d; ++j) {
        if ((d + j) % 2 == 1) predicted += 2 * e.coeff(j) * kpow;
        kpow *= kq;
    }
    return Rational(count_triple(p, k, opts).boundary) == predicted;
}

}  // namespace ehrlatt
