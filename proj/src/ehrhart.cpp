#include "ehrlatt/ehrhart.hpp"

namespace ehrlatt {

EhrhartPolynomial::EhrhartPolynomial(RatVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::Dimension, "Ehrhart polynomial needs at least one coefficient");
    }
}

Rational EhrhartPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

EhrhartPolynomial interpolate_counts(std::size_t d, const std::vector<Integer>& totals) {
    if (totals.size() < d) {
        throw Error(ErrorKind::InsufficientSeries, "interpolation needs counts for k = 1..d");
    }
    IntMatrix vandermonde(d + 1, d + 1);
    IntVector rhs(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t j = 0; j <= d; ++j) {
            vandermonde(k, j) = ipow(Integer(static_cast<unsigned long>(k)), j);
        }
        rhs[k] = k == 0 ? Integer(1) : totals[k - 1];
    }
    return EhrhartPolynomial(solve_cramer(vandermonde, rhs));
}

EhrhartPolynomial interpolate(const Polytope& p, CountOptions opts) {
    const std::size_t d = p.dim();
    std::vector<Integer> totals;
    totals.reserve(d);
    for (std::size_t k = 1; k <= d; ++k) {
        totals.push_back(count_points(dilate(p, static_cast<unsigned long>(k)), false, opts));
    }
    return interpolate_counts(d, totals);
}

Rational volume_from_ehrhart(const EhrhartPolynomial& e) { return e.coeff(e.dim()); }

Rational surface_from_ehrhart(const EhrhartPolynomial& e) {
    if (e.dim() < 1) throw Error(ErrorKind::Dimension, "surface needs degree >= 1");
    return 2 * e.coeff(e.dim() - 1);
}

bool check_reciprocity(const EhrhartPolynomial& e, const Polytope& p, unsigned k,
                       CountOptions opts) {
    if (k < 1) throw Error(ErrorKind::Precondition, "reciprocity needs k >= 1");
    const Integer interior =
        count_points(dilate(p, static_cast<unsigned long>(k)), true, opts);
    const Rational expected = e.dim() % 2 == 0 ? Rational(interior) : Rational(-interior);
    return e(-static_cast<long>(k)) == expected;
}

bool check_constant_term(const EhrhartPolynomial& e) { return e.coeff(0) == 1; }

}  // namespace ehrlatt
