#pragma once

#include <cstddef>
#include <vector>

#include "ehrlatt/enumeration.hpp"

namespace ehrlatt {

/// E_P(x) = sum_i coeffs[i] x^i, of degree dim.
class EhrhartPolynomial {
  public:
    explicit EhrhartPolynomial(RatVector coeffs);

    std::size_t dim() const noexcept { return coeffs_.size() - 1; }
    const RatVector& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }

    Rational operator()(const Rational& x) const;
    Rational operator()(long x) const { return (*this)(Rational(x)); }

  private:
    RatVector coeffs_;
};

/// Fits E_P through (k, G(kP)) for k = 0..d, with G(0P) = 1.
EhrhartPolynomial interpolate(const Polytope& p, CountOptions opts = {});

/// Same fit from already known counts G(P), ..., G(dP).
EhrhartPolynomial interpolate_counts(std::size_t d, const std::vector<Integer>& totals);

Rational volume_from_ehrhart(const EhrhartPolynomial& e);

/// 2 e_{d-1}.
Rational surface_from_ehrhart(const EhrhartPolynomial& e);

/// E(-k) == (-1)^d i(kP).
bool check_reciprocity(const EhrhartPolynomial& e, const Polytope& p, unsigned k,
                       CountOptions opts = {});

bool check_constant_term(const EhrhartPolynomial& e);

}  // namespace ehrlatt
