#pragma once

#include <cstddef>
#include <vector>

#include "ehrlatt/ehrhart.hpp"

namespace ehrlatt {

enum class Parity { Odd, Even };

/// The determinant system expressing the lattice surface area through the
/// boundary counts b(P), ..., b(tP).
///
/// Row k of the numerator is [b(kP) - 2, k^(d-3), k^(d-5), ..., k^2] for odd
/// d and [b(kP), k^(d-3), ..., k^1] for even d. The denominator has the same
/// rows with the first entry replaced by k^(d-1). Then
///
///     surf(P) = det(numerator) / det(denominator).
struct SurfaceSystem {
    std::size_t d = 0;
    Parity parity = Parity::Even;
    unsigned t = 0;
    IntMatrix numerator;
    IntMatrix denominator;
    std::vector<unsigned> exponents;  // trailing column exponents

    Rational surface() const;
};

/// t = (d-1)/2 for odd d, d/2 for even d.
unsigned system_size(std::size_t d);

/// Column exponents after the first column: (d-3, d-5, ..., 2 or 1).
std::vector<unsigned> system_exponents(std::size_t d);

/// Denominator matrix; depends only on d.
IntMatrix denominator_matrix(std::size_t d);

SurfaceSystem build_system(const DilationSeries& series, std::size_t d);

/// Surface area from the determinant quotient; counts b(kP) for k = 1..t.
Rational surface_from_determinants(const Polytope& p, CountOptions opts = {});

/// Closed forms for d = 2..5:
///   d = 2: b(P)
///   d = 3: b(P) - 2
///   d = 4: (b(2P) - 2 b(P)) / 6
///   d = 5: (b(2P) - 4 b(P) + 6) / 12
Rational surface_closed_form(std::size_t d, const Integer& b1, const Integer& b2);
Rational surface_closed_form(const Polytope& p, CountOptions opts = {});

/// The d = 5 closed form with the constant -6 as it is sometimes printed,
/// (b(2P) - 4 b(P) - 6) / 12. It disagrees with the determinant quotient by
/// exactly 1 and is kept only so the discrepancy can be reported.
Rational surface_closed_form_d5_misprint(const Integer& b1, const Integer& b2);

/// i(P) + b(P)/2 - 1, d = 2 only.
Rational pick_area(const Polytope& p, CountOptions opts = {});

/// b(kP) = sum over j with d + j odd of 2 e_j k^j.
bool verify_boundary_identity(const Polytope& p, const EhrhartPolynomial& e, unsigned k,
                              CountOptions opts = {});

}  // namespace ehrlatt
