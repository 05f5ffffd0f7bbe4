#pragma once

// Exact integer/rational scalars and the small amount of integer linear
// algebra the rest of the library needs.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ehrlatt/error.hpp"

namespace ehrlatt {

using Integer = mpz_class;
/// mpq_class keeps itself canonical (lowest terms, positive denominator)
/// after every arithmetic operation. Construct from two integers only via
/// make_rational().
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);

Integer gcd_of(std::span<const Integer> values);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exp);

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Integer> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    IntVector row_vector(std::size_t r) const;
    IntVector col_vector(std::size_t c) const;

    void swap_rows(std::size_t a, std::size_t b);
    IntMatrix with_column(std::size_t c, std::span<const Integer> values) const;
    IntMatrix without_column(std::size_t c) const;
    IntMatrix transposed() const;

    std::string to_string() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_int(const IntMatrix& m);

/// Bareiss elimination on an n x n row-major buffer, overwriting it. The
/// determinant is written to `out`. Allocation-free once the buffer's entries
/// have grown to their working size.
void det_inplace(std::span<Integer> a, std::size_t n, Integer& scratch, Integer& out);

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Solves coeffs * x = rhs exactly with Cramer's rule.
RatVector solve_cramer(const IntMatrix& coeffs, std::span<const Integer> rhs);

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (as rows) of the lattice {x in Z^d : <normal, x> = 0}. The normal
/// must be nonzero and primitive. The result is in Hermite normal form.
IntMatrix hnf_kernel_basis(std::span<const Integer> normal);

}  // namespace ehrlatt
