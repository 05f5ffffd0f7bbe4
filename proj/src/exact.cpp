#include "ehrlatt/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ehrlatt {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorKind::SingularSystem, "rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer gcd_of(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Dimension, "dot product of vectors with different lengths");
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_addmul(sum.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    }
    return sum;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer ipow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::Dimension, "ragged matrix literal");
        }
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw Error(ErrorKind::Dimension, "ragged matrix rows");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

IntVector IntMatrix::col_vector(std::size_t c) const {
    IntVector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

IntMatrix IntMatrix::with_column(std::size_t c, std::span<const Integer> values) const {
    if (values.size() != rows_) {
        throw Error(ErrorKind::Dimension, "replacement column has wrong length");
    }
    IntMatrix m = *this;
    for (std::size_t r = 0; r < rows_; ++r) m(r, c) = values[r];
    return m;
}

IntMatrix IntMatrix::without_column(std::size_t c) const {
    IntMatrix m(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0, k = 0; j < cols_; ++j) {
            if (j != c) m(r, k++) = (*this)(r, j);
        }
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << (*this)(r, c).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

void det_inplace(std::span<Integer> a, std::size_t n, Integer& scratch, Integer& out) {
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    if (n == 0) {
        out = 1;
        return;
    }
    int sign = 1;
    // The previous pivot is read from the matrix itself (row k-1), so no
    // extra storage is needed.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) {
                out = 0;
                return;
            }
            for (std::size_t c = k; c < n; ++c) mpz_swap(at(k, c).get_mpz_t(), at(p, c).get_mpz_t());
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(scratch.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_submul(scratch.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                if (k > 0) {
                    mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(),
                                 at(k - 1, k - 1).get_mpz_t());
                } else {
                    mpz_swap(at(i, j).get_mpz_t(), scratch.get_mpz_t());
                }
            }
        }
    }
    out = at(n - 1, n - 1);
    if (sign < 0) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

Integer det_int(const IntMatrix& m) {
    if (!m.square()) {
        throw Error(ErrorKind::Dimension, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    std::vector<Integer> a;
    a.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.push_back(m(r, c));
    }
    Integer scratch, out;
    det_inplace(a, n, scratch, out);
    return out;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

RatVector solve_cramer(const IntMatrix& coeffs, std::span<const Integer> rhs) {
    if (!coeffs.square()) {
        throw Error(ErrorKind::Dimension, "Cramer system matrix is not square");
    }
    if (rhs.size() != coeffs.rows()) {
        throw Error(ErrorKind::Dimension, "right-hand side length does not match system");
    }
    const Integer det = det_int(coeffs);
    if (det == 0) {
        throw Error(ErrorKind::SingularSystem, "Cramer system is singular");
    }
    RatVector x;
    x.reserve(coeffs.cols());
    for (std::size_t c = 0; c < coeffs.cols(); ++c) {
        x.push_back(make_rational(det_int(coeffs.with_column(c, rhs)), det));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r.. until a single nonzero remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) {
                    best = i;
                }
            }
            if (best == rows) break;
            a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows || a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    }
    return out;
}

IntMatrix hnf_kernel_basis(std::span<const Integer> normal) {
    const std::size_t d = normal.size();
    const Integer g = gcd_of(normal);
    if (g == 0) {
        throw Error(ErrorKind::DegenerateNormal, "kernel basis of the zero vector");
    }
    if (g != 1) {
        throw Error(ErrorKind::Precondition, "kernel basis requires a primitive normal");
    }

    // Column operations with determinant 1 reduce normal^T * U to (1, 0, ..., 0);
    // the remaining columns of U then span the kernel lattice.
    IntVector a(normal.begin(), normal.end());
    IntMatrix u = IntMatrix::identity(d);
    for (std::size_t j = 1; j < d; ++j) {
        if (a[j] == 0) continue;
        Integer gj, s, t;
        mpz_gcdext(gj.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[0].get_mpz_t(),
                   a[j].get_mpz_t());
        const Integer p = a[0] / gj;
        const Integer q = a[j] / gj;
        for (std::size_t r = 0; r < d; ++r) {
            const Integer c0 = u(r, 0);
            const Integer cj = u(r, j);
            u(r, 0) = s * c0 + t * cj;
            u(r, j) = p * cj - q * c0;
        }
        a[0] = gj;
        a[j] = 0;
    }

    IntMatrix basis(d - 1, d);
    for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t r = 0; r < d; ++r) basis(k - 1, r) = u(r, k);
    }
    return hermite_normal_form(basis);
}

}  // namespace ehrlatt
