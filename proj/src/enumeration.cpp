#include "ehrlatt/enumeration.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace ehrlatt {

namespace {

// Lines along the last axis are cut out exactly: each facet bounds the last
// coordinate from one side (or rules the whole line in or out), so every
// line costs one pass over the facets instead of one per grid point.
struct LineScanner {
    const Polytope& p;
    std::size_t d;
    LatticePoint lo;
    LatticePoint hi;

    explicit LineScanner(const Polytope& poly) : p(poly), d(poly.dim()) {
        std::tie(lo, hi) = bounding_box(poly);
    }

    // Count of integers x_d in [lo_d, hi_d] with (prefix, x_d) in p.
    Integer line_count(const IntVector& prefix, bool strict) const {
        Integer lower = lo[d - 1];
        Integer upper = hi[d - 1];
        Integer rest;
        Integer bound;
        for (const auto& f : p.facets()) {
            // Need a * x_d >= r  (or > r when strict).
            rest = f.offset;
            for (std::size_t i = 0; i + 1 < d; ++i) rest -= f.normal[i] * prefix[i];
            const Integer& a = f.normal[d - 1];
            const int s = sgn(a);
            if (s == 0) {
                if (rest > 0 || (strict && rest == 0)) return 0;
                continue;
            }
            if (s > 0) {
                if (strict) {
                    mpz_fdiv_q(bound.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
                    bound += 1;
                } else {
                    mpz_cdiv_q(bound.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
                }
                if (bound > lower) lower = bound;
            } else {
                if (strict) {
                    mpz_cdiv_q(bound.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
                    bound -= 1;
                } else {
                    mpz_fdiv_q(bound.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
                }
                if (bound < upper) upper = bound;
            }
            if (lower > upper) return 0;
        }
        return upper - lower + 1;
    }

    // Sums over all prefixes whose first coordinate lies in [first_lo, first_hi].
    std::pair<Integer, Integer> scan(const Integer& first_lo, const Integer& first_hi,
                                     bool want_total, bool want_interior) const {
        Integer total = 0;
        Integer interior = 0;
        if (first_lo > first_hi) return {total, interior};
        IntVector prefix(lo.begin(), lo.end() - 1);
        prefix[0] = first_lo;
        const std::size_t m = d - 1;
        while (true) {
            if (want_total) total += line_count(prefix, false);
            if (want_interior) interior += line_count(prefix, true);
            // Odometer over the prefix, first coordinate slowest.
            std::size_t i = m;
            while (i > 0) {
                --i;
                const Integer& top = i == 0 ? first_hi : hi[i];
                if (prefix[i] < top) {
                    ++prefix[i];
                    break;
                }
                prefix[i] = lo[i];
                if (i == 0) return {total, interior};
            }
        }
    }
};

std::pair<Integer, Integer> parallel_scan(const Polytope& p, bool want_total, bool want_interior,
                                          CountOptions opts) {
    LineScanner scanner(p);
    const Integer span = scanner.hi[0] - scanner.lo[0] + 1;
    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, threads);
    if (span < threads) threads = static_cast<unsigned>(span.get_ui());
    if (threads <= 1) {
        return scanner.scan(scanner.lo[0], scanner.hi[0], want_total, want_interior);
    }

    // Contiguous slabs along the first axis; partial sums are added in slab
    // order, so the result does not depend on the thread count.
    std::vector<std::future<std::pair<Integer, Integer>>> parts;
    const Integer step = (span + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        Integer a = scanner.lo[0] + step * t;
        Integer b = a + step - 1;
        if (b > scanner.hi[0]) b = scanner.hi[0];
        parts.push_back(std::async(std::launch::async, [&scanner, a, b, want_total,
                                                        want_interior] {
            return scanner.scan(a, b, want_total, want_interior);
        }));
    }
    Integer total = 0;
    Integer interior = 0;
    for (auto& f : parts) {
        auto [t, i] = f.get();
        total += t;
        interior += i;
    }
    return {total, interior};
}

}  // namespace

Integer count_points(const Polytope& p, bool strict, CountOptions opts) {
    auto [total, interior] = parallel_scan(p, !strict, strict, opts);
    return strict ? interior : total;
}

std::pair<Integer, Integer> count_total_and_interior(const Polytope& p, CountOptions opts) {
    return parallel_scan(p, true, true, opts);
}

CountTriple count_triple(const Polytope& p, unsigned k, CountOptions opts) {
    const Polytope kp = dilate(p, k);
    auto [total, interior] = count_total_and_interior(kp, opts);
    CountTriple c;
    c.k = k;
    c.boundary = total - interior;
    c.total = std::move(total);
    c.interior = std::move(interior);
    return c;
}

const CountTriple& DilationSeries::at(unsigned k) const {
    if (k < 1 || k > entries.size()) {
        throw Error(ErrorKind::InsufficientSeries,
                    "dilation series has no entry for k = " + std::to_string(k));
    }
    return entries[k - 1];
}

DilationSeries dilation_series(const Polytope& p, unsigned t, CountOptions opts) {
    if (t < 1) throw Error(ErrorKind::Precondition, "dilation series needs t >= 1");
    DilationSeries s{p, {}};
    s.entries.reserve(t);
    for (unsigned k = 1; k <= t; ++k) s.entries.push_back(count_triple(p, k, opts));
    return s;
}

}  // namespace ehrlatt
