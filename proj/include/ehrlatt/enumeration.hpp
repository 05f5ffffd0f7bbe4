#pragma once

#include <cstddef>
#include <vector>

#include "ehrlatt/polytope.hpp"

namespace ehrlatt {

/// Lattice point counts of the dilate kP.
struct CountTriple {
    unsigned k = 0;
    Integer total;     // G(kP)
    Integer interior;  // i(kP)
    Integer boundary;  // b(kP) = G(kP) - i(kP)
};

struct DilationSeries {
    Polytope base;
    std::vector<CountTriple> entries;  // k = 1..t

    unsigned length() const noexcept { return static_cast<unsigned>(entries.size()); }
    const CountTriple& at(unsigned k) const;
};

struct CountOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Number of lattice points in p (strict: in its interior).
Integer count_points(const Polytope& p, bool strict, CountOptions opts = {});

/// Total and interior counts from a single scan.
std::pair<Integer, Integer> count_total_and_interior(const Polytope& p, CountOptions opts = {});

CountTriple count_triple(const Polytope& p, unsigned k, CountOptions opts = {});

DilationSeries dilation_series(const Polytope& p, unsigned t, CountOptions opts = {});

}  // namespace ehrlatt
