#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ehrlatt/polytope.hpp"

namespace ehrlatt::corpus {

struct Entry {
    std::string name;
    Polytope polytope;
};

Polytope unit_cube(std::size_t d);          // [0,1]^d
Polytope standard_simplex(std::size_t d);   // conv{0, e_1, ..., e_d}
Polytope cross_polytope(std::size_t d);     // conv{±e_i}
Polytope centered_cube(std::size_t d);      // [-1,1]^d

/// Five hand-picked irregular lattice polytopes for d = 2, 3, 4.
std::vector<Entry> irregular(std::size_t d);

/// Hull of d+1..d+4 random points of [-2,2]^d, redrawn until full-dimensional.
Polytope random_polytope(std::size_t d, std::mt19937_64& rng);

std::vector<Entry> random_family(std::size_t d, std::size_t count, std::uint64_t seed);

/// Unit cubes and standard simplices (d = 2..5), cross-polytopes and
/// centered cubes (d = 2..4), and the irregular polytopes (d = 2..4).
std::vector<Entry> standard_corpus();

/// Fano polytopes in d = 2, 3, both reflexive and not.
std::vector<Entry> fano_corpus();

}  // namespace ehrlatt::corpus
