#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ehrlatt/exact.hpp"

namespace ehrlatt {

using LatticePoint = IntVector;

/// The closed half-space {x : <normal, x> >= offset}. Normals are primitive
/// and point into the polytope.
struct HalfSpace {
    IntVector normal;
    Integer offset;

    Integer evaluate(std::span<const Integer> x) const { return dot(normal, x) - offset; }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Full-dimensional convex lattice polytope in R^d, d >= 2, stored as its
/// extreme points together with its facet inequalities.
class Polytope {
  public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    const std::vector<HalfSpace>& facets() const noexcept { return facets_; }

    /// Input points that were not extreme and were dropped by build_polytope.
    const std::vector<LatticePoint>& dropped_points() const noexcept { return dropped_; }

  private:
    friend Polytope build_polytope(std::vector<LatticePoint> points, std::size_t d);
    friend Polytope dilate(const Polytope& p, const Integer& k);

    std::size_t dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<LatticePoint> dropped_;
};

/// Convex hull of lattice points. Duplicates and non-extreme points are
/// removed; vertices are sorted lexicographically and facets are sorted by
/// (normal, offset).
Polytope build_polytope(std::vector<LatticePoint> points, std::size_t d);

Polytope dilate(const Polytope& p, const Integer& k);

bool contains(const Polytope& p, std::span<const Integer> x, bool strict);

std::pair<LatticePoint, LatticePoint> bounding_box(const Polytope& p);

/// Primitive normal of the hyperplane through d points of Z^d, with
/// arbitrary orientation. Empty when the points are affinely dependent.
IntVector hyperplane_normal(std::span<const LatticePoint> points);

// Vertex file format: first non-comment line "d n", then n lines of d
// integers. Lines whose first non-blank character is '#' are comments.

struct VertexFile {
    std::size_t dim = 0;
    std::vector<LatticePoint> points;
};

VertexFile parse_vertex_file(std::istream& in);
VertexFile read_vertex_file(const std::string& path);
std::string format_vertex_file(const Polytope& p);

}  // namespace ehrlatt
