#include "ehrlatt/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace ehrlatt {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool facet_less(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

IntMatrix difference_matrix(const std::vector<LatticePoint>& pts, std::size_t d) {
    IntMatrix m(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
    }
    return m;
}

// Calls fn(indices) for every increasing d-subset of {0..n-1}.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t d, Fn&& fn) {
    if (d > n) return;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        fn(std::as_const(idx));
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Hyperplane normals for many d-subsets of one point set, reusing the same
// big-integer storage for every subset.
//
// The (d-1) x d difference matrix is brought to reduced echelon form by
// fraction-free Gauss-Jordan elimination; afterwards every pivot equals the
// same value D, so with f the single free column the kernel vector is
// x_f = D, x_{pivot(r)} = -a[r][f].
struct NormalWorkspace {
    explicit NormalWorkspace(std::size_t dim)
        : d(dim), a((dim - 1) * dim), pivot_cols(dim - 1), normal(dim) {}

    // Fills normal (primitive) and offset; false when the points are
    // affinely dependent.
    bool compute(const std::vector<LatticePoint>& points, const std::vector<std::size_t>& idx) {
        const std::size_t m = d - 1;
        const LatticePoint& base = points[idx[0]];
        auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * d + c]; };
        for (std::size_t i = 1; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                mpz_sub(at(i - 1, j).get_mpz_t(), points[idx[i]][j].get_mpz_t(),
                        base[j].get_mpz_t());
            }
        }

        prev = 1;
        std::size_t r = 0;
        std::size_t free_col = d;
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t p = r;
            while (p < m && at(p, c) == 0) ++p;
            if (p == m) {
                if (free_col != d) return false;  // second free column: rank < d-1
                free_col = c;
                continue;
            }
            if (p != r) {
                for (std::size_t j = 0; j < d; ++j) mpz_swap(at(p, j).get_mpz_t(), at(r, j).get_mpz_t());
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == c) continue;
                    mpz_mul(scratch.get_mpz_t(), at(r, c).get_mpz_t(), at(i, j).get_mpz_t());
                    mpz_submul(scratch.get_mpz_t(), at(i, c).get_mpz_t(), at(r, j).get_mpz_t());
                    mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
                }
                at(i, c) = 0;
            }
            prev = at(r, c);
            pivot_cols[r] = c;
            if (++r == m) {
                if (free_col == d) free_col = c + 1;
                break;
            }
        }
        if (r < m || free_col >= d) return false;

        for (auto& v : normal) v = 0;
        normal[free_col] = prev;
        for (std::size_t i = 0; i < m; ++i) mpz_neg(normal[pivot_cols[i]].get_mpz_t(), at(i, free_col).get_mpz_t());

        g = 0;
        for (const auto& v : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g != 1) {
            for (auto& v : normal) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        offset = 0;
        for (std::size_t j = 0; j < d; ++j) {
            mpz_addmul(offset.get_mpz_t(), normal[j].get_mpz_t(), base[j].get_mpz_t());
        }
        return true;
    }

    std::size_t d;
    std::vector<Integer> a;
    std::vector<std::size_t> pivot_cols;
    IntVector normal;
    Integer offset;
    Integer prev;
    Integer scratch;
    Integer g;
    Integer acc;
};

}  // namespace

IntVector hyperplane_normal(std::span<const LatticePoint> points) {
    const std::size_t d = points.size();
    IntMatrix w(d - 1, d);
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) w(i - 1, j) = points[i][j] - points[0][j];
    }
    IntVector normal(d);
    for (std::size_t j = 0; j < d; ++j) {
        normal[j] = det_int(w.without_column(j));
        if (j % 2 == 1) normal[j] = -normal[j];
    }
    const Integer g = gcd_of(normal);
    if (g == 0) return {};
    if (g != 1) {
        for (auto& v : normal) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return normal;
}

Polytope build_polytope(std::vector<LatticePoint> points, std::size_t d) {
    if (d < 2) {
        throw Error(ErrorKind::Dimension, "polytopes must have dimension at least 2");
    }
    if (points.empty()) {
        throw Error(ErrorKind::Empty, "no points given");
    }
    for (const auto& pt : points) {
        if (pt.size() != d) {
            throw Error(ErrorKind::Dimension, "point length does not match dimension " +
                                                  std::to_string(d));
        }
    }
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < d + 1 || rank(difference_matrix(points, d)) < d) {
        throw Error(ErrorKind::LowerDimensional,
                    "points do not affinely span R^" + std::to_string(d));
    }

    const std::size_t n = points.size();
    std::vector<HalfSpace> facets;
    std::vector<std::vector<bool>> tight_sets;  // per facet: which points lie on it
    NormalWorkspace ws(d);
    std::vector<int> side(n);
    for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
        // Subsets inside a known facet can only reproduce it.
        for (const auto& tight : tight_sets) {
            if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return tight[i]; })) {
                return;
            }
        }
        if (!ws.compute(points, idx)) return;
        const Integer& offset = ws.offset;
        bool above = false;
        bool below = false;
        for (std::size_t i = 0; i < n; ++i) {
            ws.acc = 0;
            for (std::size_t j = 0; j < d; ++j) {
                mpz_addmul(ws.acc.get_mpz_t(), ws.normal[j].get_mpz_t(), points[i][j].get_mpz_t());
            }
            side[i] = cmp(ws.acc, offset);
            above = above || side[i] > 0;
            below = below || side[i] < 0;
            if (above && below) return;
        }
        HalfSpace f{ws.normal, offset};
        if (below) {
            for (auto& v : f.normal) v = -v;
            f.offset = -f.offset;
        }
        std::vector<bool> tight(n);
        for (std::size_t i = 0; i < n; ++i) tight[i] = side[i] == 0;
        tight_sets.push_back(std::move(tight));
        facets.push_back(std::move(f));
    });
    std::sort(facets.begin(), facets.end(), facet_less);

    Polytope p;
    p.dim_ = d;
    p.facets_ = std::move(facets);
    for (auto& pt : points) {
        std::vector<IntVector> tight;
        for (const auto& f : p.facets_) {
            if (f.evaluate(pt) == 0) tight.push_back(f.normal);
        }
        const bool extreme = tight.size() >= d && rank(IntMatrix::from_rows(tight)) == d;
        (extreme ? p.vertices_ : p.dropped_).push_back(std::move(pt));
    }
    return p;
}

Polytope dilate(const Polytope& p, const Integer& k) {
    if (k == 0) {
        throw Error(ErrorKind::DegenerateDilate, "dilation by 0 collapses the polytope to a point");
    }
    if (k < 0) {
        throw Error(ErrorKind::Precondition, "dilation factor must be positive");
    }
    Polytope q;
    q.dim_ = p.dim_;
    q.vertices_ = p.vertices_;
    for (auto& v : q.vertices_) {
        for (auto& c : v) c *= k;
    }
    q.facets_ = p.facets_;
    for (auto& f : q.facets_) f.offset *= k;
    return q;
}

bool contains(const Polytope& p, std::span<const Integer> x, bool strict) {
    if (x.size() != p.dim()) {
        throw Error(ErrorKind::Dimension, "point length does not match polytope dimension");
    }
    for (const auto& f : p.facets()) {
        const int s = sgn(f.evaluate(x));
        if (s < 0 || (strict && s == 0)) return false;
    }
    return true;
}

std::pair<LatticePoint, LatticePoint> bounding_box(const Polytope& p) {
    LatticePoint lo = p.vertices().front();
    LatticePoint hi = lo;
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
    return {std::move(lo), std::move(hi)};
}

// ---------------------------------------------------------------------------
// Vertex files

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Integer> parse_integers(const std::string& text, std::size_t line_no) {
    std::istringstream is(text);
    std::vector<Integer> out;
    std::string tok;
    while (is >> tok) {
        Integer z;
        if (z.set_str(tok, 10) != 0) parse_error(line_no, "not an integer: '" + tok + "'");
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

VertexFile parse_vertex_file(std::istream& in) {
    VertexFile vf;
    std::size_t expected = 0;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto values = parse_integers(line, line_no);
        if (!have_header) {
            if (values.size() != 2) parse_error(line_no, "header must be 'd n'");
            if (values[0] < 1 || values[1] < 0 || !values[0].fits_ulong_p() ||
                !values[1].fits_ulong_p()) {
                parse_error(line_no, "header values out of range");
            }
            vf.dim = values[0].get_ui();
            expected = values[1].get_ui();
            have_header = true;
            continue;
        }
        if (vf.points.size() == expected) parse_error(line_no, "more points than declared");
        if (values.size() != vf.dim) {
            parse_error(line_no, "expected " + std::to_string(vf.dim) + " coordinates, got " +
                                     std::to_string(values.size()));
        }
        vf.points.push_back(std::move(values));
    }
    if (!have_header) parse_error(line_no, "missing 'd n' header");
    if (vf.points.size() != expected) {
        parse_error(line_no, "declared " + std::to_string(expected) + " points, found " +
                                 std::to_string(vf.points.size()));
    }
    return vf;
}

VertexFile read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return parse_vertex_file(in);
}

std::string format_vertex_file(const Polytope& p) {
    std::ostringstream os;
    os << p.dim() << ' ' << p.vertices().size() << '\n';
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << v[i].get_str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ehrlatt
