#include "ehrlatt/commands.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "ehrlatt/facet_oracle.hpp"
#include "ehrlatt/reflexivity.hpp"
#include "ehrlatt/surface.hpp"

namespace ehrlatt::cli {

namespace {

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return to_string(q); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const LatticePoint& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].get_str();
    }
    return s + ')';
}

std::string str(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s + ')';
}

template <typename Seq>
std::string join_points(const Seq& pts) {
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty()) s += ' ';
        s += str(p);
    }
    return s;
}

struct Input {
    Report report;
    Polytope polytope;
};

Input load(const std::string& command, const std::string& contents, const CommandOptions& opts) {
    std::istringstream is(contents);
    VertexFile vf = parse_vertex_file(is);
    Input in{{command, content_digest(contents), {}, {}},
             build_polytope(std::move(vf.points), vf.dim)};
    const Polytope& p = in.polytope;
    in.report.add("dimension", std::to_string(p.dim()));
    in.report.add("vertices", std::to_string(p.vertices().size()));
    in.report.add("facets", std::to_string(p.facets().size()));
    if (opts.verbose) {
        if (!p.dropped_points().empty()) {
            in.report.diagnostics.push_back("dropped " + std::to_string(p.dropped_points().size()) +
                                            " non-extreme input point(s): " +
                                            join_points(p.dropped_points()));
        }
        in.report.diagnostics.push_back("vertex list: " + join_points(p.vertices()));
    }
    return in;
}

const char* const kMisprintNote =
    "d=5 closed form: the variant (b(2P) - 4b(P) - 6)/12 is off by exactly 1; "
    "the determinant quotient expands to (b(2P) - 4b(P) + 6)/12";

Rational add_closed_form(Report& r, const Polytope& p, const CountOptions& counting) {
    const std::size_t d = p.dim();
    const Integer b1 = count_triple(p, 1, counting).boundary;
    const Integer b2 = d >= 4 ? count_triple(p, 2, counting).boundary : Integer(0);
    Rational closed = surface_closed_form(d, b1, b2);
    r.add("surface_closed", str(closed));
    if (d == 5) {
        r.add("surface_closed_misprint", str(surface_closed_form_d5_misprint(b1, b2)));
        r.diagnostics.emplace_back(kMisprintNote);
    }
    return closed;
}

}  // namespace

void Report::add(std::string key, std::string value) {
    results.emplace_back(std::move(key), std::move(value));
}

const std::string* Report::find(const std::string& key) const {
    for (const auto& [k, v] : results) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CommandResult cmd_count(const std::string& contents, const CommandOptions& opts) {
    Input in = load("count", contents, opts);
    const CountTriple c = count_triple(in.polytope, opts.k, opts.counting);
    in.report.add("k", std::to_string(c.k));
    in.report.add("total", str(c.total));
    in.report.add("interior", str(c.interior));
    in.report.add("boundary", str(c.boundary));
    return {std::move(in.report), Ok};
}

CommandResult cmd_surface(const std::string& contents, const CommandOptions& opts) {
    const std::string& m = opts.method;
    if (m != "det" && m != "ehrhart" && m != "direct" && m != "closed") {
        throw Error(ErrorKind::Precondition, "unknown surface method '" + m + "'");
    }
    Input in = load("surface", contents, opts);
    const Polytope& p = in.polytope;
    Report& r = in.report;
    r.add("method", m);
    if (m == "det") {
        const std::size_t d = p.dim();
        const SurfaceSystem sys =
            build_system(dilation_series(p, system_size(d), opts.counting), d);
        r.add("t", std::to_string(sys.t));
        r.add("numerator_matrix", sys.numerator.to_string());
        r.add("denominator_matrix", sys.denominator.to_string());
        r.add("det_numerator", str(det_int(sys.numerator)));
        r.add("det_denominator", str(det_int(sys.denominator)));
        r.add("surface", str(sys.surface()));
    } else if (m == "ehrhart") {
        const EhrhartPolynomial e = interpolate(p, opts.counting);
        r.add("e_" + std::to_string(p.dim() - 1), str(e.coeff(p.dim() - 1)));
        r.add("surface", str(surface_from_ehrhart(e)));
    } else if (m == "direct") {
        r.add("surface", str(surface_direct(p)));
    } else {
        if (p.dim() > 5) {
            throw Error(ErrorKind::Dimension, "closed forms exist only for d <= 5");
        }
        r.add("surface", str(add_closed_form(r, p, opts.counting)));
    }
    return {std::move(in.report), Ok};
}

CommandResult cmd_ehrhart(const std::string& contents, const CommandOptions& opts) {
    Input in = load("ehrhart", contents, opts);
    const Polytope& p = in.polytope;
    Report& r = in.report;
    const EhrhartPolynomial e = interpolate(p, opts.counting);
    for (std::size_t i = 0; i <= e.dim(); ++i) r.add("e_" + std::to_string(i), str(e.coeff(i)));
    r.add("volume", str(volume_from_ehrhart(e)));
    r.add("surface", str(surface_from_ehrhart(e)));
    r.add("constant_term_is_one", str(check_constant_term(e)));
    bool ok = check_constant_term(e);
    for (unsigned k = 1; k <= 3; ++k) {
        const bool rec = check_reciprocity(e, p, k, opts.counting);
        ok = ok && rec;
        r.add("reciprocity_k" + std::to_string(k), str(rec));
    }
    return {std::move(in.report), ok ? Ok : Disagreement};
}

CommandResult cmd_reflexive(const std::string& contents, const CommandOptions& opts) {
    Input in = load("reflexive", contents, opts);
    const Polytope& p = in.polytope;
    Report& r = in.report;
    const bool interior = origin_in_interior(p);
    const bool fano = is_fano(p);
    const bool reflexive = is_reflexive(p);
    r.add("origin_interior", str(interior));
    r.add("fano", str(fano));
    r.add("reflexive", str(reflexive));
    if (interior) {
        const DualDescription dual = dual_polytope(p);
        r.add("dual_vertices", join_points(dual.vertices));
        r.add("dual_is_lattice", str(dual.is_lattice));
    } else {
        r.diagnostics.emplace_back("origin is not strictly interior; the dual is unbounded");
    }
    const Rational d(static_cast<unsigned long>(p.dim()));
    const Rational volume = volume_direct(p);
    const Rational surface = surface_direct(p);
    r.add("volume", str(volume));
    r.add("surface_over_d", str(surface / d));
    r.add("corollary_volume", str(corollary_volume(p, opts.counting)));
    const bool identity = volume == surface / d;
    r.add("volume_identity", str(identity));
    int code = Ok;
    if (fano) {
        const bool consistent = identity == reflexive;
        r.add("fano_verdict", consistent ? "consistent" : "inconsistent");
        if (!consistent) code = Disagreement;
    } else {
        r.add("fano_verdict", "not-applicable");
    }
    return {std::move(in.report), code};
}

CommandResult cmd_compare(const std::string& contents, const CommandOptions& opts) {
    Input in = load("compare", contents, opts);
    const Polytope& p = in.polytope;
    Report& r = in.report;
    const std::size_t d = p.dim();

    const Rational det = surface_from_determinants(p, opts.counting);
    const EhrhartPolynomial e = interpolate(p, opts.counting);
    const Rational ehr = surface_from_ehrhart(e);
    const Rational direct = surface_direct(p);
    r.add("surface_det", str(det));
    r.add("surface_ehrhart", str(ehr));
    r.add("surface_direct", str(direct));
    std::vector<std::pair<std::string, Rational>> values{
        {"det", det}, {"ehrhart", ehr}, {"direct", direct}};
    if (d <= 5) {
        values.emplace_back("closed", add_closed_form(r, p, opts.counting));
    }

    bool agree = true;
    for (const auto& [name, v] : values) agree = agree && v == direct;
    r.add("agree", str(agree));
    if (!agree) {
        std::string diff = "disagreement:";
        for (const auto& [name, v] : values) diff += " " + name + "=" + str(v);
        r.diagnostics.push_back(diff);
    }
    if (ehr != direct) {
        r.diagnostics.push_back("e_(d-1)/2 reading of the surface: " +
                                str(e.coeff(d - 1) / 2));
    }
    return {std::move(in.report), agree ? Ok : Disagreement};
}

CommandResult run_command(const std::string& command, const std::string& contents,
                          const CommandOptions& opts) {
    try {
        if (command == "count") return cmd_count(contents, opts);
        if (command == "surface") return cmd_surface(contents, opts);
        if (command == "ehrhart") return cmd_ehrhart(contents, opts);
        if (command == "reflexive") return cmd_reflexive(contents, opts);
        if (command == "compare") return cmd_compare(contents, opts);
        throw Error(ErrorKind::Precondition, "unknown command '" + command + "'");
    } catch (const Error& err) {
        CommandResult res{{command, content_digest(contents), {}, {}},
                          err.kind() == ErrorKind::InternalConsistency ? Disagreement : InputError};
        res.report.add("error", std::string(to_string(err.kind())));
        res.report.diagnostics.emplace_back(err.what());
        return res;
    }
}

std::string render(const Report& report, OutputFormat format) {
    if (format == OutputFormat::Structured) {
        nlohmann::ordered_json doc;
        doc["command"] = report.command;
        doc["input_digest"] = report.input_digest;
        auto& results = doc["results"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.results) results[k] = v;
        doc["diagnostics"] = report.diagnostics;
        return doc.dump(2) + '\n';
    }
    std::ostringstream os;
    os << "command: " << report.command << '\n';
    os << "input_digest: " << report.input_digest << '\n';
    for (const auto& [k, v] : report.results) os << k << ": " << v << '\n';
    for (const auto& note : report.diagnostics) os << "note: " << note << '\n';
    return os.str();
}

}  // namespace ehrlatt::cli
