// ehrlatt: lattice point counts, Ehrhart polynomials, lattice surface area
// and reflexivity of lattice polytopes given by vertex files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ehrlatt/commands.hpp"
#include "ehrlatt/polytope.hpp"

int main(int argc, char** argv) {
    using namespace ehrlatt;

    CLI::App app{"Exact Ehrhart and lattice surface area computations", "ehrlatt"};
    std::string command;
    std::string path;
    std::string output = "text";
    std::string emit_path;
    cli::CommandOptions opts;

    app.add_option("command", command, "count | surface | ehrhart | reflexive | compare")
        ->required()
        ->check(CLI::IsMember({"count", "surface", "ehrhart", "reflexive", "compare"}));
    app.add_option("file", path, "vertex file ('d n' header, n rows of d integers)")->required();
    app.add_option("--k", opts.k, "dilation factor for count")->check(CLI::PositiveNumber);
    app.add_option("--method", opts.method, "surface method")
        ->check(CLI::IsMember({"det", "ehrhart", "direct", "closed"}));
    app.add_option("--output", output, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--verbose", opts.verbose, "report dropped points and the vertex list");
    app.add_option("--threads", opts.counting.threads, "counting threads (0 = all cores)");
    app.add_option("--emit-vertices", emit_path, "write the normalized vertex file here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::InputError;
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "ehrlatt: cannot open '" << path << "'\n";
        return cli::InputError;
    }
    const std::string contents{std::istreambuf_iterator<char>(in), {}};

    const cli::CommandResult result = cli::run_command(command, contents, opts);
    const auto format =
        output == "structured" ? cli::OutputFormat::Structured : cli::OutputFormat::Text;
    std::cout << cli::render(result.report, format);
    if (result.exit_code == cli::InputError) {
        for (const auto& note : result.report.diagnostics) std::cerr << "ehrlatt: " << note << '\n';
        return result.exit_code;
    }

    if (!emit_path.empty()) {
        std::istringstream is(contents);
        VertexFile vf = parse_vertex_file(is);
        std::ofstream out(emit_path);
        out << format_vertex_file(build_polytope(std::move(vf.points), vf.dim));
        if (!out) {
            std::cerr << "ehrlatt: cannot write '" << emit_path << "'\n";
            return cli::InputError;
        }
    }
    return result.exit_code;
}
