#include "cli.hpp"

#include "relcoh/relcoh.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace relcoh::cli {

namespace {

struct ComputeOptions {
    std::string mesh;
    std::string contacts;
    std::string output;
    std::string vtk;
    bool verify = false;
    int oracle_cap = OracleOptions{}.max_edges;
};

struct BenchOptions {
    std::string family = "builtin:annulus";
    int levels = 5;
    int repetitions = 3;
    int fit_from = 2;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ParseError(path, 0, "cannot open for writing");
    }
    file << text;
}

int compute(const ComputeOptions& o, std::ostream& out, std::ostream& err)
{
    const auto complex = SurfaceComplex::build(read_off_file(o.mesh));
    std::vector<EdgeId> contacts;
    if (!o.contacts.empty()) {
        contacts = read_contacts_file(o.contacts, complex);
    }
    const auto gens = compute_all(complex, contacts);
    for (const auto& w : gens.warnings) {
        err << "warning: " << w << '\n';
    }

    std::optional<VerificationReport> report;
    if (o.verify) {
        const auto bp = classify_boundary(complex, contacts);
        try {
            report = verify(complex, bp, gens, OracleOptions{o.oracle_cap});
        } catch (const OracleLimitError& ex) {
            err << "verification not run: " << ex.what() << '\n';
            return kVerificationFailure;
        }
    }

    const auto text = format_report(complex, gens, report ? &*report : nullptr);
    if (o.output.empty() || o.output == "-") {
        out << text;
    } else {
        write_file(o.output, text);
    }
    if (!o.vtk.empty()) {
        std::ostringstream vtk;
        write_vtk_overlay(vtk, complex, gens);
        write_file(o.vtk, vtk.str());
    }
    if (report && !report->passed()) {
        for (const auto& f : report->failures) {
            err << "verification failed: " << f << '\n';
        }
        return kVerificationFailure;
    }
    return kOk;
}

int info(const std::string& path, std::ostream& out)
{
    const auto complex = SurfaceComplex::build(read_off_file(path));
    const auto cycles = boundary_components(complex);
    const auto labels = label_components(complex);
    OracleInput input;
    input.vertex_count = complex.vertex_count();
    input.faces.assign(complex.faces().begin(), complex.faces().end());
    out << "V=" << complex.vertex_count() << " E=" << complex.edge_count() << " F=" << complex.face_count()
        << " χ=" << euler_characteristic(complex) << " boundary components=" << cycles.size()
        << " orientable=" << (is_orientable(input) ? "yes" : "no") << '\n';
    out << "connected components=" << labels.count << '\n';
    return kOk;
}

MeshData bench_family(const std::string& family)
{
    if (family == "builtin:annulus") {
        return meshgen::make_annulus(16, 4);
    }
    if (family == "builtin:torus") {
        return meshgen::make_torus(8, 8);
    }
    return read_off_file(family);
}

int bench(const BenchOptions& o, std::ostream& out)
{
    const auto samples = measure_scaling(bench_family(o.family), o.levels, o.repetitions);
    out << std::left << std::setw(7) << "level" << std::setw(10) << "V" << std::setw(10) << "E" << std::setw(10) << "F"
        << "seconds\n";
    for (const auto& s : samples) {
        out << std::left << std::setw(7) << s.level << std::setw(10) << s.vertices << std::setw(10) << s.edges
            << std::setw(10) << s.faces << std::scientific << std::setprecision(3) << s.seconds << std::defaultfloat
            << '\n';
    }
    const int from = std::min(o.fit_from, std::max(o.levels - 1, 0));
    if (o.levels - from >= 1) {
        out << "fitted exponent (levels " << from << ".." << o.levels << "): " << std::fixed << std::setprecision(3)
            << fit_loglog_exponent(samples, from) << std::defaultfloat << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Relative cohomology generators of triangulated surfaces", "relcoh"};
    app.require_subcommand(1);

    ComputeOptions compute_opts;
    auto* compute_cmd = app.add_subcommand("compute", "Compute generators and write a JSON report");
    compute_cmd->add_option("mesh", compute_opts.mesh, "Triangle mesh (OFF)")->required();
    compute_cmd->add_option("-c,--contacts", compute_opts.contacts, "Contact edges, one 'i j' pair per line");
    compute_cmd->add_option("-o,--output", compute_opts.output, "Report path (default: stdout)");
    compute_cmd->add_flag("--verify", compute_opts.verify, "Check the result with the exact oracle");
    compute_cmd->add_option("--oracle-cap", compute_opts.oracle_cap, "Largest edge count the oracle accepts")
        ->check(CLI::PositiveNumber);
    compute_cmd->add_option("--vtk", compute_opts.vtk, "Write generator supports as VTK polylines");

    std::string info_mesh;
    auto* info_cmd = app.add_subcommand("info", "Print cell counts and topology of a mesh");
    info_cmd->add_option("mesh", info_mesh, "Triangle mesh (OFF)")->required();

    BenchOptions bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "Time the pipeline on a refinement family");
    bench_cmd->add_option("family", bench_opts.family, "builtin:annulus, builtin:torus or an OFF file");
    bench_cmd->add_option("-l,--levels", bench_opts.levels, "Number of 1->4 refinements")->check(CLI::Range(0, 8));
    bench_cmd->add_option("-r,--repetitions", bench_opts.repetitions, "Runs per level (fastest kept)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--fit-from", bench_opts.fit_from, "First level used in the exponent fit")
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n' << app.help();
        return kParseFailure;
    }

    try {
        if (*compute_cmd) {
            return compute(compute_opts, out, err);
        }
        if (*info_cmd) {
            return info(info_mesh, out);
        }
        return bench(bench_opts, out);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kParseFailure;
    } catch (const TopologyError& ex) {
        err << "error: " << ex.what() << '\n';
        return kTopologyFailure;
    } catch (const ConsistencyError& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kTopologyFailure;
    }
}

} // namespace relcoh::cli
