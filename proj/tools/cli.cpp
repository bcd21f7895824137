#include "cli.hpp"

#include <algorithm>
#include <random>

#include "CLI11.hpp"
#include "sweeprec/candidates.hpp"
#include "sweeprec/error.hpp"
#include "sweeprec/generate.hpp"
#include "sweeprec/io.hpp"
#include "sweeprec/oracle.hpp"
#include "sweeprec/reconstruct.hpp"
#include "sweeprec/sweep.hpp"

namespace sweeprec {

namespace {

struct Config {
    std::string input;
    std::string output;
    std::string property = "embedded";
    std::uint64_t seed = 1;
    int dim = 0;
    bool plain = false;
    bool check = false;
    std::string trace;
    std::string stats;
    std::string order;
    int gen_d = 2;
    int gen_n = 10;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ReconstructionMismatch: return kExitMismatch;
        case ErrorKind::NoPerpendicular:
        case ErrorKind::NotPerpendicular:
        case ErrorKind::VerificationFailed:
        case ErrorKind::InternalInvariantViolation: return kExitAssumption;
        case ErrorKind::InvalidInput:
        case ErrorKind::NotFound:
        case ErrorKind::Unsupported: return kExitMalformed;
    }
    return kExitMalformed;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty()) out << text;
    else write_text_file(cfg.output, text);
}

int cmd_validate(const Config& cfg, std::ostream& out) {
    const Property property = parse_property(cfg.property);
    SimplicialComplex k = parse_complex_json(read_text_file(cfg.input));
    std::size_t problems = 0;
    StructureReport structure = check_structure(k, property);
    for (const Simplex& s : structure.no_perpendicular) {
        out << "no perpendicular direction: " << format_simplex(s) << "\n";
        ++problems;
    }
    for (const PairViolation& p : structure.pairs) {
        if (p.a == p.b) out << "degenerate simplex: " << format_simplex(p.a) << "\n";
        else out << "not injective: " << format_simplex(p.a) << " " << format_simplex(p.b) << "\n";
        ++problems;
    }
    for (int i = 0; i < k.dim(); ++i) {
        for (const AssumptionViolation& v : check_assumption_reconstruction(k.skeleton(i), i, property)) {
            out << "ambiguous candidates at " << format_simplex(v.sigma) << ": " << format_simplex(v.tau) << " "
                << format_simplex(v.tau_prime) << "\n";
            ++problems;
        }
    }
    if (problems) return kExitAssumption;
    out << "ok: " << k.size() << " simplices, property " << to_string(property) << "\n";
    return kExitOk;
}

int cmd_sweep_order(const Config& cfg, std::ostream& out) {
    const Property property = parse_property(cfg.property);
    if (cfg.dim < 0) throw Error(ErrorKind::InvalidInput, "--dim must be non-negative");
    SimplicialComplex k = parse_complex_json(read_text_file(cfg.input));
    std::mt19937_64 rng(cfg.seed);
    auto orders = circle_reporting_orders(k, cfg.dim, property, rng);
    emit(cfg, out, sweeping_order_to_json(orders.at(static_cast<std::size_t>(cfg.dim)), !cfg.plain));
    return kExitOk;
}

int cmd_reconstruct(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Property property = parse_property(cfg.property);
    SimplicialComplex hidden = parse_complex_json(read_text_file(cfg.input));
    IndegreeOracle oracle(hidden, !cfg.trace.empty());
    std::mt19937_64 rng(cfg.seed);
    ReconResult result;
    try {
        result = reconstruct_all(oracle, hidden.skeleton(0), property, rng);
    } catch (const Error&) {
        if (!cfg.trace.empty()) {
            std::ostringstream trace;
            oracle.write_trace(trace);
            write_text_file(cfg.trace, trace.str());
        }
        throw;
    }
    if (!cfg.trace.empty()) {
        std::ostringstream trace;
        oracle.write_trace(trace);
        write_text_file(cfg.trace, trace.str());
    }
    if (!cfg.stats.empty()) write_text_file(cfg.stats, stats_to_json(result.stats));
    emit(cfg, out, complex_to_json(result.complex));
    if (cfg.check) {
        verify_reconstruction(result.complex, hidden);
        err << "check: reconstruction matches (" << result.stats.total_queries << " queries)\n";
    }
    return kExitOk;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
    emit(cfg, out, complex_to_json(gen_complex(cfg.gen_d, cfg.gen_n, cfg.seed)));
    return kExitOk;
}

int cmd_plot(const Config& cfg, std::ostream& out) {
    SimplicialComplex k = parse_complex_json(read_text_file(cfg.input));
    std::optional<SweepingOrder> order;
    if (!cfg.order.empty()) order = parse_sweeping_order_json(read_text_file(cfg.order), k);
    emit(cfg, out, plot_svg(k, order));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Sweeping orders and indegree-oracle reconstruction of simplicial complexes", "sweeprec"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check structure and reconstruction assumptions");
    validate->add_option("file", cfg.input, "complex JSON")->required();
    validate->add_option("--property", cfg.property, "facets-only | locally-injective | embedded");

    auto* sweep = app.add_subcommand("sweep-order", "print a circle-reporting sweeping order");
    sweep->add_option("file", cfg.input, "complex JSON")->required();
    sweep->add_option("--dim", cfg.dim, "dimension of the swept simplices")->required();
    sweep->add_option("--seed", cfg.seed, "seed for circle sampling");
    sweep->add_option("--property", cfg.property, "property used for candidate sets");
    sweep->add_flag("--plain", cfg.plain, "omit circles");
    sweep->add_option("-o,--output", cfg.output, "output file");

    auto* recon = app.add_subcommand("reconstruct", "rebuild a complex from its vertices and an indegree oracle");
    recon->add_option("file", cfg.input, "complex JSON acting as the hidden complex")->required();
    recon->add_option("--property", cfg.property, "facets-only | locally-injective | embedded");
    recon->add_option("--seed", cfg.seed, "seed for circle sampling");
    recon->add_flag("--check", cfg.check, "compare the result with the hidden complex");
    recon->add_option("--trace", cfg.trace, "write the query trace as JSON lines");
    recon->add_option("--stats", cfg.stats, "write query statistics as JSON");
    recon->add_option("-o,--output", cfg.output, "output file");

    auto* gen = app.add_subcommand("gen", "generate a random embedded complex");
    gen->add_option("--d", cfg.gen_d, "ambient dimension (2 or 3)")->required();
    gen->add_option("--n", cfg.gen_n, "number of vertices")->required();
    gen->add_option("--seed", cfg.seed, "random seed")->required();
    gen->add_option("-o,--output", cfg.output, "output file");

    auto* plot = app.add_subcommand("plot", "draw a complex as SVG");
    plot->add_option("file", cfg.input, "complex JSON")->required();
    plot->add_option("--order", cfg.order, "sweeping order JSON to annotate");
    plot->add_option("-o,--output", cfg.output, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (sweep->parsed()) return cmd_sweep_order(cfg, out);
        if (recon->parsed()) return cmd_reconstruct(cfg, out, err);
        if (gen->parsed()) return cmd_gen(cfg, out);
        if (plot->parsed()) return cmd_plot(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kExitMalformed;
}

}  // namespace sweeprec
