#include "commands.hpp"
#include "config.hpp"

#include "vqc/spectral.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
    using namespace vqc::cli;

    CLI::App app{"Verlinde and quantum cohomology rings from the phase and free-fermion lattice models"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method = "lattice";
    std::string format = "json";
    double tolerance = 0;
    if (const char* dir = std::getenv("VQC_CACHE_DIR")) cfg.cache_dir = dir;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto sizes = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "rank n (fusion) or N - k (GW)")->required();
        sub->add_option("--k", cfg.k, "level (fusion) or particle number (GW)")->required();
    };
    auto table = [&](CLI::App* sub) {
        sizes(sub);
        common(sub);
        sub->add_option("--lhs", cfg.lhs, "restrict to products lambda * mu with this lambda, e.g. 2,1");
        sub->add_option("--rhs", cfg.rhs, "restrict to products with this mu");
        sub->add_option("--method", method, "lattice, spectral, recursion or all")
            ->check(CLI::IsMember({"lattice", "spectral", "recursion", "all"}));
        sub->add_option("--cache-dir", cfg.cache_dir, "table cache directory (default $VQC_CACHE_DIR)");
    };

    std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>> handlers;

    auto* fusion = app.add_subcommand("fusion", "structure constants of the fusion ring on H_k");
    table(fusion);
    handlers[fusion] = cmd_fusion;

    auto* gw = app.add_subcommand("gw", "Gromov-Witten invariants of Gr(k, n + k)");
    table(gw);
    handlers[gw] = cmd_gw;

    auto* smat = app.add_subcommand("smatrix", "Kac-Peterson S-matrix");
    sizes(smat);
    common(smat);
    smat->add_option("--tolerance", tolerance, "residual tolerance");
    handlers[smat] = cmd_smatrix;

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    sizes(verify);
    common(verify);
    verify->add_option("--suite", cfg.suite, "bethe, symmetry, recursion, cauchy, tq or all")
        ->required()
        ->check(CLI::IsMember({"bethe", "symmetry", "recursion", "cauchy", "tq", "all"}));
    verify->add_option("--tolerance", tolerance, "override every numeric tolerance");
    handlers[verify] = cmd_verify;

    auto* hier = app.add_subcommand("hierarchy", "GW tables of Gr(k, N) for all k built from the point");
    hier->add_option("--N", cfg.big_n, "N")->required();
    hier->add_option("--method", method, "recursion, lattice or all")
        ->check(CLI::IsMember({"lattice", "recursion", "all"}));
    common(hier);
    handlers[hier] = cmd_hierarchy;

    auto* norm = app.add_subcommand("normalize", "rewrite a semistandard tableau into strict normal form");
    auto* group = norm->add_option_group("input");
    group->add_option("--tableau", cfg.tableau, "rows separated by '/', entries by ','");
    group->add_option("--file", cfg.tableau_file, "file with one comma-separated row per line");
    group->require_option(1);
    norm->add_flag("--trace", cfg.trace, "print the insertion rules applied (pretty format)");
    common(norm);
    handlers[norm] = cmd_normalize;

    auto* dd = app.add_subcommand("dengdu", "words and aperiodic multipartitions");
    dd->add_option("--n", cfg.n, "number of letters");
    dd->add_option("--word", cfg.word, "letters separated by ',', e.g. 0,0,2,2");
    dd->add_option("--multipartition", cfg.multipartition, "components separated by '|', e.g. 4,2,2,2|3,1,1|4,4,2,2");
    common(dd);
    handlers[dd] = cmd_dengdu;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.method = parse_method(method);
        cfg.format = parse_format(format);
        for (auto* sub : app.get_subcommands()) {
            cfg.command = sub->get_name();
            if (sub == hier && sub->count("--method") == 0) cfg.method = Method::recursion;
            if (const auto* opt = sub->get_option_no_throw("--tolerance"); opt && opt->count() > 0)
                cfg.tolerance = tolerance;
            return handlers.at(sub)(cfg, std::cout, std::cerr);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const vqc::ResidualError& e) {
        std::cerr << "residual failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return exit_residual;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
