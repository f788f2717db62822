#include "commands.hpp"

#include "tables.hpp"

#include "vqc/boson.hpp"
#include "vqc/plactic.hpp"
#include "vqc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace vqc::cli {

namespace {

double clean(double x) { return std::abs(x) < 5e-13 ? 0.0 : x; }

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", clean(x));
    return buf;
}

std::string join(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_residual(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::optional<Partition> parse_box_partition(const std::string& text, int rows, int cols, const char* what) {
    if (text.empty()) return std::nullopt;
    Partition p;
    try {
        p = Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "': " + e.what());
    }
    if (!p.fits(rows, cols))
        throw UsageError(std::string(what) + " (" + p.str() + ") does not fit the " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " box");
    return p;
}

std::vector<Method> expand(Method m, TableKind kind) {
    if (m != Method::all) return {m};
    if (kind == TableKind::fusion) return {Method::lattice, Method::spectral};
    return {Method::lattice, Method::spectral, Method::recursion};
}

int table_command(const RunConfig& cfg, TableKind kind, std::ostream& out, std::ostream& err) {
    const int rows = kind == TableKind::fusion ? cfg.n - 1 : cfg.k;
    const int cols = kind == TableKind::fusion ? cfg.k : cfg.n;
    if (kind == TableKind::fusion && cfg.n < 2) throw UsageError("fusion tables need n >= 2");
    if (cfg.n < 1 || cfg.k < 0) throw UsageError("need n >= 1 and k >= 0");
    const EntryFilter filter{parse_box_partition(cfg.lhs, rows, cols, "lhs"),
                             parse_box_partition(cfg.rhs, rows, cols, "rhs")};

    const std::vector<Method> methods = expand(cfg.method, kind);
    std::vector<CoeffTable> tables;
    for (Method m : methods) tables.push_back(load_or_compute_table(cfg, kind, m));

    bool agreement = true;
    for (std::size_t i = 1; i < tables.size(); ++i) {
        const auto diffs = table_differences(tables.front(), tables[i]);
        if (diffs.empty()) continue;
        agreement = false;
        err << method_name(methods.front()) << " and " << method_name(methods[i]) << " disagree on " << diffs.size()
            << " entries\n";
        for (std::size_t j = 0; j < std::min<std::size_t>(diffs.size(), 8); ++j) err << "  " << diffs[j] << '\n';
    }

    const CoeffTable& table = tables.front();
    switch (cfg.format) {
        case Format::json: {
            Json params{{"kind", kind == TableKind::fusion ? "fusion" : "gw"}, {"n", cfg.n}, {"k", cfg.k}};
            if (kind == TableKind::gw) params["N"] = cfg.n + cfg.k;
            if (filter.lhs) params["lhs"] = filter.lhs->str();
            if (filter.rhs) params["rhs"] = filter.rhs->str();
            Json used = Json::array();
            for (Method m : methods) used.push_back(method_name(m));
            const Json doc{{"params", std::move(params)},
                           {"entries", entries_json(table, filter)},
                           {"method", method_name(cfg.method)},
                           {"methods", std::move(used)},
                           {"agreement", agreement}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << entries_csv(table, filter);
            break;
        case Format::pretty:
            out << entries_pretty(table, filter);
            if (methods.size() > 1) out << "methods agree: " << (agreement ? "yes" : "no") << '\n';
            break;
    }
    return agreement ? exit_ok : exit_disagreement;
}

struct Measurement {
    std::string name;
    double value = 0;
    double tolerance = 0;
    bool ok() const { return value <= tolerance; }
};

struct SuiteResult {
    std::vector<Measurement> residuals;
    std::vector<IdentityReport> identities;
    Json extra = Json::object();
};

void require_spectral(const RunConfig& cfg) {
    if (cfg.n + cfg.k > kSpectralMaxSize)
        throw UsageError("spectral methods accept n + k <= " + std::to_string(kSpectralMaxSize));
    if (cfg.n < 1 || cfg.k < 0) throw UsageError("need n >= 1 and k >= 0");
}

SuiteResult suite_bethe(const RunConfig& cfg) {
    require_spectral(cfg);
    const double tol_roots = cfg.tolerance.value_or(1e-9);
    const double tol_vectors = cfg.tolerance.value_or(1e-8);
    SuiteResult res;

    double bae = 0, bae2 = 0, eigen = 0, transfer = 0;
    std::mt19937 rng(20240601U);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::vector<Complex> us;
    for (int i = 0; i < 5; ++i) us.push_back(std::polar(0.5, angle(rng)));
    for (const auto& r : bethe_roots_boson(cfg.n, cfg.k)) {
        bae = std::max(bae, bae_residual(r));
        bae2 = std::max(bae2, bae2_residual(r));
        eigen = std::max(eigen, boson_eigen_residual(r));
        for (const Complex& u : us) transfer = std::max(transfer, verify_transfer_eigen(r, u));
    }
    const NormReport boson_norms = bethe_norm_check(cfg.n, cfg.k);

    double freebae = 0, ideal = 0, feigen = 0;
    for (const auto& r : bethe_roots_fermion(cfg.n, cfg.k)) {
        freebae = std::max(freebae, freebae_residual(r));
        ideal = std::max(ideal, ideal_residual(r));
        feigen = std::max(feigen, fermion_eigen_residual(r));
    }
    const NormReport fermion_norms = fermion_norm_report(cfg.n, cfg.k);

    res.residuals = {
        {"boson Bethe equations", bae, tol_roots},
        {"boson h-relations", bae2, tol_roots},
        {"boson e_r eigenvalues", eigen, tol_vectors},
        {"transfer matrix eigenvalue", transfer, tol_vectors},
        {"boson norm relative error", boson_norms.max_relative_error, tol_vectors},
        {"boson orthogonality", boson_norms.max_orthogonality, tol_vectors},
        {"fermion Bethe equations", freebae, tol_roots},
        {"fermion ideal relations", ideal, tol_roots},
        {"fermion e_r/h_r eigenvalues", feigen, tol_vectors},
        {"fermion orthogonality", fermion_norms.max_orthogonality, tol_vectors},
    };
    Json norms = Json::array();
    for (std::size_t i = 0; i < fermion_norms.sigmas.size(); ++i)
        norms.push_back(Json{{"sigma", fermion_norms.sigmas[i].str()}, {"norm", format_double(fermion_norms.measured[i])}});
    res.extra["fermion_norms"] = std::move(norms);
    return res;
}

SuiteResult suite_symmetry(const RunConfig& cfg) {
    SuiteResult res;
    const CoeffTable& gw = gw_table_cached(cfg.k, cfg.n + cfg.k);
    for (GwIdentity w : {GwIdentity::s3, GwIdentity::levelrank, GwIdentity::rotation, GwIdentity::curious})
        res.identities.push_back(gw_symmetry_check(gw, w));
    if (cfg.n >= 2) {
        const CoeffTable fusion = fusion_table_lattice(cfg.n, cfg.k);
        for (FusionIdentity w : {FusionIdentity::s3, FusionIdentity::rotation, FusionIdentity::conjugation})
            res.identities.push_back(fusion_symmetry_check(fusion, w));
    }
    return res;
}

SuiteResult suite_recursion(const RunConfig& cfg) {
    const int big_n = cfg.n + cfg.k;
    if (big_n < 1 || big_n > 12) throw UsageError("the recursion suite accepts 1 <= n + k <= 12");
    SuiteResult res;
    res.identities.push_back(gw_recursion_check(cfg.k, big_n));
    res.identities.push_back(hierarchy_check(big_n));
    return res;
}

SuiteResult suite_cauchy(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("the Cauchy suite needs n >= 2");
    SuiteResult res;
    const std::vector<std::vector<int>> alphas = {{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 2}, {1, 1, 1}};
    for (const auto& alpha : alphas) {
        IdentityReport r = cauchy_kostka_check(cfg.n, cfg.k, alpha);
        r.name += " alpha=" + join(alpha, ',');
        res.identities.push_back(std::move(r));
    }
    return res;
}

SuiteResult suite_tq(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("the TQ suite needs n >= 2");
    SuiteResult res;
    res.identities.push_back(tq_relation_check(cfg.n, cfg.k));
    res.identities.push_back(phi_transfer_check(cfg.n, cfg.k));
    return res;
}

Json rows_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) rows.push_back(r);
    return rows;
}

GenWord parse_word(const std::string& text, int n) {
    GenWord w;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty()) continue;
        int letter = 0;
        try {
            std::size_t used = 0;
            letter = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("cannot parse letter '" + token + "'");
        }
        if (letter < 0 || letter >= n) throw UsageError("letter " + token + " is outside 0.." + std::to_string(n - 1));
        w.push_back(letter);
    }
    return w;
}

MultiPartition parse_multipartition(const std::string& text) {
    std::vector<Partition> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '|')) {
        try {
            parts.push_back(Partition::parse(token));
        } catch (const std::exception& e) {
            throw UsageError("cannot parse component '" + token + "': " + e.what());
        }
    }
    if (!text.empty() && text.back() == '|') parts.emplace_back();
    return MultiPartition(std::move(parts));
}

}  // namespace

int cmd_fusion(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return table_command(cfg, TableKind::fusion, out, err);
}

int cmd_gw(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return table_command(cfg, TableKind::gw, out, err);
}

int cmd_smatrix(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    require_spectral(cfg);
    if (cfg.n < 2) throw UsageError("the S-matrix needs n >= 2");
    const ComplexMatrix s = smatrix(cfg.n, cfg.k);
    const auto weights = affine_weights(cfg.n, cfg.k);
    ComplexMatrix identity(s.size);
    for (int i = 0; i < s.size; ++i) identity(i, i) = 1;
    const double unitarity = max_abs_difference(s * adjoint(s), identity);
    double symmetry = 0;
    for (int i = 0; i < s.size; ++i)
        for (int j = 0; j < s.size; ++j) symmetry = std::max(symmetry, std::abs(s(i, j) - s(j, i)));
    const double tol = cfg.tolerance.value_or(1e-9);

    switch (cfg.format) {
        case Format::json: {
            Json labels = Json::array();
            Json parts = Json::array();
            Json re = Json::array();
            Json im = Json::array();
            for (int i = 0; i < s.size; ++i) {
                labels.push_back(weights[static_cast<std::size_t>(i)].str());
                parts.push_back(weight_to_partition(weights[static_cast<std::size_t>(i)]).str());
                Json rr = Json::array();
                Json ri = Json::array();
                for (int j = 0; j < s.size; ++j) {
                    rr.push_back(std::stod(format_double(s(i, j).real())));
                    ri.push_back(std::stod(format_double(s(i, j).imag())));
                }
                re.push_back(std::move(rr));
                im.push_back(std::move(ri));
            }
            const Json doc{{"params", {{"n", cfg.n}, {"k", cfg.k}}},
                           {"weights", std::move(labels)},
                           {"partitions", std::move(parts)},
                           {"real", std::move(re)},
                           {"imag", std::move(im)},
                           {"unitarity_residual", unitarity},
                           {"symmetry_residual", symmetry}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "row,col,re,im\n";
            for (int i = 0; i < s.size; ++i)
                for (int j = 0; j < s.size; ++j)
                    out << '"' << weights[static_cast<std::size_t>(i)].str() << "\",\""
                        << weights[static_cast<std::size_t>(j)].str() << "\"," << format_double(s(i, j).real()) << ','
                        << format_double(s(i, j).imag()) << '\n';
            break;
        case Format::pretty:
            for (int i = 0; i < s.size; ++i) {
                out << weights[static_cast<std::size_t>(i)].str() << ':';
                for (int j = 0; j < s.size; ++j) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", clean(s(i, j).real()), clean(s(i, j).imag()));
                    out << buf;
                }
                out << '\n';
            }
            out << "unitarity residual " << format_residual(unitarity) << ", symmetry residual "
                << format_residual(symmetry) << '\n';
            break;
    }
    return unitarity <= tol && symmetry <= tol ? exit_ok : exit_residual;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    std::vector<std::string> suites;
    if (cfg.suite == "all") suites = {"bethe", "symmetry", "recursion", "cauchy", "tq"};
    else suites = {cfg.suite};

    bool residual_failed = false;
    bool identity_failed = false;
    Json report = Json::array();
    std::string text;
    for (const auto& name : suites) {
        SuiteResult res;
        if (name == "bethe") res = suite_bethe(cfg);
        else if (name == "symmetry") res = suite_symmetry(cfg);
        else if (name == "recursion") res = suite_recursion(cfg);
        else if (name == "cauchy") res = suite_cauchy(cfg);
        else if (name == "tq") res = suite_tq(cfg);
        else throw UsageError("unknown suite '" + name + "'");

        Json checks = Json::array();
        for (const auto& m : res.residuals) {
            residual_failed = residual_failed || !m.ok();
            checks.push_back(Json{{"name", m.name},
                                  {"residual", m.value},
                                  {"tolerance", m.tolerance},
                                  {"ok", m.ok()}});
            text += "[" + name + "] " + m.name + ": " + format_residual(m.value) + " (tolerance " +
                    format_residual(m.tolerance) + ") " + (m.ok() ? "ok" : "FAIL") + '\n';
        }
        for (const auto& r : res.identities) {
            identity_failed = identity_failed || !r.ok();
            checks.push_back(Json{{"name", r.name},
                                  {"checked", r.checked},
                                  {"failures", r.failures},
                                  {"messages", r.messages},
                                  {"ok", r.ok()}});
            text += "[" + name + "] " + r.name + ": " + std::to_string(r.checked) + " checked, " +
                    std::to_string(r.failures) + " failed\n";
            for (const auto& msg : r.messages) text += "    " + msg + '\n';
        }
        Json entry{{"suite", name}, {"checks", std::move(checks)}};
        for (const auto& [key, value] : res.extra.items()) entry[key] = value;
        report.push_back(std::move(entry));
    }
    const bool ok = !residual_failed && !identity_failed;
    if (cfg.format == Format::pretty) {
        out << text << (ok ? "all checks passed" : "some checks failed") << '\n';
    } else if (cfg.format == Format::csv) {
        out << "suite,check,ok\n";
        for (const auto& s : report)
            for (const auto& c : s["checks"])
                out << s["suite"].get<std::string>() << ",\"" << c["name"].get<std::string>() << "\","
                    << (c["ok"].get<bool>() ? "true" : "false") << '\n';
    } else {
        const Json doc{{"params", {{"n", cfg.n}, {"k", cfg.k}, {"suite", cfg.suite}}},
                       {"suites", std::move(report)},
                       {"ok", ok}};
        out << doc.dump(2) << '\n';
    }
    if (residual_failed) return exit_residual;
    return identity_failed ? exit_disagreement : exit_ok;
}

int cmd_hierarchy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const int big_n = cfg.big_n;
    if (big_n < 1 || big_n > 12) throw UsageError("the hierarchy algorithm accepts 1 <= N <= 12");
    if (cfg.method == Method::spectral) throw UsageError("the hierarchy command supports recursion, lattice and all");
    const bool recursive = cfg.method != Method::lattice;
    const bool compare = cfg.method == Method::all;

    std::vector<CoeffTable> tables;
    if (recursive) tables = hierarchy_build(big_n);
    else
        for (int k = 0; k <= big_n; ++k) tables.push_back(gw_table_lattice(k, big_n));

    bool agreement = true;
    if (compare) {
        for (int k = 0; k <= big_n; ++k) {
            const auto diffs = table_differences(tables[static_cast<std::size_t>(k)], gw_table_lattice(k, big_n));
            if (diffs.empty()) continue;
            agreement = false;
            err << "level " << k << ": " << diffs.size() << " entries differ from the lattice table\n";
        }
    }

    switch (cfg.format) {
        case Format::json: {
            Json levels = Json::array();
            for (const auto& t : tables) levels.push_back(Json{{"k", t.k}, {"entries", entries_json(t, {})}});
            const Json doc{{"params", {{"N", big_n}}},
                           {"levels", std::move(levels)},
                           {"method", method_name(cfg.method)},
                           {"agreement", agreement}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv: {
            out << "k,lambda,mu,nu,d,c\n";
            for (const auto& t : tables) {
                const std::string body = entries_csv(t, {});
                std::istringstream lines(body);
                std::string line;
                std::getline(lines, line);
                while (std::getline(lines, line)) out << t.k << ',' << line << '\n';
            }
            break;
        }
        case Format::pretty:
            for (const auto& t : tables) out << "# k = " << t.k << '\n' << entries_pretty(t, {});
            if (compare) out << "recursion and lattice agree: " << (agreement ? "yes" : "no") << '\n';
            break;
    }
    return agreement ? exit_ok : exit_disagreement;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    std::string text = cfg.tableau;
    if (!cfg.tableau_file.empty()) {
        std::ifstream in(cfg.tableau_file);
        if (!in) throw UsageError("cannot read " + cfg.tableau_file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::replace(text.begin(), text.end(), '/', '\n');
    Tableau t;
    try {
        t = Tableau::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse tableau: ") + e.what());
    }
    if (!t.is_semistandard()) throw UsageError("the tableau is not semistandard");
    const NormalizeResult result = normalize_tableau_traced(t);

    switch (cfg.format) {
        case Format::json: {
            Json trace = Json::array();
            for (const auto& s : result.trace)
                trace.push_back(Json{{"rule", rule_label(s.rule)}, {"column", s.column + 1}, {"value", s.value}});
            const Json doc{{"input", rows_json(t)},
                           {"output", rows_json(result.tableau)},
                           {"strict_normal", result.tableau.is_strict_normal()},
                           {"column_word_input", column_word(t)},
                           {"column_word_output", column_word(result.tableau)},
                           {"trace", std::move(trace)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            for (const auto& r : result.tableau.rows()) out << join(r, ',') << '\n';
            break;
        case Format::pretty:
            out << result.tableau.str() << '\n';
            if (cfg.trace) {
                for (const auto& s : result.trace)
                    out << "rule " << rule_label(s.rule) << ": " << s.value << " into column " << s.column + 1 << '\n';
            }
            break;
    }
    return exit_ok;
}

int cmd_dengdu(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    if (cfg.word.empty() == cfg.multipartition.empty())
        throw UsageError("give exactly one of --word and --multipartition");
    MultiPartition pi;
    GenWord word;
    int n = cfg.n;
    if (!cfg.word.empty()) {
        if (n < 2) throw UsageError("--word needs --n >= 2");
        word = parse_word(cfg.word, n);
        pi = word_to_multipartition(word, n);
    } else {
        pi = parse_multipartition(cfg.multipartition);
        n = pi.rank();
        if (n < 2) throw UsageError("a multipartition needs at least two components");
        if (cfg.n != 0 && cfg.n != n) throw UsageError("--n does not match the number of components");
        if (!pi.is_aperiodic()) throw UsageError("multipartition " + pi.str() + " is not aperiodic");
    }
    const GenWord standard = multipartition_to_word(pi);
    if (word.empty()) word = standard;

    switch (cfg.format) {
        case Format::json: {
            Json comps = Json::array();
            for (const auto& p : pi.parts()) comps.push_back(p.str());
            const Json doc{{"n", n},
                           {"word", word},
                           {"multipartition", std::move(comps)},
                           {"aperiodic", pi.is_aperiodic()},
                           {"standard_word", standard},
                           {"plactic_representative", plactic_representative(word, n)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "multipartition,standard_word\n\"" << pi.str() << "\",\"" << join(standard, ',') << "\"\n";
            break;
        case Format::pretty:
            out << pi.str() << '\n' << join(standard, ' ') << '\n';
            break;
    }
    return exit_ok;
}

}  // namespace vqc::cli
