#include "tables.hpp"

#include "vqc/boson.hpp"
#include "vqc/fermion.hpp"
#include "vqc/spectral.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#ifdef VQC_WITH_TBB
#include <tbb/blocked_range.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>
#endif

namespace vqc::cli {

namespace {

using Row = std::map<CoeffKey, CoeffValue>;

// Runs row(i) for every i and merges the rows in index order.
CoeffTable assemble(CoeffTable table, std::size_t count, int threads, const std::function<Row(std::size_t)>& row) {
    std::vector<Row> rows(count);
#ifdef VQC_WITH_TBB
    threads = std::min(threads, tbb::info::default_concurrency());
    if (threads > 1) {
        tbb::task_arena arena(threads);
        arena.execute([&] {
            tbb::parallel_for(tbb::blocked_range<std::size_t>(0, count), [&](const tbb::blocked_range<std::size_t>& r) {
                for (std::size_t i = r.begin(); i != r.end(); ++i) rows[i] = row(i);
            });
        });
    } else {
        for (std::size_t i = 0; i < count; ++i) rows[i] = row(i);
    }
#else
    (void)threads;
    for (std::size_t i = 0; i < count; ++i) rows[i] = row(i);
#endif
    for (auto& r : rows) table.entries.merge(r);
    return table;
}

void require_spectral_size(int n, int k) {
    if (n + k > kSpectralMaxSize)
        throw UsageError("spectral methods accept n + k <= " + std::to_string(kSpectralMaxSize) + ", got " +
                         std::to_string(n + k));
}

CoeffTable fusion_lattice(int n, int k, int threads) {
    const CoeffTable empty{TableKind::fusion, n, k, {}};
    const auto basis = empty.basis();
    return assemble(empty, basis.size(), threads, [&](std::size_t i) {
        CoeffTable part{TableKind::fusion, n, k, {}};
        const AffineWeight lambda = AffineWeight::from_partition(basis[i], n, k);
        for (const auto& mu : basis)
            record_product(part, basis[i], mu, fusion_product(lambda, AffineWeight::from_partition(mu, n, k)));
        return part.entries;
    });
}

CoeffTable fusion_spectral(int n, int k, int threads) {
    require_spectral_size(n, k);
    const CoeffTable empty{TableKind::fusion, n, k, {}};
    const auto basis = empty.basis();
    std::vector<AffineWeight> weights;
    std::vector<int> boxed_sizes;
    for (const auto& p : basis) {
        weights.push_back(AffineWeight::from_partition(p, n, k));
        boxed_sizes.push_back(weight_to_boxed(weights.back()).size());
    }
    return assemble(empty, basis.size(), threads, [&](std::size_t i) {
        Row row;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t l = 0; l < basis.size(); ++l) {
                const long long c = verlinde_coeff(weights[i], weights[j], weights[l]);
                if (c == 0) continue;
                const int excess = boxed_sizes[i] + boxed_sizes[j] - boxed_sizes[l];
                if (excess < 0 || excess % n != 0)
                    throw std::logic_error("Verlinde coefficient off the z-grading at " + basis[i].str() + " x " +
                                           basis[j].str() + " -> " + basis[l].str());
                row.emplace(CoeffKey{basis[i], basis[j], basis[l]}, CoeffValue{excess / n, c});
            }
        return row;
    });
}

CoeffTable gw_lattice(int n, int k, int threads) {
    const CoeffTable empty{TableKind::gw, n, k, {}};
    const auto basis = empty.basis();
    return assemble(empty, basis.size(), threads, [&](std::size_t i) {
        CoeffTable part{TableKind::gw, n, k, {}};
        for (const auto& mu : basis) record_product(part, basis[i], mu, quantum_product(basis[i], mu, k, n + k));
        return part.entries;
    });
}

CoeffTable gw_spectral(int n, int k, int threads) {
    require_spectral_size(n, k);
    const CoeffTable empty{TableKind::gw, n, k, {}};
    const auto basis = empty.basis();
    return assemble(empty, basis.size(), threads, [&](std::size_t i) {
        Row row;
        for (const auto& mu : basis)
            for (const auto& nu : basis) {
                const GwValue v = bvi_coeff(basis[i], mu, nu, k, n + k);
                if (v.c != 0) row.emplace(CoeffKey{basis[i], mu, nu}, CoeffValue{v.d, v.c});
            }
        return row;
    });
}

CoeffTable gw_recursion(int n, int k) {
    const int big_n = n + k;
    if (big_n < 1 || big_n > 12) throw UsageError("the hierarchy algorithm accepts 1 <= N <= 12");
    return hierarchy_build(big_n).at(static_cast<std::size_t>(k));
}

std::string cache_path(const std::string& dir, TableKind kind, int n, int k, Method method) {
    std::ostringstream name;
    name << (kind == TableKind::fusion ? "fusion" : "gw") << "-n" << n << "-k" << k << "-" << method_name(method)
         << "-v" << kCacheVersion << ".json";
    return (std::filesystem::path(dir) / name.str()).string();
}

Json entry_json(const CoeffKey& key, const CoeffValue& v) {
    return Json{{"lambda", key.lambda.str()}, {"mu", key.mu.str()}, {"nu", key.nu.str()}, {"d", v.d}, {"c", v.c}};
}

std::string csv_field(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

CoeffTable compute_table(TableKind kind, int n, int k, Method method, int threads) {
    if (n < 1 || k < 0) throw UsageError("need n >= 1 and k >= 0");
    switch (method) {
        case Method::lattice:
            return kind == TableKind::fusion ? fusion_lattice(n, k, threads) : gw_lattice(n, k, threads);
        case Method::spectral:
            return kind == TableKind::fusion ? fusion_spectral(n, k, threads) : gw_spectral(n, k, threads);
        case Method::recursion:
            if (kind == TableKind::fusion) throw UsageError("the recursion method builds GW tables only");
            return gw_recursion(n, k);
        case Method::all:
            break;
    }
    throw std::logic_error("compute_table needs a single method");
}

CoeffTable load_or_compute_table(const RunConfig& cfg, TableKind kind, Method method) {
    if (cfg.cache_dir.empty()) return compute_table(kind, cfg.n, cfg.k, method, cfg.threads);
    const std::string path = cache_path(cfg.cache_dir, kind, cfg.n, cfg.k, method);
    if (std::ifstream in(path); in) {
        const Json doc = Json::parse(in, nullptr, false);
        if (!doc.is_discarded())
            if (auto table = table_from_json(doc); table && table->kind == kind && table->n == cfg.n && table->k == cfg.k)
                return *table;
    }
    CoeffTable table = compute_table(kind, cfg.n, cfg.k, method, cfg.threads);
    std::filesystem::create_directories(cfg.cache_dir);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << table_to_json(table, method).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
    return table;
}

Json laurent_to_json(const LaurentInt& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
    return out;
}

LaurentInt laurent_from_json(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("a Laurent polynomial is a JSON object");
    LaurentInt p;
    for (const auto& [e, c] : doc.items()) {
        if (!c.is_string()) throw std::invalid_argument("coefficients are decimal strings");
        p += LaurentInt::monomial(BigInt(c.get<std::string>()), std::stoi(e));
    }
    return p;
}

Json table_to_json(const CoeffTable& table, Method method) {
    Json entries = Json::array();
    for (const auto& [key, v] : table.entries) entries.push_back(entry_json(key, v));
    return Json{{"version", kCacheVersion},
                {"params", {{"kind", table.kind == TableKind::fusion ? "fusion" : "gw"}, {"n", table.n}, {"k", table.k}}},
                {"method", method_name(method)},
                {"entries", std::move(entries)}};
}

std::optional<CoeffTable> table_from_json(const Json& doc) {
    if (!doc.is_object() || doc.value("version", -1) != kCacheVersion || !doc.contains("params") ||
        !doc.contains("entries"))
        return std::nullopt;
    const Json& params = doc["params"];
    CoeffTable table;
    table.kind = params.value("kind", "") == "fusion" ? TableKind::fusion : TableKind::gw;
    table.n = params.value("n", 0);
    table.k = params.value("k", 0);
    for (const auto& e : doc["entries"])
        table.set(Partition::parse(e.at("lambda").get<std::string>()), Partition::parse(e.at("mu").get<std::string>()),
                  Partition::parse(e.at("nu").get<std::string>()),
                  CoeffValue{e.at("d").get<int>(), e.at("c").get<long long>()});
    return table;
}

bool EntryFilter::accepts(const CoeffKey& key) const {
    return (!lhs || key.lambda == *lhs) && (!rhs || key.mu == *rhs);
}

Json entries_json(const CoeffTable& table, const EntryFilter& filter) {
    Json entries = Json::array();
    for (const auto& [key, v] : table.entries)
        if (filter.accepts(key)) entries.push_back(entry_json(key, v));
    return entries;
}

std::string entries_csv(const CoeffTable& table, const EntryFilter& filter) {
    std::string out = "lambda,mu,nu,d,c\n";
    for (const auto& [key, v] : table.entries) {
        if (!filter.accepts(key)) continue;
        out += csv_field(key.lambda.str()) + ',' + csv_field(key.mu.str()) + ',' + csv_field(key.nu.str()) + ',' +
               std::to_string(v.d) + ',' + std::to_string(v.c) + '\n';
    }
    return out;
}

std::string entries_pretty(const CoeffTable& table, const EntryFilter& filter) {
    const char var = table.kind == TableKind::fusion ? 'z' : 'q';
    std::string out;
    for (const auto& lambda : table.basis())
        for (const auto& mu : table.basis()) {
            if (!filter.accepts(CoeffKey{lambda, mu, {}})) continue;
            std::string rhs;
            for (auto it = table.entries.lower_bound(CoeffKey{lambda, mu, {}});
                 it != table.entries.end() && it->first.lambda == lambda && it->first.mu == mu; ++it) {
                if (!rhs.empty()) rhs += " + ";
                if (it->second.c != 1) rhs += std::to_string(it->second.c) + ' ';
                if (it->second.d == 1) rhs += std::string(1, var) + ' ';
                else if (it->second.d > 1) rhs += std::string(1, var) + '^' + std::to_string(it->second.d) + ' ';
                rhs += '(' + it->first.nu.str() + ')';
            }
            out += '(' + lambda.str() + ") * (" + mu.str() + ") = " + (rhs.empty() ? "0" : rhs) + '\n';
        }
    return out;
}

}  // namespace vqc::cli
