#pragma once

#include "config.hpp"

#include "vqc/identities.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace vqc::cli {

using Json = nlohmann::ordered_json;

// One table by a single method (lattice, spectral or recursion), rows computed on `threads` workers
// and merged in basis order.
CoeffTable compute_table(TableKind kind, int n, int k, Method method, int threads);

// compute_table behind the on-disk cache of cfg.cache_dir.
CoeffTable load_or_compute_table(const RunConfig& cfg, TableKind kind, Method method);

// {"exponent": "coefficient"} with big integers written in decimal.
Json laurent_to_json(const LaurentInt& p);
LaurentInt laurent_from_json(const Json& doc);

Json table_to_json(const CoeffTable& table, Method method);
// Returns nullopt when the document is not a table of the current cache version.
std::optional<CoeffTable> table_from_json(const Json& doc);

// Selection of products lambda * mu to print; unset means all.
struct EntryFilter {
    std::optional<Partition> lhs;
    std::optional<Partition> rhs;
    bool accepts(const CoeffKey& key) const;
};

Json entries_json(const CoeffTable& table, const EntryFilter& filter);
std::string entries_csv(const CoeffTable& table, const EntryFilter& filter);
// One line per product: "lambda * mu = c x^d nu + ...", x = z for fusion and q for GW tables.
std::string entries_pretty(const CoeffTable& table, const EntryFilter& filter);

}  // namespace vqc::cli
