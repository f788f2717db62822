#include "vqc/identities.hpp"

#include "vqc/boson.hpp"
#include "vqc/fermion.hpp"
#include "vqc/symfunc.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace vqc {

namespace {

constexpr std::size_t kMaxMessages = 8;

int mod(int a, int n) { return ((a % n) + n) % n; }

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

LaurentInt monomial(long long c, int d) { return c == 0 ? LaurentInt{} : LaurentInt::monomial(BigInt(c), d); }

std::string triple_str(const Partition& a, const Partition& b, const Partition& c) {
    return "(" + a.str() + " | " + b.str() + " | " + c.str() + ")";
}

FermionState twist(const FermionState& v) {
    return v.map_coefficients([](const LaurentInt& c) { return c.twisted(); });
}

// S'_lambda: the Schur operator with q replaced by -q.
FermionState twisted_schur(const Partition& lambda, const FermionState& v) {
    return twist(nc_schur_u_apply_raw(lambda, twist(v)));
}

AffineWeight phi_star_weight(int j, const AffineWeight& w) {
    std::vector<int> labels = w.labels();
    ++labels[static_cast<std::size_t>(mod(j, w.rank()))];
    return AffineWeight(labels);
}

long long cached_fusion_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    thread_local std::map<std::tuple<AffineWeight, AffineWeight, AffineWeight>, long long> cache;
    const auto key = std::make_tuple(lambda, mu, nu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fusion_coeff(lambda, mu, nu)).first;
    return it->second;
}

// <nu, s_lambda(A) mu> at z = 1 from the raw determinant.
long long raw_matrix_element(const Partition& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    const BosonState image = nc_schur_apply_raw(lambda, BosonState(mu));
    return image.coefficient(nu).at_one().convert_to<long long>();
}

// N_{lambda-hat mu}^{nu} when lambda-hat is a level-k weight, otherwise the raw matrix element.
long long fusion_entry(const Partition& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    const int n = mu.rank();
    const int k = mu.level();
    if (lambda.length() <= n) {
        const int strip = lambda.part(n);
        std::vector<int> parts;
        for (int i = 1; i < n; ++i) parts.push_back(lambda.part(i) - strip);
        const Partition reduced(parts);
        if (reduced.fits(n - 1, k)) return cached_fusion_coeff(AffineWeight::from_partition(reduced, n, k), mu, nu);
    }
    return raw_matrix_element(lambda, mu, nu);
}

std::vector<Partition> partitions_with_rows(int size, int rows) { return partitions_of_size_in_box(size, rows, size); }

}  // namespace

std::vector<Partition> CoeffTable::basis() const {
    return kind == TableKind::gw ? partitions_in_box(k, n) : partitions_in_box(n - 1, k);
}

CoeffValue CoeffTable::lookup(const Partition& lambda, const Partition& mu, const Partition& nu) const {
    auto it = entries.find(CoeffKey{lambda, mu, nu});
    return it == entries.end() ? CoeffValue{} : it->second;
}

void CoeffTable::set(const Partition& lambda, const Partition& mu, const Partition& nu, CoeffValue v) {
    if (v.c == 0) {
        entries.erase(CoeffKey{lambda, mu, nu});
        return;
    }
    entries[CoeffKey{lambda, mu, nu}] = v;
}

namespace {

template <class Label, class ToPartition>
void record_terms(CoeffTable& table, const Partition& lambda, const Partition& mu, const StateVector<Label>& product,
                  ToPartition to_partition) {
    for (const auto& [w, c] : product.terms()) {
        if (!c.is_monomial())
            throw std::logic_error("product coefficient " + c.str() + " is not a monomial for " +
                                   triple_str(lambda, mu, to_partition(w)));
        const auto& [d, value] = *c.terms().begin();
        table.set(lambda, mu, to_partition(w), CoeffValue{d, value.template convert_to<long long>()});
    }
}

}  // namespace

void record_product(CoeffTable& table, const Partition& lambda, const Partition& mu, const FermionState& product) {
    record_terms(table, lambda, mu, product, [](const Word01& w) { return word_to_partition(w); });
}

void record_product(CoeffTable& table, const Partition& lambda, const Partition& mu, const BosonState& product) {
    record_terms(table, lambda, mu, product, [](const AffineWeight& w) { return weight_to_partition(w); });
}

CoeffTable gw_table_lattice(int k, int big_n) {
    CoeffTable table{TableKind::gw, big_n - k, k, {}};
    const auto basis = table.basis();
    for (const auto& lambda : basis)
        for (const auto& mu : basis) record_product(table, lambda, mu, quantum_product(lambda, mu, k, big_n));
    return table;
}

CoeffTable fusion_table_lattice(int n, int k) {
    CoeffTable table{TableKind::fusion, n, k, {}};
    const auto basis = table.basis();
    for (const auto& lambda : basis)
        for (const auto& mu : basis)
            record_product(table, lambda, mu,
                           fusion_product(AffineWeight::from_partition(lambda, n, k),
                                          AffineWeight::from_partition(mu, n, k)));
    return table;
}

const CoeffTable& gw_table_cached(int k, int big_n) {
    thread_local std::map<std::pair<int, int>, CoeffTable> cache;
    auto it = cache.find({k, big_n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(k, big_n), gw_table_lattice(k, big_n)).first;
    return it->second;
}

std::vector<std::string> table_differences(const CoeffTable& a, const CoeffTable& b) {
    std::vector<std::string> out;
    auto describe = [](const CoeffKey& key, const CoeffValue& va, const CoeffValue& vb) {
        return triple_str(key.lambda, key.mu, key.nu) + ": (d=" + std::to_string(va.d) + ", c=" +
               std::to_string(va.c) + ") vs (d=" + std::to_string(vb.d) + ", c=" + std::to_string(vb.c) + ")";
    };
    if (a.kind != b.kind || a.n != b.n || a.k != b.k) out.emplace_back("tables have different parameters");
    for (const auto& [key, va] : a.entries) {
        const CoeffValue vb = b.lookup(key.lambda, key.mu, key.nu);
        if (!(va == vb)) out.push_back(describe(key, va, vb));
    }
    for (const auto& [key, vb] : b.entries)
        if (a.entries.find(key) == a.entries.end()) out.push_back(describe(key, CoeffValue{}, vb));
    return out;
}

void IdentityReport::fail(std::string message) {
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(std::move(message));
}

void IdentityReport::merge(const IdentityReport& other) {
    checked += other.checked;
    failures += other.failures;
    for (const auto& m : other.messages)
        if (messages.size() < kMaxMessages) messages.push_back(other.name + ": " + m);
}

LaurentInt gw_symmetric_coeff(const CoeffTable& table, const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
    const CoeffValue v = table.lookup(lambda, mu, complement(nu, table.k, table.n));
    return monomial(v.c, v.d);
}

Partition rotate_partition(const Partition& lambda, int a, int k, int big_n) {
    Word01 w = word_from_partition(lambda, k, big_n);
    for (int s = 0; s < mod(a, big_n); ++s) w = w.rotated();
    return word_to_partition(w);
}

int word_count(const Partition& lambda, int a, int k, int big_n) {
    return word_from_partition(lambda, k, big_n).n_count(a);
}

IdentityReport gw_symmetry_check(const CoeffTable& table, GwIdentity which) {
    if (table.kind != TableKind::gw) throw std::invalid_argument("gw_symmetry_check needs a GW table");
    const int k = table.k;
    const int big_n = table.big_n();
    const auto basis = table.basis();
    auto C = [&](const Partition& a, const Partition& b, const Partition& c) {
        return gw_symmetric_coeff(table, a, b, c);
    };
    auto R = [&](const Partition& p, int a) { return rotate_partition(p, a, k, big_n); };
    auto nc = [&](const Partition& p, int a) { return word_count(p, a, k, big_n); };

    IdentityReport report;
    switch (which) {
        case GwIdentity::s3: {
            report.name = "GW S3 symmetry";
            for (const auto& a : basis)
                for (const auto& b : basis)
                    for (const auto& c : basis) {
                        const LaurentInt base = C(a, b, c);
                        const std::array<LaurentInt, 5> others{C(a, c, b), C(b, a, c), C(b, c, a), C(c, a, b),
                                                                C(c, b, a)};
                        ++report.checked;
                        for (const auto& o : others)
                            if (!(o == base)) {
                                report.fail(triple_str(a, b, c));
                                break;
                            }
                    }
            break;
        }
        case GwIdentity::levelrank: {
            report.name = "GW level-rank duality";
            const CoeffTable& dual = gw_table_cached(table.n, big_n);
            for (const auto& a : basis)
                for (const auto& b : basis)
                    for (const auto& c : basis) {
                        ++report.checked;
                        if (!(C(a, b, c) == gw_symmetric_coeff(dual, a.transpose(), b.transpose(), c.transpose())))
                            report.fail(triple_str(a, b, c));
                    }
            break;
        }
        case GwIdentity::rotation: {
            report.name = "GW rotation invariance";
            for (const auto& a : basis)
                for (const auto& b : basis)
                    for (const auto& c : basis) {
                        for (int s = 1; s < big_n; ++s) {
                            const LaurentInt left = C(R(a, s), b, c);
                            const LaurentInt mid = C(a, R(b, s), c).shifted(nc(a, s) - nc(b, s));
                            const LaurentInt right = C(a, b, R(c, s)).shifted(nc(a, s) - nc(c, s));
                            ++report.checked;
                            if (!(left == mid) || !(left == right))
                                report.fail("a=" + std::to_string(s) + " " + triple_str(a, b, c));
                        }
                        const LaurentInt base = C(a, b, c);
                        for (int s = 0; s < big_n; ++s)
                            for (int t = 0; t < big_n; ++t) {
                                const int u = -s - t;
                                const LaurentInt rotated = C(R(a, s), R(b, t), R(c, u));
                                ++report.checked;
                                if (!(rotated == base.shifted(nc(a, s) + nc(b, t) + nc(c, u))))
                                    report.fail("(a,b,c)=(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                                std::to_string(u) + ") " + triple_str(a, b, c));
                            }
                    }
            break;
        }
        case GwIdentity::curious: {
            report.name = "GW curious duality";
            const int n = table.n;
            for (const auto& a : basis)
                for (const auto& b : basis)
                    for (const auto& c : basis) {
                        const LaurentInt dual =
                            C(complement(a, k, n), complement(b, k, n), complement(c, k, n)).conj();
                        for (int s = 0; s < big_n; ++s)
                            for (int t = 0; t < big_n; ++t) {
                                const int u = n - s - t;
                                const LaurentInt rotated = C(R(a, s), R(b, t), R(c, u));
                                ++report.checked;
                                if (!(rotated == dual.shifted(nc(a, s) + nc(b, t) + nc(c, u))))
                                    report.fail("(a,b,c)=(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                                std::to_string(u) + ") " + triple_str(a, b, c));
                            }
                    }
            break;
        }
    }
    return report;
}

IdentityReport fusion_symmetry_check(const CoeffTable& table, FusionIdentity which) {
    if (table.kind != TableKind::fusion) throw std::invalid_argument("fusion_symmetry_check needs a fusion table");
    const int n = table.n;
    const int k = table.k;
    const auto weights = affine_weights(n, k);
    auto N = [&](const AffineWeight& a, const AffineWeight& b, const AffineWeight& c) {
        return table.lookup(weight_to_partition(a), weight_to_partition(b), weight_to_partition(flip(c))).c;
    };
    auto label = [](const AffineWeight& a, const AffineWeight& b, const AffineWeight& c) {
        return "(" + a.str() + " | " + b.str() + " | " + c.str() + ")";
    };

    IdentityReport report;
    for (const auto& a : weights)
        for (const auto& b : weights)
            for (const auto& c : weights) {
                const long long base = N(a, b, c);
                bool ok = true;
                switch (which) {
                    case FusionIdentity::s3:
                        report.name = "fusion S3 symmetry";
                        ok = N(a, c, b) == base && N(b, a, c) == base && N(b, c, a) == base && N(c, a, b) == base &&
                             N(c, b, a) == base;
                        break;
                    case FusionIdentity::rotation:
                        report.name = "fusion rotation";
                        ok = N(rot(a), b, c) == N(a, rot(b), c) && N(rot(a), b, c) == N(a, b, rot(c));
                        break;
                    case FusionIdentity::conjugation:
                        report.name = "fusion conjugation";
                        ok = N(flip(a), flip(b), flip(c)) == base;
                        break;
                }
                ++report.checked;
                if (!ok) report.fail(label(a, b, c));
            }
    return report;
}

RecursionResult gw_recursion_up(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int j,
                                int k, int big_n) {
    if (j < 1 || j > big_n) throw std::invalid_argument("recursion index j must lie in 1..N");
    if (k + 1 > big_n) throw std::invalid_argument("up-recursion needs k < N");
    const Word01 wmu = word_from_partition(mu, k, big_n);
    const Word01 wnu = word_from_partition(nu, k, big_n);
    if (wmu.at(j)) throw std::invalid_argument("up-recursion needs psi_j mu = 0");
    const Partition mu_up = word_to_partition(wmu.with(j, 1));

    RecursionResult result;
    for (int r = 0; r <= lambda.length(); ++r) {
        const int target = j - r;
        const int site = mod(target - 1, big_n) + 1;
        if (wnu.at(site)) continue;
        const Partition nu_up = word_to_partition(wnu.with(site, 1));
        const int dr = target <= 0 ? d - 1 : d;
        const int sign = parity_sign(d + r + wmu.n_count(j - 1) + wnu.n_count(target - 1));
        for (const auto& rho : remove_vertical_strips(lambda, r)) {
            const long long c = dr < 0 ? 0 : gw_invariant_raw(rho, mu_up, nu_up, dr, k + 1, big_n);
            result.value += sign * c;
            result.terms.push_back(RecursionTerm{r, rho, mu_up, nu_up, dr, sign, c});
        }
    }
    return result;
}

RecursionResult gw_recursion_down(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int j,
                                  int k, int big_n) {
    if (j < 1 || j > big_n) throw std::invalid_argument("recursion index j must lie in 1..N");
    if (k < 1) throw std::invalid_argument("down-recursion needs k >= 1");
    const Word01 wmu = word_from_partition(mu, k, big_n);
    const Word01 wnu = word_from_partition(nu, k, big_n);
    if (!wmu.at(j)) throw std::invalid_argument("down-recursion needs psi*_j mu = 0");
    const Partition mu_down = word_to_partition(wmu.with(j, 0));

    RecursionResult result;
    for (int r = 0; r <= lambda.part(1); ++r) {
        const int target = j + r;
        const int site = mod(target - 1, big_n) + 1;
        if (!wnu.at(site)) continue;
        const Partition nu_down = word_to_partition(wnu.with(site, 0));
        const int dr = target > big_n ? d - 1 : d;
        const int sign = parity_sign(d + wmu.n_count(j - 1) + wnu.n_count(target - 1));
        for (const auto& rho : remove_horizontal_strips(lambda, r)) {
            const long long c = dr < 0 ? 0 : gw_invariant_raw(rho, mu_down, nu_down, dr, k - 1, big_n);
            result.value += sign * c;
            result.terms.push_back(RecursionTerm{r, rho, mu_down, nu_down, dr, sign, c});
        }
    }
    return result;
}

FermionState hierarchy_product(const CoeffTable& level_k, const Partition& lambda, const Partition& mu, int i) {
    const int k = level_k.k;
    const int big_n = level_k.big_n();
    FermionState out;
    for (int r = 0; r <= lambda.part(1); ++r) {
        for (const auto& nu : remove_horizontal_strips(lambda, r)) {
            if (!nu.fits(k, big_n - k)) continue;
            FermionState twisted;
            for (auto it = level_k.entries.lower_bound(CoeffKey{nu, mu, Partition{}});
                 it != level_k.entries.end() && it->first.lambda == nu && it->first.mu == mu; ++it) {
                const CoeffValue v = it->second;
                twisted.add(word_from_partition(it->first.nu, k, big_n), monomial(parity_sign(v.d) * v.c, v.d));
            }
            out += apply_psi_star_ext(i + r, twisted);
        }
    }
    return out;
}

std::vector<CoeffTable> hierarchy_build(int big_n) {
    if (big_n < 1 || big_n > 12) throw std::invalid_argument("hierarchy_build supports 1 <= N <= 12");
    std::vector<CoeffTable> tables;
    CoeffTable point{TableKind::gw, big_n, 0, {}};
    point.set(Partition{}, Partition{}, Partition{}, CoeffValue{0, 1});
    tables.push_back(std::move(point));
    for (int k = 0; k < big_n; ++k) {
        const CoeffTable& below = tables.back();
        CoeffTable next{TableKind::gw, big_n - k - 1, k + 1, {}};
        const auto basis = next.basis();
        for (const auto& lambda : basis)
            for (const auto& target : basis) {
                const Word01 w = word_from_partition(target, k + 1, big_n);
                int i = 1;
                while (!w.at(i)) ++i;
                const Word01 base = w.with(i, 0);
                FermionState product = hierarchy_product(below, lambda, word_to_partition(base), i);
                product *= LaurentInt(parity_sign(base.n_count(i - 1)));
                record_product(next, lambda, target, product);
            }
        tables.push_back(std::move(next));
    }
    return tables;
}

IdentityReport schurcom_check(int big_n, const std::vector<Partition>& shapes, bool annihilation) {
    IdentityReport report;
    report.name = annihilation ? "commutation with psi" : "commutation with psi*";
    for (const auto& lambda : shapes)
        for (int i = 1; i <= big_n; ++i)
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << big_n); ++bits) {
                const FermionState v(Word01(big_n, bits));
                FermionState lhs;
                FermionState rhs;
                if (!annihilation) {
                    lhs = nc_schur_u_apply_raw(lambda, apply_psi_star(i, v));
                    rhs = apply_psi_star(i, twisted_schur(lambda, v));
                    for (int r = 1; r <= lambda.part(1); ++r) {
                        FermionState strips;
                        for (const auto& nu : remove_horizontal_strips(lambda, r)) strips += twisted_schur(nu, v);
                        rhs += apply_psi_star_ext(i + r, strips);
                    }
                } else {
                    lhs = nc_schur_u_apply_raw(lambda, apply_psi(i, v));
                    rhs = apply_psi(i, twisted_schur(lambda, v));
                    for (int r = 1; r <= lambda.length(); ++r) {
                        FermionState strips;
                        for (const auto& nu : remove_vertical_strips(lambda, r)) strips += twisted_schur(nu, v);
                        strips *= LaurentInt(parity_sign(r));
                        rhs += apply_psi_ext(i - r, strips);
                    }
                }
                ++report.checked;
                if (!(lhs == rhs))
                    report.fail("lambda=" + lambda.str() + " i=" + std::to_string(i) + " on " +
                                Word01(big_n, bits).str());
            }
    return report;
}

AffineWeight hat(const Partition& lambda, int n, int level) {
    if (lambda.length() > n) throw std::invalid_argument("partition " + lambda.str() + " has more than n rows");
    const int strip = lambda.part(n);
    std::vector<int> parts;
    for (int i = 1; i < n; ++i) parts.push_back(lambda.part(i) - strip);
    const Partition reduced(parts);
    if (!reduced.fits(n - 1, level))
        throw std::invalid_argument("partition " + lambda.str() + " exceeds level " + std::to_string(level));
    return AffineWeight::from_partition(reduced, n, level);
}

FusionRecursionReport fusion_recursion_check(int n, int k, const std::vector<int>& alpha, const std::vector<int>& j,
                                             const Partition& mu, const Partition& nu) {
    if (alpha.empty() || alpha.size() != j.size())
        throw std::invalid_argument("alpha and j must be nonempty and of equal length");
    for (int a : alpha)
        if (a < 1 || a > n) throw std::invalid_argument("parts of alpha must lie in 1..n");
    const std::size_t len = alpha.size();
    const AffineWeight mu_hat = AffineWeight::from_partition(mu, n, k);
    const AffineWeight nu_hat = AffineWeight::from_partition(nu, n, k);
    const auto weights = affine_weights(n, k);

    FusionRecursionReport report;
    std::vector<AffineWeight> chain(len + 1);
    chain.front() = nu_hat;
    chain.back() = mu_hat;
    auto factor = [&](std::size_t i) {
        const Partition column(std::vector<int>(static_cast<std::size_t>(alpha[i - 1]), 1));
        const int ji = j[i - 1];
        return cached_fusion_coeff(hat(column, n, k + 1), phi_star_weight(ji, chain[i]),
                                   phi_star_weight(ji, chain[i - 1]));
    };
    auto descend = [&](auto&& self, std::size_t i, long long acc) -> void {
        if (i == len) {
            const long long total = acc * factor(len);
            if (total == 0) return;
            report.lhs += total;
            std::vector<Partition> labels;
            for (const auto& w : chain) labels.push_back(weight_to_partition(w));
            report.chains.push_back(std::move(labels));
            return;
        }
        for (const auto& w : weights) {
            chain[i] = w;
            const long long f = factor(i);
            if (f != 0) self(self, i + 1, acc * f);
        }
    };
    descend(descend, 1, 1);

    const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
    for (const auto& lambda : partitions_with_rows(total, n)) {
        const long long kostka_number = kostka(lambda.transpose(), alpha);
        if (kostka_number != 0) report.rhs += kostka_number * fusion_entry(lambda, mu_hat, nu_hat);
    }
    return report;
}

IdentityReport cauchy_kostka_check(int n, int k, const std::vector<int>& alpha) {
    IdentityReport report;
    report.name = "Cauchy-Kostka";
    const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
    const int len = static_cast<int>(alpha.size());
    const auto weights = affine_weights(n, k);

    std::vector<std::pair<Partition, long long>> h_terms;
    for (const auto& lambda : partitions_with_rows(total, len))
        if (const long long c = kostka(lambda, alpha); c != 0) h_terms.emplace_back(lambda, c);
    std::vector<std::pair<Partition, long long>> e_terms;
    for (const auto& lambda : partitions_with_rows(total, n))
        if (const long long c = kostka(lambda.transpose(), alpha); c != 0) e_terms.emplace_back(lambda, c);

    for (const auto& mu : weights) {
        const BosonState v(mu);
        BosonState h_product = v;
        BosonState e_product = v;
        for (int i = len - 1; i >= 0; --i) {
            h_product = nc_h_apply(alpha[static_cast<std::size_t>(i)], h_product);
            e_product = nc_e_apply(alpha[static_cast<std::size_t>(i)], e_product);
        }
        BosonState h_expansion;
        for (const auto& [lambda, c] : h_terms) h_expansion += LaurentInt(c) * nc_schur_apply_raw(lambda, v);
        BosonState e_expansion;
        for (const auto& [lambda, c] : e_terms) e_expansion += LaurentInt(c) * nc_schur_apply_raw(lambda, v);
        report.checked += 2;
        if (!(h_product == h_expansion)) report.fail("h-product on " + mu.str());
        if (!(e_product == e_expansion)) report.fail("e-product on " + mu.str());
    }

    // Chain sums over nu = mu^(0), ..., mu^(l) = mu with horizontal and vertical strip factors.
    const std::size_t slen = alpha.size();
    for (const auto& mu : weights)
        for (const auto& nu : weights) {
            for (bool vertical : {false, true}) {
                std::vector<AffineWeight> chain(slen + 1);
                chain.front() = nu;
                chain.back() = mu;
                auto factor = [&](std::size_t i) {
                    const int a = alpha[i - 1];
                    const Partition strip = vertical ? Partition(std::vector<int>(static_cast<std::size_t>(a), 1))
                                                     : Partition{a};
                    return fusion_entry(strip, chain[i], chain[i - 1]);
                };
                long long lhs = 0;
                auto descend = [&](auto&& self, std::size_t i, long long acc) -> void {
                    if (i == slen) {
                        lhs += acc * factor(slen);
                        return;
                    }
                    for (const auto& w : weights) {
                        chain[i] = w;
                        const long long f = factor(i);
                        if (f != 0) self(self, i + 1, acc * f);
                    }
                };
                descend(descend, 1, 1);
                long long rhs = 0;
                for (const auto& [lambda, c] : vertical ? e_terms : h_terms) rhs += c * fusion_entry(lambda, mu, nu);
                ++report.checked;
                if (lhs != rhs)
                    report.fail(std::string(vertical ? "vertical" : "horizontal") + " chain sum " + nu.str() + " <- " +
                                mu.str() + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
            }
        }
    return report;
}

IdentityReport tq_relation_check(int n, int k) {
    IdentityReport report{"TQ relation n=" + std::to_string(n) + " k=" + std::to_string(k), 0, 0, {}};
    const int top = n + k;
    for (const auto& w : affine_weights(n, k)) {
        const BosonState v(w);
        std::vector<BosonState> q_terms;
        for (int s = 0; s <= k; ++s) q_terms.push_back(nc_h_apply(s, v));
        for (int m = 0; m <= top; ++m) {
            BosonState lhs;
            for (int s = 0; s <= std::min(m, k); ++s) {
                if (q_terms[static_cast<std::size_t>(s)].is_zero()) continue;
                const BosonState term = transfer_apply(m - s, q_terms[static_cast<std::size_t>(s)]);
                if (s % 2 == 0) lhs += term;
                else lhs -= term;
            }
            BosonState rhs;
            if (m == 0) rhs = v;
            if (m == top) rhs += monomial(parity_sign(k), 1) * q_terms[static_cast<std::size_t>(k)];
            ++report.checked;
            if (!(lhs == rhs)) report.fail("u^" + std::to_string(m) + " on " + w.str());
        }
    }
    return report;
}

IdentityReport phi_transfer_check(int n, int k) {
    IdentityReport report{"phi T phi* n=" + std::to_string(n) + " k=" + std::to_string(k), 0, 0, {}};
    auto at_one = [](const BosonState& v) {
        std::map<AffineWeight, BigInt> out;
        for (const auto& [b, c] : v.terms()) {
            const BigInt value = c.at_one();
            if (value != 0) out.emplace(b, value);
        }
        return out;
    };
    for (const auto& w : affine_weights(n, k)) {
        const BosonState v(w);
        for (int r = 0; r <= n; ++r) {
            const auto expected = at_one(transfer_apply(r, v));
            for (int i = 0; i < n; ++i) {
                ++report.checked;
                if (at_one(apply_phi(i, transfer_apply(r, apply_phi_star(i, v)))) != expected)
                    report.fail("i=" + std::to_string(i) + " r=" + std::to_string(r) + " on " + w.str());
            }
        }
    }
    return report;
}

IdentityReport gw_recursion_check(int k, int big_n) {
    IdentityReport report{"GW recursions k=" + std::to_string(k) + " N=" + std::to_string(big_n), 0, 0, {}};
    const CoeffTable& table = gw_table_cached(k, big_n);
    const auto basis = table.basis();
    for (const auto& lambda : basis)
        for (const auto& mu : basis) {
            const Word01 wmu = word_from_partition(mu, k, big_n);
            for (const auto& nu : basis) {
                const int excess = lambda.size() + mu.size() - nu.size();
                if (excess < 0 || excess % big_n != 0) continue;
                const int d = excess / big_n;
                const CoeffValue expected = table.lookup(lambda, mu, nu);
                const long long want = expected.d == d ? expected.c : 0;
                for (int j = 1; j <= big_n; ++j) {
                    const bool up = wmu.at(j) == 0;
                    const RecursionResult got = up ? gw_recursion_up(lambda, mu, nu, d, j, k, big_n)
                                                   : gw_recursion_down(lambda, mu, nu, d, j, k, big_n);
                    ++report.checked;
                    if (got.value != want)
                        report.fail(std::string(up ? "up" : "down") + " j=" + std::to_string(j) + " d=" +
                                    std::to_string(d) + " " + triple_str(lambda, mu, nu) + ": " +
                                    std::to_string(got.value) + " vs " + std::to_string(want));
                }
            }
        }
    return report;
}

IdentityReport hierarchy_check(int big_n) {
    IdentityReport report{"hierarchy N=" + std::to_string(big_n), 0, 0, {}};
    const std::vector<CoeffTable> built = hierarchy_build(big_n);
    for (int k = 0; k <= big_n; ++k) {
        ++report.checked;
        const auto diffs = table_differences(built[static_cast<std::size_t>(k)], gw_table_cached(k, big_n));
        for (const auto& d : diffs) report.fail("k=" + std::to_string(k) + " " + d);
    }
    return report;
}

}  // namespace vqc
