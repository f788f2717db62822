#include "vqc/boson.hpp"
#include "vqc/fermion.hpp"
#include "vqc/identities.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace vqc;

namespace {

using P = Partition;

FermionState S(const Partition& p, int k, int big_n) { return FermionState(word_from_partition(p, k, big_n)); }

LaurentInt q_pow(int e) { return LaurentInt::monomial(1, e); }

// Expansion at q = 1 as a multiset of partitions with multiplicities.
std::map<Partition, long long> at_q_one(const FermionState& v) {
    std::map<Partition, long long> out;
    for (const auto& [w, c] : v.terms()) out[word_to_partition(w)] += c.at_one().convert_to<long long>();
    return out;
}

long long nonzero_terms(const RecursionResult& r) {
    long long count = 0;
    for (const auto& t : r.terms) count += t.c != 0 ? 1 : 0;
    return count;
}

void require_ok(const IdentityReport& report) {
    INFO(report.name, ": ", report.messages.empty() ? std::string{} : report.messages.front());
    CHECK(report.checked > 0);
    CHECK(report.ok());
}

}  // namespace

TEST_CASE("GW symmetries hold exhaustively for N=5 and N=6") {
    for (GwIdentity which : {GwIdentity::s3, GwIdentity::levelrank, GwIdentity::rotation, GwIdentity::curious}) {
        for (int k = 1; k <= 4; ++k) {
            INFO("N=5 k=", k);
            require_ok(gw_symmetry_check(gw_table_cached(k, 5), which));
        }
        for (int k = 2; k <= 3; ++k) {
            INFO("N=6 k=", k);
            require_ok(gw_symmetry_check(gw_table_cached(k, 6), which));
        }
    }
}

TEST_CASE("level-rank duality between Gr(2,5) and Gr(3,5)") {
    const CoeffTable& a = gw_table_cached(2, 5);
    const CoeffTable& b = gw_table_cached(3, 5);
    CHECK(a.entries.size() == b.entries.size());
    for (const auto& l : partitions_in_box(2, 3))
        for (const auto& m : partitions_in_box(2, 3))
            for (const auto& n : partitions_in_box(2, 3))
                CHECK(a.lookup(l, m, n) == b.lookup(l.transpose(), m.transpose(), n.transpose()));
}

TEST_CASE("rotating the diagrams of a product") {
    const int k = 4;
    const int big_n = 7;
    CHECK(rotate_partition(P{3, 3, 2, 1}, 1, k, big_n) == P{2, 2, 1});
    CHECK(rotate_partition(rotate_partition(P{3, 2, 1, 1}, 1, k, big_n), -1, k, big_n) == P{3, 2, 1, 1});
    CHECK(rotate_partition(P{2, 1}, big_n, k, big_n) == P{2, 1});

    const FermionState ex = quantum_product(P{3, 3, 2, 1}, P{2, 2, 1}, k, big_n);
    const FermionState expected_ex = q_pow(1) * S(P{2, 2, 2, 1}, k, big_n) +
                                     LaurentInt::monomial(2, 1) * S(P{3, 2, 1, 1}, k, big_n) +
                                     q_pow(1) * S(P{3, 2, 2}, k, big_n) + q_pow(1) * S(P{3, 3, 1}, k, big_n) +
                                     q_pow(2) * S(P{}, k, big_n);
    CHECK(ex == expected_ex);

    const FermionState rotated = quantum_product(P{2, 2, 1}, P{2, 2, 1}, k, big_n);
    const FermionState expected = q_pow(1) * S(P{1, 1, 1}, k, big_n) +
                                  LaurentInt::monomial(2, 1) * S(P{2, 1}, k, big_n) + S(P{3, 3, 2, 2}, k, big_n) +
                                  S(P{3, 3, 3, 1}, k, big_n) + q_pow(1) * S(P{3}, k, big_n);
    CHECK(rotated == expected);

    std::map<Partition, long long> termwise;
    for (const auto& [nu, c] : at_q_one(ex)) termwise[rotate_partition(nu, 1, k, big_n)] += c;
    CHECK(termwise == at_q_one(rotated));
}

TEST_CASE("word counts extend quasi-periodically") {
    const int k = 4;
    const int big_n = 7;
    const P mu{2, 2, 1};  // 1010110
    CHECK(word_count(mu, 0, k, big_n) == 0);
    CHECK(word_count(mu, 1, k, big_n) == 1);
    CHECK(word_count(mu, 4, k, big_n) == 2);
    CHECK(word_count(mu, 7, k, big_n) == 4);
    for (int a = 0; a <= big_n; ++a) CHECK(word_count(mu, a + big_n, k, big_n) == word_count(mu, a, k, big_n) + k);
}

TEST_CASE("up-recursion on the worked example") {
    const P lambda{3, 3, 2, 1};
    const P mu{2, 2, 1};
    const P nu{3, 2, 1, 1};
    const int k = 4;
    const int big_n = 7;
    REQUIRE(gw_table_cached(k, big_n).lookup(lambda, mu, nu) == CoeffValue{1, 2});

    const std::set<Partition> rhos{P{2, 2, 1, 1}, P{2, 2, 2}};
    for (int j : {2, 4, 7}) {
        INFO("j=", j);
        const RecursionResult r = gw_recursion_up(lambda, mu, nu, 1, j, k, big_n);
        CHECK(r.value == 2);
        std::set<Partition> seen;
        for (const auto& t : r.terms)
            if (t.c != 0) {
                CHECK(t.r == 3);
                CHECK(t.c == 1);
                CHECK(t.sign == 1);
                seen.insert(t.rho);
            }
        CHECK(seen == rhos);
    }

    const RecursionResult j2 = gw_recursion_up(lambda, mu, nu, 1, 2, k, big_n);
    for (const auto& t : j2.terms)
        if (t.c != 0) {
            CHECK(t.d == 0);
            CHECK(t.mu == P{1, 1});
            CHECK(t.nu == P{2, 2, 2, 1, 1});
        }
    const RecursionResult j4 = gw_recursion_up(lambda, mu, nu, 1, 4, k, big_n);
    CHECK(nonzero_terms(j4) == 2);
    bool saw_r0 = false;
    for (const auto& t : j4.terms) {
        CHECK(t.d == 1);
        if (t.r == 0) {
            saw_r0 = true;
            CHECK(t.rho == lambda);
            CHECK(t.mu == P{1, 1, 1, 1});
            CHECK(t.nu == P{2, 1, 1, 1, 1});
            CHECK(t.c == 0);
        }
    }
    CHECK(saw_r0);
    const RecursionResult j7 = gw_recursion_up(lambda, mu, nu, 1, 7, k, big_n);
    for (const auto& t : j7.terms)
        if (t.c != 0) {
            CHECK(t.mu == P{2, 2, 2, 1});
            CHECK(t.nu == P{2, 1, 1, 1, 1});
        }

    CHECK_THROWS_AS(gw_recursion_up(lambda, mu, nu, 1, 1, k, big_n), std::invalid_argument);
    CHECK_THROWS_AS(gw_recursion_up(lambda, mu, nu, 1, 0, k, big_n), std::invalid_argument);
    CHECK_THROWS_AS(gw_recursion_down(lambda, mu, nu, 1, 2, k, big_n), std::invalid_argument);
}

TEST_CASE("down-recursion with the empty partition") {
    const int k = 2;
    const int big_n = 5;
    for (const auto& mu : partitions_in_box(k, big_n - k)) {
        const Word01 w = word_from_partition(mu, k, big_n);
        for (int j = 1; j <= big_n; ++j) {
            if (!w.at(j)) continue;
            const RecursionResult r = gw_recursion_down(P{}, mu, mu, 0, j, k, big_n);
            CHECK(r.value == 1);
            REQUIRE(r.terms.size() == 1);
            CHECK(r.terms.front().r == 0);
            CHECK(r.terms.front().sign == 1);
            CHECK(r.terms.front().c == 1);
            CHECK(r.terms.front().mu == r.terms.front().nu);
        }
    }
}

TEST_CASE("down-recursion reproduces Gr(2,5) from Gr(1,5)") {
    const int k = 2;
    const int big_n = 5;
    const CoeffTable& table = gw_table_cached(k, big_n);
    long long checked = 0;
    for (const auto& l : partitions_in_box(k, big_n - k))
        for (const auto& m : partitions_in_box(k, big_n - k))
            for (const auto& n : partitions_in_box(k, big_n - k)) {
                const int excess = l.size() + m.size() - n.size();
                if (excess < 0 || excess % big_n != 0) continue;
                const int d = excess / big_n;
                const long long direct = gw_invariant_raw(l, m, n, d, k, big_n);
                CHECK(direct == table.lookup(l, m, n).c);
                const Word01 w = word_from_partition(m, k, big_n);
                for (int j = 1; j <= big_n; ++j) {
                    const long long value = w.at(j) ? gw_recursion_down(l, m, n, d, j, k, big_n).value
                                                    : gw_recursion_up(l, m, n, d, j, k, big_n).value;
                    CHECK(value == direct);
                    ++checked;
                }
            }
    CHECK(checked > 0);
}

TEST_CASE("both recursions agree with the direct tables for N=5") {
    for (int k = 1; k <= 4; ++k) {
        INFO("k=", k);
        require_ok(gw_recursion_check(k, 5));
    }
}

TEST_CASE("hierarchy from a point") {
    for (int big_n = 2; big_n <= 6; ++big_n) {
        const auto tables = hierarchy_build(big_n);
        REQUIRE(tables.size() == static_cast<std::size_t>(big_n + 1));
        const CoeffTable& line = tables[1];
        for (int i = 0; i < big_n; ++i)
            for (int j = 0; j < big_n; ++j) {
                const int p = i + j < big_n ? 0 : 1;
                const P target = i + j - p * big_n == 0 ? P{} : P{i + j - p * big_n};
                const P a = i == 0 ? P{} : P{i};
                const P b = j == 0 ? P{} : P{j};
                CHECK(line.lookup(a, b, target) == CoeffValue{p, 1});
            }
    }
}

TEST_CASE("hierarchy step on Gr(2,5)") {
    const auto tables = hierarchy_build(5);
    CHECK(apply_psi_star(2, S(P{3}, 1, 5)) == S(P{2, 1}, 2, 5));
    const FermionState step = hierarchy_product(tables[1], P{3, 2}, P{3}, 2);
    CHECK(step == q_pow(1) * S(P{2, 1}, 2, 5) + q_pow(1) * S(P{3}, 2, 5));
    CHECK(step == quantum_product(P{3, 2}, P{2, 1}, 2, 5));
}

TEST_CASE("hierarchy tables equal the lattice tables") {
    for (int big_n = 1; big_n <= 5; ++big_n) {
        INFO("N=", big_n);
        require_ok(hierarchy_check(big_n));
        const auto tables = hierarchy_build(big_n);
        for (int k = 0; k <= big_n; ++k) CHECK(table_differences(tables[static_cast<std::size_t>(k)], gw_table_lattice(k, big_n)).empty());
    }
}

TEST_CASE("fusion recursion on the worked example") {
    const FusionRecursionReport report = fusion_recursion_check(3, 2, {1, 1, 1}, {2, 3, 1}, P{2, 1}, P{});
    CHECK(report.lhs == 2);
    CHECK(report.rhs == 2);
    CHECK(report.ok());
    const std::set<std::vector<Partition>> chains(report.chains.begin(), report.chains.end());
    const std::set<std::vector<Partition>> expected{{P{}, P{1, 1}, P{1}, P{2, 1}}, {P{}, P{1, 1}, P{2, 2}, P{2, 1}}};
    CHECK(report.chains.size() == 2);
    CHECK(chains == expected);
}

TEST_CASE("fusion recursion with a single column strip") {
    const int n = 3;
    const int k = 1;
    for (int r = 1; r < n; ++r) {
        const AffineWeight column_low = AffineWeight::from_partition(P(std::vector<int>(static_cast<std::size_t>(r), 1)), n, k);
        const AffineWeight column_high =
            AffineWeight::from_partition(P(std::vector<int>(static_cast<std::size_t>(r), 1)), n, k + 1);
        for (const auto& mu : affine_weights(n, k))
            for (const auto& nu : affine_weights(n, k)) {
                const long long low = fusion_product(column_low, mu).coefficient(nu).at_one().convert_to<long long>();
                for (int j = 0; j < n; ++j) {
                    auto up = [j](const AffineWeight& w) {
                        std::vector<int> m = w.labels();
                        ++m[static_cast<std::size_t>(j)];
                        return AffineWeight(m);
                    };
                    const long long high =
                        fusion_product(column_high, up(mu)).coefficient(up(nu)).at_one().convert_to<long long>();
                    CHECK(high == low);
                    const FusionRecursionReport report = fusion_recursion_check(
                        n, k, {r}, {j}, weight_to_partition(mu), weight_to_partition(nu));
                    CHECK(report.lhs == high);
                    CHECK(report.rhs == low);
                }
            }
    }
}

TEST_CASE("fusion recursion holds for compositions of size at most 3") {
    const std::vector<std::vector<int>> alphas{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}};
    for (int n = 3; n <= 4; ++n)
        for (int k = 1; k <= 2; ++k) {
            const auto weights = affine_weights(n, k);
            for (const auto& alpha : alphas) {
                std::vector<int> j(alpha.size(), 0);
                for (std::size_t i = 0; i < j.size(); ++i) j[i] = static_cast<int>(i + 1) % n;
                for (const auto& mu : weights)
                    for (const auto& nu : weights) {
                        const auto report = fusion_recursion_check(n, k, alpha, j, weight_to_partition(mu),
                                                                   weight_to_partition(nu));
                        CHECK(report.ok());
                    }
            }
        }
    CHECK_THROWS_AS(fusion_recursion_check(3, 1, {1, 1}, {0}, P{}, P{}), std::invalid_argument);
    CHECK_THROWS_AS(fusion_recursion_check(3, 1, {4}, {0}, P{}, P{}), std::invalid_argument);
}

TEST_CASE("Cauchy and Kostka identities for |alpha| <= 3, n=3, k=2") {
    const std::vector<std::vector<int>> alphas{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 1}};
    for (const auto& alpha : alphas) require_ok(cauchy_kostka_check(3, 2, alpha));
    for (int k = 0; k <= 3; ++k) require_ok(cauchy_kostka_check(4, k, {1, 1, 1}));
}

TEST_CASE("h_r(A) equals the one-row Schur operator") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int r = 0; r <= k; ++r)
                for (const auto& w : affine_weights(n, k)) {
                    const BosonState v(w);
                    CHECK(nc_h_apply(r, v) == nc_schur_apply_raw(r == 0 ? P{} : P{r}, v));
                }
}

TEST_CASE("hat reduces partitions with n rows") {
    CHECK(hat(P{3, 2, 1}, 3, 3) == AffineWeight::from_partition(P{2, 1}, 3, 3));
    CHECK(hat(P{1, 1, 1}, 3, 1) == AffineWeight::from_partition(P{}, 3, 1));
    CHECK_THROWS_AS(hat(P{1, 1, 1, 1}, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(hat(P{4}, 3, 2), std::invalid_argument);
}

TEST_CASE("coefficient tables") {
    CoeffTable t{TableKind::gw, 3, 2, {}};
    t.set(P{1}, P{1}, P{2}, CoeffValue{0, 1});
    t.set(P{1}, P{1}, P{1, 1}, CoeffValue{0, 0});
    CHECK(t.entries.size() == 1);
    CHECK(t.lookup(P{1}, P{1}, P{1, 1}) == CoeffValue{});
    CHECK(t.basis().size() == 10);

    CoeffTable u = t;
    CHECK(table_differences(t, u).empty());
    u.set(P{1}, P{1}, P{2}, CoeffValue{0, 2});
    u.set(P{2}, P{}, P{2}, CoeffValue{0, 1});
    CHECK(table_differences(t, u).size() == 2);

    CoeffTable r{TableKind::gw, 3, 2, {}};
    CHECK_THROWS(record_product(r, P{1}, P{1}, LaurentInt(LaurentInt::monomial(1, 0) + q_pow(1)) * S(P{2}, 2, 5)));
    record_product(r, P{1}, P{1}, S(P{2}, 2, 5) + S(P{1, 1}, 2, 5));
    CHECK(r.lookup(P{1}, P{1}, P{1, 1}) == CoeffValue{0, 1});
    CHECK(table_differences(r, gw_table_cached(2, 5)).size() > 0);
}
