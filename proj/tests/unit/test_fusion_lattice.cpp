#include "vqc/boson.hpp"
#include "vqc/identities.hpp"
#include "vqc/spectral.hpp"
#include "vqc/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace vqc;

namespace {

using BosonOp = std::function<BosonState(const BosonState&)>;

AffineWeight W(std::vector<int> m) { return AffineWeight(std::move(m)); }

BosonState S(const AffineWeight& w) { return BosonState(w); }

LaurentInt z_pow(int e) { return LaurentInt::monomial(1, e); }

BosonOp word_op(GenWord w) {
    return [w = std::move(w)](const BosonState& v) { return apply_a_word(w, v); };
}

BosonOp compose(BosonOp f, BosonOp g) {
    return [f = std::move(f), g = std::move(g)](const BosonState& v) { return f(g(v)); };
}

BosonOp sum_of_words(const std::vector<GenWord>& words) {
    return [words](const BosonState& v) {
        BosonState out;
        for (const auto& w : words) out += apply_a_word(w, v);
        return out;
    };
}

// Equal action on every basis vector of H_k.
bool same_on(const BosonOp& f, const BosonOp& g, int n, int k) {
    for (const auto& w : affine_weights(n, k))
        if (f(S(w)) != g(S(w))) return false;
    return true;
}

bool vanishes_on(const BosonOp& f, int n, int k) {
    for (const auto& w : affine_weights(n, k))
        if (!f(S(w)).is_zero()) return false;
    return true;
}

std::multiset<int> letters(const GenWord& w) { return {w.begin(), w.end()}; }

// Each listed monomial acts like the generated monomial on the same multiset of letters.
void check_monomials(const std::vector<GenWord>& generated, const std::vector<GenWord>& listed, int n) {
    std::map<std::multiset<int>, GenWord> by_letters;
    for (const auto& w : generated) by_letters[letters(w)] = w;
    CHECK(by_letters.size() == generated.size());
    for (const auto& w : listed) {
        auto it = by_letters.find(letters(w));
        REQUIRE(it != by_letters.end());
        for (int k = 0; k <= 3; ++k) CHECK(same_on(word_op(w), word_op(it->second), n, k));
    }
}

// Complex vector over affine_weights(n, k) from a state at z = 1.
ComplexVector at_z_one(const BosonState& v, int n, int k) {
    const auto basis = affine_weights(n, k);
    ComplexVector out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = v.coefficient(basis[i]).at_one().convert_to<double>();
    return out;
}

ComplexMatrix operator_matrix(const BosonOp& f, int n, int k) {
    const auto basis = affine_weights(n, k);
    ComplexMatrix m(static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const ComplexVector col = at_z_one(f(S(basis[j])), n, k);
        for (std::size_t i = 0; i < basis.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
}

double max_abs(const ComplexVector& a, const ComplexVector& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

using ProductTable = std::map<std::pair<AffineWeight, AffineWeight>, BosonState>;

ProductTable product_table(int n, int k) {
    ProductTable t;
    for (const auto& a : affine_weights(n, k))
        for (const auto& b : affine_weights(n, k)) t[{a, b}] = fusion_product(a, b);
    return t;
}

BosonState star(const ProductTable& t, const BosonState& a, const BosonState& b) {
    BosonState out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out += (cx * cy) * t.at({x, y});
    return out;
}

}  // namespace

TEST_CASE("phase operators") {
    CHECK(apply_phi_star(1, S(W({0, 0, 0}))) == S(W({0, 1, 0})));
    CHECK(apply_phi(1, S(W({0, 0, 1}))).is_zero());
    CHECK(apply_phi(2, S(W({0, 0, 1}))) == S(W({0, 0, 0})));
    for (int k = 0; k <= 3; ++k)
        for (int i = 0; i < 3; ++i) {
            const BosonOp phi_i = [i](const BosonState& v) { return apply_phi(i, v); };
            const BosonOp phi_star_i = [i](const BosonState& v) { return apply_phi_star(i, v); };
            CHECK(same_on(compose(phi_i, phi_star_i), [](const BosonState& v) { return v; }, 3, k));
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const BosonOp phi_star_j = [j](const BosonState& v) { return apply_phi_star(j, v); };
                CHECK(same_on(compose(phi_i, phi_star_j), compose(phi_star_j, phi_i), 3, k));
            }
        }
}

TEST_CASE("local plactic generators") {
    CHECK(apply_a(1, S(W({0, 1, 0}))) == S(W({0, 0, 1})));
    CHECK(apply_a(0, S(W({1, 0, 0}))) == z_pow(1) * S(W({0, 1, 0})));
    CHECK(apply_a(2, S(W({0, 1, 0}))).is_zero());
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int i = 0; i < n; ++i) {
                const int next = (i + 1) % n;
                const BosonOp via_phase = [i, next](const BosonState& v) {
                    BosonState out = apply_phi_star(next, apply_phi(i, v));
                    if (i == 0) out *= z_pow(1);
                    return out;
                };
                CHECK(same_on(word_op({i}), via_phase, n, k));
            }
}

TEST_CASE("affine local plactic relations on H_k") {
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int i = 0; i < n; ++i) {
                const int ip = (i + 1) % n;
                CHECK(same_on(word_op({ip, i, i}), word_op({i, ip, i}), n, k));
                CHECK(same_on(word_op({ip, ip, i}), word_op({ip, i, ip}), n, k));
                for (int j = 0; j < n; ++j) {
                    const int d = ((i - j) % n + n) % n;
                    if (d == 1 || d == n - 1) continue;
                    CHECK(same_on(word_op({i, j}), word_op({j, i}), n, k));
                }
            }
}

TEST_CASE("monomials of e_2(A) and h_3(A) for n=4") {
    const auto e2 = nc_e_words(2, 4);
    CHECK(e2.size() == 6);
    check_monomials(e2, {{2, 1}, {3, 1}, {1, 0}, {3, 2}, {0, 2}, {0, 3}}, 4);

    const auto h3 = nc_h_words(3, 4);
    CHECK(h3.size() == 20);
    std::vector<GenWord> listed{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {1, 1, 2}, {1, 2, 2}, {1, 1, 3},
                                {1, 3, 3}, {0, 0, 1}, {0, 1, 1}, {2, 2, 3}, {2, 3, 3}, {2, 2, 0}, {2, 0, 0},
                                {3, 3, 0}, {3, 0, 0}, {1, 2, 3}, {0, 1, 2}, {2, 3, 0}};
    check_monomials(h3, listed, 4);
    // The multiset {0, 1, 3} is generated as well.
    check_monomials(h3, {{3, 0, 1}}, 4);
}

TEST_CASE("the gap choice does not change e_r(A) or h_r(A)") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r < n; ++r)
            for (int k = 0; k <= 3; ++k) {
                CHECK(same_on(sum_of_words(nc_e_words(r, n, GapChoice::first)),
                              sum_of_words(nc_e_words(r, n, GapChoice::last)), n, k));
                CHECK(same_on(sum_of_words(nc_h_words(r, n, GapChoice::first)),
                              sum_of_words(nc_h_words(r, n, GapChoice::last)), n, k));
            }
}

TEST_CASE("elementary operators") {
    CHECK(nc_e_apply(1, S(W({1, 0, 0}))) == z_pow(1) * S(W({0, 1, 0})));
    const BosonState v = S(W({1, 1, 0}));
    CHECK(nc_e_apply(0, v) == v);
    CHECK(nc_e_apply(3, v) == z_pow(1) * v);
    CHECK(nc_e_apply(4, v).is_zero());
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int r = 0; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s) {
                    const BosonOp er = [r](const BosonState& x) { return nc_e_apply(r, x); };
                    const BosonOp es = [s](const BosonState& x) { return nc_e_apply(s, x); };
                    CHECK(same_on(compose(er, es), compose(es, er), n, k));
                }
}

TEST_CASE("complete operators") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int r = 0; r < n; ++r) {
                const BosonOp multiset = [r](const BosonState& x) { return nc_h_apply(r, x); };
                const BosonOp det = [r](const BosonState& x) { return nc_h_apply_det(r, x); };
                CHECK(same_on(multiset, det, n, k));
                if (r > k) CHECK(vanishes_on(multiset, n, k));
            }
    // Past r = n - 1 the determinant does not vanish above the particle number.
    CHECK(nc_h_apply(3, S(W({0, 0, 0}))) == z_pow(1) * S(W({0, 0, 0})));
}

TEST_CASE("h_k(A) at z = 1 permutes H_k by the inverse label shift") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& w : affine_weights(n, k)) {
                const BosonState img = nc_h_apply(k, S(w)).map_coefficients([](const LaurentInt& c) {
                    return LaurentInt(c.at_one());
                });
                AffineWeight back = w;
                for (int i = 1; i < n; ++i) back = rot(back);
                CHECK(img == S(back));
            }
}

TEST_CASE("noncommutative Schur operators") {
    for (const auto& w : affine_weights(3, 2)) CHECK(nc_schur_apply(Partition{}, S(w)) == S(w));
    const BosonState v = S(AffineWeight::from_partition(Partition{2, 1}, 3, 2));
    const BosonState img = nc_schur_apply(Partition{2, 1}, v).map_coefficients([](const LaurentInt& c) {
        return LaurentInt(c.at_one());
    });
    CHECK(img == S(AffineWeight::from_partition(Partition{2, 1}, 3, 2)) + S(AffineWeight::from_partition(Partition{}, 3, 2)));

    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (const auto& lambda : partitions_in_box(n - 1, k)) {
                const BosonOp s = [&](const BosonState& x) { return nc_schur_apply(lambda, x); };
                const BosonOp dual = [&](const BosonState& x) { return nc_schur_apply_dual(lambda, x); };
                CHECK(same_on(s, dual, n, k));
            }
}

TEST_CASE("Pieri cases of the Schur operators") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            for (int r = 1; r < n; ++r) {
                std::vector<int> col(static_cast<std::size_t>(r), 1);
                const Partition c(col);
                CHECK(same_on([&](const BosonState& x) { return nc_schur_apply_raw(c, x); },
                              [r](const BosonState& x) { return nc_e_apply(r, x); }, n, k));
            }
            for (int r = 1; r <= k; ++r) {
                const Partition row{r};
                CHECK(same_on([&](const BosonState& x) { return nc_schur_apply(row, x); },
                              [r](const BosonState& x) { return nc_h_apply(r, x); }, n, k));
            }
        }
}

TEST_CASE("Bethe vectors diagonalise the Schur operators, n=3, k=2") {
    const int n = 3;
    const int k = 2;
    for (const auto& root : bethe_roots_boson(n, k)) {
        const ComplexVector b = bethe_vector_boson(root);
        for (const auto& lambda : partitions_in_box(n - 1, k)) {
            const ComplexMatrix m = operator_matrix([&](const BosonState& x) { return nc_schur_apply(lambda, x); }, n, k);
            ComplexVector expected = b;
            const Complex eig = schur_eval(lambda.transpose(), root.x);
            for (auto& c : expected) c *= eig;
            CHECK(max_abs(apply_matrix(m, b), expected) < 1e-8);
        }
    }
}

TEST_CASE("fusion products from the worked examples") {
    const auto wt3 = [](const Partition& p, int k) { return AffineWeight::from_partition(p, 3, k); };
    // n=3, k=1: e_1 times e_1^2 is the identity.
    const BosonState p1 = fusion_product(wt3(Partition{1}, 1), wt3(Partition{1, 1}, 1));
    CHECK(p1.support_size() == 1);
    CHECK(p1.coefficient(wt3(Partition{}, 1)) == LaurentInt(1));
    CHECK(fusion_coeff(wt3(Partition{1}, 1), wt3(Partition{1, 1}, 1), wt3(Partition{}, 1)) == 1);

    const BosonState p2 = fusion_product(wt3(Partition{2, 1}, 2), wt3(Partition{2, 1}, 2));
    CHECK(p2.support_size() == 2);
    CHECK(p2.coefficient(wt3(Partition{2, 1}, 2)) == z_pow(1));
    CHECK(p2.coefficient(wt3(Partition{}, 2)) == LaurentInt(1));
    CHECK(fusion_coeff(wt3(Partition{2, 1}, 2), wt3(Partition{2, 1}, 2), wt3(Partition{2, 1}, 2)) == 1);
    CHECK(fusion_coeff(wt3(Partition{2, 1}, 2), wt3(Partition{2, 1}, 2), wt3(Partition{}, 2)) == 1);
}

// The unit P-hat(empty) consists of k full columns, so it acts as z^k and is a unit at z = 1.
TEST_CASE("the fusion product is unital, commutative and associative") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            const auto basis = affine_weights(n, k);
            const ProductTable t = product_table(n, k);
            const AffineWeight unit = AffineWeight::from_partition(Partition{}, n, k);
            for (const auto& a : basis) {
                CHECK(t.at({unit, a}) == z_pow(k) * S(a));
                for (const auto& b : basis) {
                    CHECK(t.at({a, b}) == t.at({b, a}));
                    for (const auto& [nu, c] : t.at({a, b}).terms()) {
                        CHECK(c.is_monomial());
                        CHECK(c.terms().begin()->second > 0);
                        const int excess = weight_to_boxed(a).size() + weight_to_boxed(b).size() - weight_to_boxed(nu).size();
                        CHECK(excess == n * c.min_degree());
                    }
                    for (const auto& c : basis)
                        CHECK(star(t, t.at({a, b}), S(c)) == star(t, S(a), t.at({b, c})));
                }
            }
        }
}

TEST_CASE("fusion symmetries") {
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            const CoeffTable table = fusion_table_lattice(n, k);
            for (auto which : {FusionIdentity::s3, FusionIdentity::rotation, FusionIdentity::conjugation}) {
                const IdentityReport r = fusion_symmetry_check(table, which);
                INFO(r.name, " n=", n, " k=", k);
                CHECK(r.checked > 0);
                CHECK(r.ok());
            }
        }
}

TEST_CASE("transfer matrix coefficients equal e_r(A)") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int r = 0; r <= n + 1; ++r)
                CHECK(same_on([r](const BosonState& x) { return transfer_apply(r, x); },
                              [r](const BosonState& x) { return nc_e_apply(r, x); }, n, k));
}

TEST_CASE("monodromy entries") {
    const AffineWeight vac = W({0, 0, 0});
    CHECK(monodromy_apply(MonodromyEntry::A, 0, S(vac)) == S(vac));
    for (int r = 1; r <= 3; ++r) CHECK(monodromy_apply(MonodromyEntry::A, r, S(vac)).is_zero());
    for (int r = 0; r <= 4; ++r) CHECK(monodromy_apply(MonodromyEntry::C, r, S(vac)).is_zero());
    for (int r = 0; r <= 4; ++r) {
        const BosonState b = monodromy_apply(MonodromyEntry::B, r, S(vac));
        CHECK(b.support_size() == (r >= 1 && r <= 3 ? 1U : 0U));
        for (const auto& [w, c] : b.terms()) CHECK(w.level() == 1);
    }
}

TEST_CASE("creation operators B(x_1)...B(x_k) produce Schur polynomials, n=3, k=2") {
    const int n = 3;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-0.9, 0.9);
    for (int trial = 0; trial < 5; ++trial) {
        const PointVector x{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
        std::map<AffineWeight, Complex> state{{W({0, 0, 0}), 1.0}};
        for (const auto& xi : x) {
            std::map<AffineWeight, Complex> next;
            for (const auto& [w, c] : state)
                for (int r = 0; r <= n; ++r) {
                    const BosonState b = monodromy_apply(MonodromyEntry::B, r, S(w));
                    for (const auto& [w2, c2] : b.terms()) next[w2] += c * std::pow(xi, r) * c2.at_one().convert_to<double>();
                }
            state = next;
        }
        for (const auto& w : affine_weights(n, 2)) {
            const Complex expected = schur_eval(weight_to_boxed(w).transpose(), x);
            const Complex got = state.count(w) ? state.at(w) : Complex(0.0);
            CHECK(std::abs(got - expected) < 1e-9);
        }
    }
}

TEST_CASE("TQ relation and phi T phi*") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            const IdentityReport tq = tq_relation_check(n, k);
            INFO(tq.name);
            CHECK(tq.checked > 0);
            CHECK(tq.ok());
            const IdentityReport phi = phi_transfer_check(n, k);
            INFO(phi.name);
            CHECK(phi.ok());
        }
}
