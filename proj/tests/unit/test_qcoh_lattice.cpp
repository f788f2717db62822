#include "vqc/fermion.hpp"
#include "vqc/identities.hpp"
#include "vqc/symfunc.hpp"

#include <doctest.h>

#include <map>

using namespace vqc;

namespace {

using FermionOp = std::function<FermionState(const FermionState&)>;

FermionState S(const char* word) { return FermionState(Word01::parse(word)); }
FermionState S(const Word01& w) { return FermionState(w); }
FermionState S(const Partition& p, int k, int big_n) { return FermionState(word_from_partition(p, k, big_n)); }

LaurentInt q_pow(int e) { return LaurentInt::monomial(1, e); }

FermionOp compose(FermionOp f, FermionOp g) {
    return [f = std::move(f), g = std::move(g)](const FermionState& v) { return f(g(v)); };
}

FermionOp u_op(int i) {
    return [i](const FermionState& v) { return apply_u(i, v); };
}

FermionOp e_op(int r) {
    return [r](const FermionState& v) { return nc_e_u_apply(r, v); };
}

FermionOp h_op(int r) {
    return [r](const FermionState& v) { return nc_h_u_apply(r, v); };
}

FermionOp sym(Symmetry s) {
    return [s](const FermionState& v) { return apply_symmetry(s, v); };
}

FermionState at_q_one(const FermionState& v) {
    return v.map_coefficients([](const LaurentInt& c) { return LaurentInt(c.at_one()); });
}

// Equal action on every word of length N, or on the words of weight k when k >= 0.
bool same_on(const FermionOp& f, const FermionOp& g, int big_n, int k = -1) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << big_n); ++bits) {
        const Word01 w(big_n, bits);
        if (k >= 0 && w.weight() != k) continue;
        if (f(S(w)) != g(S(w))) return false;
    }
    return true;
}

const FermionOp identity = [](const FermionState& v) { return v; };
const FermionOp zero = [](const FermionState&) { return FermionState{}; };

using ProductTable = std::map<std::pair<Partition, Partition>, FermionState>;

ProductTable product_table(int k, int big_n) {
    ProductTable t;
    for (const auto& a : partitions_in_box(k, big_n - k))
        for (const auto& b : partitions_in_box(k, big_n - k)) t[{a, b}] = quantum_product(a, b, k, big_n);
    return t;
}

FermionState star(const ProductTable& t, const FermionState& a, const FermionState& b) {
    FermionState out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            out += (cx * cy) * t.at({word_to_partition(x), word_to_partition(y)});
    return out;
}

}  // namespace

TEST_CASE("Clifford generators") {
    CHECK(apply_psi_star(2, S("10000")) == LaurentInt(-1) * S("11000"));
    CHECK(apply_psi_star(1, S("01000")) == S("11000"));
    CHECK(apply_psi_star(1, S("10000")).is_zero());
    CHECK(apply_psi(1, S("01101")).is_zero());
    CHECK(apply_psi(3, S("11100")) == S("11000"));
    const int big_n = 4;
    for (int i = 1; i <= big_n; ++i)
        for (int j = 1; j <= big_n; ++j) {
            const FermionOp psi_i = [i](const FermionState& v) { return apply_psi(i, v); };
            const FermionOp psi_star_j = [j](const FermionState& v) { return apply_psi_star(j, v); };
            const FermionOp psi_j = [j](const FermionState& v) { return apply_psi(j, v); };
            const FermionOp psi_star_i = [i](const FermionState& v) { return apply_psi_star(i, v); };
            const FermionOp anti = [&](const FermionState& v) {
                return compose(psi_i, psi_star_j)(v) + compose(psi_star_j, psi_i)(v);
            };
            CHECK(same_on(anti, i == j ? identity : zero, big_n));
            const FermionOp anti_aa = [&](const FermionState& v) {
                return compose(psi_i, psi_j)(v) + compose(psi_j, psi_i)(v);
            };
            const FermionOp anti_cc = [&](const FermionState& v) {
                return compose(psi_star_i, psi_star_j)(v) + compose(psi_star_j, psi_star_i)(v);
            };
            CHECK(same_on(anti_aa, zero, big_n));
            CHECK(same_on(anti_cc, zero, big_n));
        }
}

TEST_CASE("quasi-periodic extension of the Clifford generators") {
    const int big_n = 5;
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
        const FermionState v = S(Word01(big_n, bits));
        for (int j = 1; j <= big_n; ++j) {
            CHECK(apply_psi_star_ext(j, v) == apply_psi_star(j, v));
            CHECK(apply_psi_ext(j, v) == apply_psi(j, v));
            const FermionState up = apply_psi_star(j, v);
            const int sign_up = up.is_zero() ? 1 : (Word01(big_n, bits).weight() + 1) % 2 == 0 ? 1 : -1;
            CHECK(apply_psi_star_ext(j + big_n, v) == LaurentInt::monomial(-sign_up, 1) * up);
            const FermionState down = apply_psi(j, v);
            const int sign_down = down.is_zero() ? 1 : (Word01(big_n, bits).weight() - 1) % 2 == 0 ? 1 : -1;
            CHECK(apply_psi_ext(j - big_n, v) == LaurentInt::monomial(-sign_down, 1) * down);
        }
    }
}

TEST_CASE("nil-Temperley-Lieb generators") {
    CHECK(apply_u(1, S("10010")) == S("01010"));
    CHECK(apply_u(2, S("10010")).is_zero());
    CHECK(apply_u(5, S("00011")) == q_pow(1) * S("10010"));
    CHECK(apply_u_clifford(5, S("00011")) == q_pow(1) * S("10010"));
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int i = 1; i <= big_n; ++i)
            CHECK(same_on(u_op(i), [i](const FermionState& v) { return apply_u_clifford(i, v); }, big_n));
}

TEST_CASE("affine nil-Temperley-Lieb relations, N=5") {
    const int big_n = 5;
    for (int i = 1; i <= big_n; ++i) {
        const int ip = i % big_n + 1;
        CHECK(same_on(compose(u_op(i), u_op(i)), zero, big_n));
        CHECK(same_on(compose(u_op(i), compose(u_op(ip), u_op(i))), zero, big_n));
        CHECK(same_on(compose(u_op(ip), compose(u_op(i), u_op(ip))), zero, big_n));
        for (int j = 1; j <= big_n; ++j) {
            const int d = ((i - j) % big_n + big_n) % big_n;
            if (d == 1 || d == big_n - 1) continue;
            CHECK(same_on(compose(u_op(i), u_op(j)), compose(u_op(j), u_op(i)), big_n));
        }
    }
}

TEST_CASE("elementary and complete operators in the u_i") {
    for (const char* w : {"100", "010", "001"}) CHECK(nc_e_u_apply(2, S(w)).is_zero());
    for (int k = 0; k <= 5; ++k) {
        const FermionState v = S(Word01(5, (std::uint64_t{1} << k) - 1));
        CHECK(nc_e_u_apply(5, v) == LaurentInt::monomial(k % 2 == 1 ? 1 : -1, 1) * v);
        CHECK(nc_h_u_apply(5, v) == (k == 5 ? q_pow(1) * v : FermionState{}));
        CHECK(nc_e_u_apply(6, v).is_zero());
        CHECK(nc_h_u_apply(6, v).is_zero());
    }
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int r = 1; r <= big_n; ++r)
            for (int s = 1; s <= big_n; ++s) {
                CHECK(same_on(compose(e_op(r), e_op(s)), compose(e_op(s), e_op(r)), big_n));
                CHECK(same_on(compose(e_op(r), h_op(s)), compose(h_op(s), e_op(r)), big_n));
                CHECK(same_on(compose(h_op(r), h_op(s)), compose(h_op(s), h_op(r)), big_n));
            }
}

TEST_CASE("the gap choice does not change e_r(U) or h_r(U)") {
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int r = 1; r < big_n; ++r) {
            auto sum = [](std::vector<GenWord> words) -> FermionOp {
                return [words = std::move(words)](const FermionState& v) {
                    FermionState out;
                    for (const auto& w : words) out += apply_u_word(w, v);
                    return out;
                };
            };
            CHECK(same_on(sum(nc_e_u_words(r, big_n, GapChoice::first)), sum(nc_e_u_words(r, big_n, GapChoice::last)), big_n));
            CHECK(same_on(sum(nc_h_u_words(r, big_n, GapChoice::first)), sum(nc_h_u_words(r, big_n, GapChoice::last)), big_n));
            CHECK(same_on(sum(nc_e_u_words(r, big_n)), e_op(r), big_n));
            CHECK(same_on(sum(nc_h_u_words(r, big_n)), h_op(r), big_n));
        }
}

TEST_CASE("PC exchanges e_r(U) and h_r(U)") {
    const FermionOp pc = compose(sym(Symmetry::P), sym(Symmetry::C));
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int r = 1; r < big_n; ++r) CHECK(same_on(compose(pc, e_op(r)), compose(h_op(r), pc), big_n));
    // The scalars e_N(U) and h_N(U) are not exchanged: PC maps F_k to F_{N-k}.
    CHECK(nc_e_u_apply(3, S("000")) == LaurentInt::monomial(-1, 1) * S("000"));
    CHECK(nc_h_u_apply(3, S("111")) == q_pow(1) * S("111"));
}

TEST_CASE("PC exchanges s_lambda(U) and s_{lambda^t}(U), N=5, k=2") {
    const FermionOp pc = compose(sym(Symmetry::P), sym(Symmetry::C));
    for (const auto& lambda : partitions_in_box(2, 3)) {
        const FermionOp s = [&](const FermionState& v) { return nc_schur_u_apply(lambda, v); };
        const Partition t = lambda.transpose();
        const FermionOp st = [&](const FermionState& v) { return nc_schur_u_apply(t, v); };
        CHECK(same_on(compose(pc, s), compose(st, pc), 5, 2));
    }
}

TEST_CASE("the discrete symmetries on words") {
    CHECK(apply_symmetry(Symmetry::P, S("10010")) == S("01001"));
    CHECK(apply_symmetry(Symmetry::C, S("10010")) == S("01101"));
    CHECK(apply_symmetry(Symmetry::Rot, S("10010")) == S("00101"));
    CHECK(apply_symmetry(Symmetry::T, q_pow(2) * S("10010")) == q_pow(-2) * S("10010"));
    for (int big_n = 1; big_n <= 7; ++big_n)
        for (int k = 0; k <= big_n; ++k)
            for (const auto& lambda : partitions_in_box(k, big_n - k)) {
                const Word01 w = word_from_partition(lambda, k, big_n);
                CHECK(word_from_partition(complement(lambda, k, big_n - k), k, big_n) == w.reversed());
                CHECK(apply_symmetry(Symmetry::P, apply_symmetry(Symmetry::C, S(w))) ==
                      S(lambda.transpose(), big_n - k, big_n));
            }
}

TEST_CASE("Schur operators in the u_i") {
    for (const auto& w : words_of_weight(5, 2)) CHECK(nc_schur_u_apply(Partition{}, S(w)) == S(w));
    const FermionState v = S(Partition{2, 1}, 2, 5);
    CHECK(nc_schur_u_apply(Partition{3, 2}, v) == q_pow(1) * (S(Partition{2, 1}, 2, 5) + S(Partition{3}, 2, 5)));
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int k = 0; k <= big_n; ++k)
            for (const auto& lambda : partitions_in_box(k, big_n - k)) {
                const FermionOp e_form = [&](const FermionState& x) {
                    return nc_schur_u_apply(lambda, x, SchurForm::elementary);
                };
                const FermionOp h_form = [&](const FermionState& x) {
                    return nc_schur_u_apply(lambda, x, SchurForm::complete);
                };
                CHECK(same_on(e_form, h_form, big_n, k));
            }
}

TEST_CASE("Rot commutes with s_lambda(U) at q = 1") {
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int k = 0; k <= big_n; ++k)
            for (const auto& lambda : partitions_in_box(k, big_n - k)) {
                const FermionOp s = [&](const FermionState& x) { return at_q_one(nc_schur_u_apply(lambda, x)); };
                CHECK(same_on(compose(sym(Symmetry::Rot), s), compose(s, sym(Symmetry::Rot)), big_n, k));
            }
}

TEST_CASE("quantum product from the worked example, k=4, N=7") {
    const FermionState p = quantum_product(Partition{3, 3, 2, 1}, Partition{2, 2, 1}, 4, 7);
    const FermionState expected = q_pow(1) * S(Partition{2, 2, 2, 1}, 4, 7) +
                                  LaurentInt::monomial(2, 1) * S(Partition{3, 2, 1, 1}, 4, 7) +
                                  q_pow(1) * S(Partition{3, 2, 2}, 4, 7) + q_pow(1) * S(Partition{3, 3, 1}, 4, 7) +
                                  q_pow(2) * S(Partition{}, 4, 7);
    CHECK(p == expected);
    CHECK(gw_invariant(Partition{3, 3, 2, 1}, Partition{2, 2, 1}, Partition{3, 2, 1, 1}, 1, 4, 7) == 2);
    CHECK(gw_invariant(Partition{3, 3, 2, 1}, Partition{2, 2, 1}, Partition{}, 2, 4, 7) == 1);
    CHECK(gw_invariant(Partition{3, 3, 2, 1}, Partition{2, 2, 1}, Partition{}, 1, 4, 7) == 0);
}

TEST_CASE("quantum products on Gr(1, N)") {
    for (int big_n = 2; big_n <= 8; ++big_n)
        for (int i = 0; i < big_n; ++i)
            for (int j = 0; j < big_n; ++j) {
                const int p = i + j < big_n - 1 ? 0 : 1;
                const int row = i + j - p * big_n;
                // Row partitions (i) and (j) multiply to q^p (i + j - pN) once the box row is full.
                if (i + j < big_n - 1)
                    CHECK(quantum_product(Partition{i}, Partition{j}, 1, big_n) == S(Partition{row}, 1, big_n));
                else if (i + j == big_n - 1)
                    CHECK(quantum_product(Partition{i}, Partition{j}, 1, big_n) == S(Partition{big_n - 1}, 1, big_n));
                else
                    CHECK(quantum_product(Partition{i}, Partition{j}, 1, big_n) ==
                          q_pow(1) * S(Partition{i + j - big_n}, 1, big_n));
            }
}

TEST_CASE("degree-zero invariants are Littlewood-Richardson numbers in the box") {
    for (int big_n = 2; big_n <= 6; ++big_n)
        for (int k = 0; k <= big_n; ++k) {
            const auto box = partitions_in_box(k, big_n - k);
            for (const auto& lambda : box)
                for (const auto& mu : box)
                    for (const auto& nu : box) {
                        if (lambda.size() + mu.size() != nu.size()) continue;
                        CHECK(gw_invariant(lambda, mu, nu, 0, k, big_n) == littlewood_richardson(lambda, mu, nu));
                    }
        }
}

TEST_CASE("the quantum product is unital, commutative and associative with nonnegative invariants") {
    for (int big_n = 1; big_n <= 6; ++big_n)
        for (int k = 0; k <= big_n; ++k) {
            const auto box = partitions_in_box(k, big_n - k);
            const ProductTable t = product_table(k, big_n);
            for (const auto& a : box) {
                CHECK(t.at({Partition{}, a}) == S(a, k, big_n));
                for (const auto& b : box) {
                    CHECK(t.at({a, b}) == t.at({b, a}));
                    for (const auto& [w, c] : t.at({a, b}).terms()) {
                        REQUIRE(c.is_monomial());
                        CHECK(c.terms().begin()->second > 0);
                        CHECK(a.size() + b.size() - word_to_partition(w).size() == big_n * c.min_degree());
                        CHECK(c.min_degree() >= 0);
                    }
                    for (const auto& c : box)
                        CHECK(star(t, t.at({a, b}), S(c, k, big_n)) == star(t, S(a, k, big_n), t.at({b, c})));
                }
            }
        }
}

TEST_CASE("commutation of Schur operators with the Clifford generators, N=4") {
    std::vector<Partition> shapes;
    for (int k = 0; k <= 4; ++k)
        for (const auto& p : partitions_in_box(k, 4 - k))
            if (std::find(shapes.begin(), shapes.end(), p) == shapes.end()) shapes.push_back(p);
    for (bool annihilation : {false, true}) {
        const IdentityReport r = schurcom_check(4, shapes, annihilation);
        INFO(r.name, r.messages.empty() ? std::string() : r.messages.front());
        CHECK(r.checked > 0);
        CHECK(r.ok());
    }
}
