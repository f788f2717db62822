#include "vqc/fermion.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace vqc {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int floor_div(int a, int b) { return (a - mod(a, b)) / b; }

int length_of(const FermionState& v) { return v.terms().empty() ? 0 : v.terms().begin()->first.length(); }

LaurentInt sign(int parity) { return LaurentInt((parity % 2 == 0) ? 1 : -1); }

// Members of a subset of {1..N} in cyclic order, starting right after a site outside the subset.
std::vector<int> sites_after_gap(const std::vector<bool>& members, int big_n, GapChoice gap) {
    int g = -1;
    for (int i = 1; i <= big_n; ++i) {
        if (members[static_cast<std::size_t>(i)]) continue;
        if (g < 0 || gap == GapChoice::last) g = i;
        if (gap == GapChoice::first) break;
    }
    if (g < 0) throw std::logic_error("cyclic linearisation needs a proper subset");
    std::vector<int> order;
    for (int s = 1; s < big_n; ++s) {
        const int i = mod(g - 1 + s, big_n) + 1;
        if (members[static_cast<std::size_t>(i)]) order.push_back(i);
    }
    return order;
}

std::vector<std::vector<bool>> subsets(int r, int big_n) {
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << big_n); ++mask) {
        if (__builtin_popcountll(mask) != r) continue;
        std::vector<bool> members(static_cast<std::size_t>(big_n + 1), false);
        for (int i = 1; i <= big_n; ++i) members[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1U;
        out.push_back(std::move(members));
    }
    return out;
}

struct CacheKey {
    int kind;
    int r;
    Word01 w;
    friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

FermionState apply_cached(int kind, int r, const FermionState& v,
                          const std::function<FermionState(const FermionState&)>& compute) {
    thread_local std::map<CacheKey, FermionState> cache;
    FermionState out;
    for (const auto& [w, c] : v.terms()) {
        CacheKey key{kind, r, w};
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, compute(FermionState(w))).first;
        FermionState img = it->second;
        img *= c;
        out += img;
    }
    return out;
}

FermionState sum_of_words(const std::vector<GenWord>& words, const FermionState& v) {
    FermionState out;
    for (const auto& w : words) out += apply_u_word(w, v);
    return out;
}

SymPoly fermion_symbol(int r, int big_n) {
    if (r < 0 || r > big_n) return SymPoly{};
    if (r == 0) return SymPoly::constant(LaurentInt(1));
    return SymPoly::symbol(r);
}

}  // namespace

FermionState apply_psi_star(int i, const FermionState& v) {
    FermionState out;
    for (const auto& [w, c] : v.terms()) {
        if (i < 1 || i > w.length()) throw std::out_of_range("psi* site out of range");
        if (w.at(i)) continue;
        out.add(w.with(i, 1), sign(w.n_count(i - 1)) * c);
    }
    return out;
}

FermionState apply_psi(int i, const FermionState& v) {
    FermionState out;
    for (const auto& [w, c] : v.terms()) {
        if (i < 1 || i > w.length()) throw std::out_of_range("psi site out of range");
        if (!w.at(i)) continue;
        out.add(w.with(i, 0), sign(w.n_count(i - 1)) * c);
    }
    return out;
}

FermionState apply_psi_star_ext(int j, const FermionState& v) {
    const int big_n = length_of(v);
    if (v.is_zero()) return v;
    const int site = mod(j - 1, big_n) + 1;
    const int wraps = floor_div(j - site, big_n);
    FermionState base = apply_psi_star(site, v);
    if (wraps == 0) return base;
    // psi*_{site + p N} = (-q)^p (-1)^{p K} psi*_site, K counted after the creation.
    FermionState out;
    for (const auto& [w, c] : base.terms())
        out.add(w, sign(wraps + wraps * w.weight()) * c.shifted(wraps));
    return out;
}

FermionState apply_psi_ext(int j, const FermionState& v) {
    const int big_n = length_of(v);
    if (v.is_zero()) return v;
    const int site = mod(j - 1, big_n) + 1;
    const int wraps = floor_div(j - site, big_n);
    FermionState base = apply_psi(site, v);
    if (wraps == 0) return base;
    // psi_{site - p N} = (-q)^p (-1)^{p K} psi_site, K counted after the annihilation.
    FermionState out;
    for (const auto& [w, c] : base.terms())
        out.add(w, sign(wraps + wraps * w.weight()) * c.shifted(-wraps));
    return out;
}

FermionState apply_u(int i, const FermionState& v) {
    FermionState out;
    for (const auto& [w, c] : v.terms()) {
        const int big_n = w.length();
        if (i < 1 || i > big_n) throw std::out_of_range("u index out of range");
        const int next = i == big_n ? 1 : i + 1;
        if (!w.at(i) || w.at(next)) continue;
        const Word01 moved = w.with(i, 0).with(next, 1);
        out.add(moved, i == big_n ? c.shifted(1) : c);
    }
    return out;
}

FermionState apply_u_clifford(int i, const FermionState& v) {
    const int big_n = length_of(v);
    if (v.is_zero()) return v;
    if (i < big_n) return apply_psi_star(i + 1, apply_psi(i, v));
    FermionState moved = apply_psi_star(1, apply_psi(big_n, v));
    FermionState out;
    for (const auto& [w, c] : moved.terms()) out.add(w, -(sign(w.n_count(big_n)) * c.shifted(1)));
    return out;
}

FermionState apply_u_word(const GenWord& w, const FermionState& v) {
    FermionState cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply_u(*it, cur);
    return cur;
}

std::vector<GenWord> nc_e_u_words(int r, int big_n, GapChoice gap) {
    if (r < 1 || r > big_n - 1) throw std::invalid_argument("nc_e_u_words needs 1 <= r <= N-1");
    std::vector<GenWord> out;
    for (const auto& members : subsets(r, big_n)) out.push_back(sites_after_gap(members, big_n, gap));
    return out;
}

std::vector<GenWord> nc_h_u_words(int r, int big_n, GapChoice gap) {
    if (r < 1 || r > big_n - 1) throw std::invalid_argument("nc_h_u_words needs 1 <= r <= N-1");
    std::vector<GenWord> out;
    for (const auto& members : subsets(r, big_n)) {
        std::vector<int> order = sites_after_gap(members, big_n, gap);
        out.emplace_back(order.rbegin(), order.rend());
    }
    return out;
}

FermionState nc_e_u_apply(int r, const FermionState& v) {
    const int big_n = length_of(v);
    if (v.is_zero() || r < 0 || r > big_n) return FermionState{};
    if (r == 0) return v;
    if (r == big_n) {
        FermionState out;
        for (const auto& [w, c] : v.terms()) out.add(w, -(sign(w.weight()) * c.shifted(1)));
        return out;
    }
    return apply_cached(0, r, v, [&](const FermionState& b) { return sum_of_words(nc_e_u_words(r, big_n), b); });
}

FermionState nc_h_u_apply(int r, const FermionState& v) {
    const int big_n = length_of(v);
    if (v.is_zero() || r < 0 || r > big_n) return FermionState{};
    if (r == 0) return v;
    if (r == big_n) {
        FermionState out;
        for (const auto& [w, c] : v.terms())
            if (w.weight() == big_n) out.add(w, c.shifted(1));
        return out;
    }
    return apply_cached(1, r, v, [&](const FermionState& b) { return sum_of_words(nc_h_u_words(r, big_n), b); });
}

FermionState nc_schur_u_apply_raw(const Partition& lambda, const FermionState& v, SchurForm form) {
    const int big_n = length_of(v);
    if (v.is_zero()) return v;
    if (form == SchurForm::automatic)
        form = lambda.transpose().length() <= lambda.length() ? SchurForm::elementary : SchurForm::complete;
    auto symbol = [&](int r) { return fermion_symbol(r, big_n); };
    if (form == SchurForm::elementary) {
        const SymPoly det = jacobi_trudi_symbolic(lambda.transpose(), symbol);
        return apply_sympoly<Word01>(det, nc_e_u_apply, v);
    }
    const SymPoly det = jacobi_trudi_symbolic(lambda, symbol);
    return apply_sympoly<Word01>(det, nc_h_u_apply, v);
}

FermionState nc_schur_u_apply(const Partition& lambda, const FermionState& v, SchurForm form) {
    for (const auto& [w, c] : v.terms()) {
        const int k = w.weight();
        if (!lambda.fits(k, w.length() - k))
            throw std::invalid_argument("partition " + lambda.str() + " is outside the k x n box");
    }
    return nc_schur_u_apply_raw(lambda, v, form);
}

FermionState quantum_product(const Partition& lambda, const Partition& mu, int k, int big_n) {
    if (!lambda.fits(k, big_n - k) || !mu.fits(k, big_n - k))
        throw std::invalid_argument("quantum product needs partitions in the k x n box");
    return nc_schur_u_apply(lambda, FermionState(word_from_partition(mu, k, big_n)));
}

namespace {

long long extract_gw(const FermionState& product, const Partition& lambda, const Partition& mu, const Partition& nu,
                     int d, int k, int big_n) {
    if (!nu.fits(k, big_n - k)) throw std::invalid_argument("partition " + nu.str() + " is outside the k x n box");
    const int excess = lambda.size() + mu.size() - nu.size();
    if (excess != d * big_n) return 0;
    const LaurentInt c = product.coefficient(word_from_partition(nu, k, big_n));
    for (const auto& [e, value] : c.terms())
        if (e != d) throw std::logic_error("quantum product coefficient violates the q-grading");
    return c.coeff(d).convert_to<long long>();
}

}  // namespace

long long gw_invariant(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k, int big_n) {
    return extract_gw(quantum_product(lambda, mu, k, big_n), lambda, mu, nu, d, k, big_n);
}

long long gw_invariant_raw(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k,
                           int big_n) {
    if (!mu.fits(k, big_n - k)) throw std::invalid_argument("partition " + mu.str() + " is outside the k x n box");
    const FermionState product = nc_schur_u_apply_raw(lambda, FermionState(word_from_partition(mu, k, big_n)));
    return extract_gw(product, lambda, mu, nu, d, k, big_n);
}

FermionState apply_symmetry(Symmetry s, const FermionState& v) {
    switch (s) {
        case Symmetry::T:
            return v.map_coefficients([](const LaurentInt& c) { return c.conj(); });
        case Symmetry::P:
        case Symmetry::C:
        case Symmetry::Rot: {
            FermionState out;
            for (const auto& [w, c] : v.terms()) {
                const Word01 image = s == Symmetry::P ? w.reversed() : s == Symmetry::C ? w.bitflipped() : w.rotated();
                out.add(image, c);
            }
            return out;
        }
    }
    return v;
}

}  // namespace vqc
