#include "vqc/boson.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace vqc {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int rank_of(const BosonState& v) { return v.terms().empty() ? 0 : v.terms().begin()->first.rank(); }

LaurentInt z_power(int e) { return LaurentInt::monomial(1, e); }

BosonState map_labels(const BosonState& v, const std::function<bool(std::vector<int>&, int&)>& f) {
    BosonState out;
    for (const auto& [w, c] : v.terms()) {
        std::vector<int> m = w.labels();
        int zpow = 0;
        if (!f(m, zpow)) continue;
        out.add(AffineWeight(std::move(m)), zpow == 0 ? c : c.shifted(zpow));
    }
    return out;
}

// Cyclic order of the members of `members` (a set of residues mod n) starting after a gap.
std::vector<int> cyclic_order_after_gap(const std::vector<bool>& members, int n, GapChoice gap) {
    int g = -1;
    for (int i = 0; i < n; ++i) {
        if (members[static_cast<std::size_t>(i)]) continue;
        if (g < 0 || gap == GapChoice::last) g = i;
        if (gap == GapChoice::first) break;
    }
    if (g < 0) throw std::logic_error("cyclic linearisation needs a proper subset");
    std::vector<int> order;
    for (int s = 1; s < n; ++s) {
        const int i = mod(g + s, n);
        if (members[static_cast<std::size_t>(i)]) order.push_back(i);
    }
    return order;
}

struct BasisCacheKey {
    int kind;
    int r;
    AffineWeight w;
    friend auto operator<=>(const BasisCacheKey&, const BasisCacheKey&) = default;
};

// Memoised action of e_r(A) and h_r(A) on single basis vectors.
const BosonState& cached_basis_action(int kind, int r, const AffineWeight& w,
                                      const std::function<BosonState(const BosonState&)>& compute) {
    thread_local std::map<BasisCacheKey, BosonState> cache;
    BasisCacheKey key{kind, r, w};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto [pos, inserted] = cache.emplace(std::move(key), compute(BosonState(w)));
    return pos->second;
}

BosonState apply_cached(int kind, int r, const BosonState& v,
                        const std::function<BosonState(const BosonState&)>& compute) {
    BosonState out;
    for (const auto& [w, c] : v.terms()) {
        BosonState img = cached_basis_action(kind, r, w, compute);
        img *= c;
        out += img;
    }
    return out;
}

BosonState sum_of_words(const std::vector<GenWord>& words, const BosonState& v) {
    BosonState out;
    for (const auto& w : words) out += apply_a_word(w, v);
    return out;
}

}  // namespace

BosonState apply_phi_star(int i, const BosonState& v) {
    const int n = rank_of(v);
    return map_labels(v, [&](std::vector<int>& m, int&) {
        ++m[static_cast<std::size_t>(mod(i, n))];
        return true;
    });
}

BosonState apply_phi(int i, const BosonState& v) {
    const int n = rank_of(v);
    return map_labels(v, [&](std::vector<int>& m, int&) {
        int& slot = m[static_cast<std::size_t>(mod(i, n))];
        if (slot == 0) return false;
        --slot;
        return true;
    });
}

BosonState apply_a(int i, const BosonState& v) {
    const int n = rank_of(v);
    const int src = mod(i, n);
    const int dst = mod(i + 1, n);
    return map_labels(v, [&](std::vector<int>& m, int& zpow) {
        if (m[static_cast<std::size_t>(src)] == 0) return false;
        --m[static_cast<std::size_t>(src)];
        ++m[static_cast<std::size_t>(dst)];
        if (src == 0) zpow = 1;
        return true;
    });
}

BosonState apply_a_word(const GenWord& w, const BosonState& v) {
    BosonState cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply_a(*it, cur);
    return cur;
}

std::vector<GenWord> nc_e_words(int r, int n, GapChoice gap) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("nc_e_words needs 1 <= r <= n-1");
    std::vector<GenWord> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        std::vector<bool> members(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        std::vector<int> order = cyclic_order_after_gap(members, n, gap);
        out.emplace_back(order.rbegin(), order.rend());
    }
    return out;
}

std::vector<GenWord> nc_h_words(int r, int n, GapChoice gap) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("nc_h_words needs 1 <= r <= n-1");
    std::vector<GenWord> out;
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n) {
            if (left != 0) return;
            std::vector<bool> members(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = mult[static_cast<std::size_t>(i)] > 0;
            GenWord w;
            for (int i : cyclic_order_after_gap(members, n, gap))
                w.insert(w.end(), static_cast<std::size_t>(mult[static_cast<std::size_t>(i)]), i);
            out.push_back(std::move(w));
            return;
        }
        for (int p = 0; p <= left; ++p) {
            mult[static_cast<std::size_t>(idx)] = p;
            rec(idx + 1, left - p);
        }
        mult[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0, r);
    return out;
}

SymPoly boson_e_symbol(int r, int n) {
    if (r < 0 || r > n) return SymPoly{};
    if (r == 0) return SymPoly::constant(LaurentInt(1));
    if (r == n) return SymPoly::constant(z_power(1));
    return SymPoly::symbol(r);
}

BosonState nc_e_apply(int r, const BosonState& v) {
    const int n = rank_of(v);
    if (v.is_zero() || r < 0 || r > n) return BosonState{};
    if (r == 0) return v;
    if (r == n) return z_power(1) * v;
    return apply_cached(0, r, v, [&](const BosonState& b) { return sum_of_words(nc_e_words(r, n), b); });
}

BosonState nc_h_apply_det(int r, const BosonState& v) {
    const int n = rank_of(v);
    if (v.is_zero() || r < 0) return BosonState{};
    if (r == 0) return v;
    const SymPoly det = expand_determinant(r, [&](int i, int j) { return boson_e_symbol(1 - (i + 1) + (j + 1), n); });
    return apply_sympoly<AffineWeight>(det, nc_e_apply, v);
}

BosonState nc_h_apply(int r, const BosonState& v) {
    const int n = rank_of(v);
    if (v.is_zero() || r < 0) return BosonState{};
    if (r == 0) return v;
    if (r <= n - 1)
        return apply_cached(1, r, v, [&](const BosonState& b) { return sum_of_words(nc_h_words(r, n), b); });
    return apply_cached(2, r, v, [&](const BosonState& b) { return nc_h_apply_det(r, b); });
}

BosonState nc_schur_apply_raw(const Partition& lambda, const BosonState& v) {
    const int n = rank_of(v);
    if (v.is_zero()) return BosonState{};
    const SymPoly det = jacobi_trudi_symbolic(lambda.transpose(), [&](int r) { return boson_e_symbol(r, n); });
    return apply_sympoly<AffineWeight>(det, nc_e_apply, v);
}

BosonState nc_schur_apply(const Partition& lambda, const BosonState& v) {
    if (v.is_zero()) return BosonState{};
    const int n = rank_of(v);
    const int k = v.terms().begin()->first.level();
    if (lambda.length() > n) throw std::invalid_argument("partition " + lambda.str() + " has more than n rows");
    const int full_columns = lambda.part(n);
    std::vector<int> rest;
    for (int i = 1; i <= n - 1; ++i) rest.push_back(lambda.part(i) - full_columns);
    const Partition stripped(rest);
    if (!stripped.fits(n - 1, k))
        throw std::invalid_argument("partition " + lambda.str() + " is outside the (n-1) x k box after stripping");
    return z_power(full_columns) * nc_schur_apply_raw(stripped, v);
}

BosonState nc_schur_apply_dual(const Partition& lambda, const BosonState& v) {
    if (v.is_zero()) return BosonState{};
    const SymPoly det = jacobi_trudi_symbolic(lambda, [](int r) {
        if (r < 0) return SymPoly{};
        if (r == 0) return SymPoly::constant(LaurentInt(1));
        return SymPoly::symbol(r);
    });
    return apply_sympoly<AffineWeight>(det, nc_h_apply, v);
}

BosonState fusion_product(const AffineWeight& lambda, const AffineWeight& mu) {
    if (lambda.rank() != mu.rank() || lambda.level() != mu.level())
        throw std::invalid_argument("fusion product needs weights of equal rank and level");
    return nc_schur_apply(weight_to_boxed(lambda), BosonState(mu));
}

long long fusion_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    if (nu.rank() != mu.rank() || nu.level() != mu.level())
        throw std::invalid_argument("fusion coefficient needs weights of equal rank and level");
    const LaurentInt c = fusion_product(lambda, mu).coefficient(nu);
    if (c.is_zero()) return 0;
    const int n = lambda.rank();
    const int excess = weight_to_boxed(lambda).size() + weight_to_boxed(mu).size() - weight_to_boxed(nu).size();
    if (excess % n != 0 || !c.is_monomial() || c.min_degree() != excess / n)
        throw std::logic_error("fusion coefficient violates the z-grading");
    const BigInt value = c.at_one();
    if (value < 0) throw std::logic_error("negative fusion coefficient");
    return value.convert_to<long long>();
}

BosonState monodromy_apply(MonodromyEntry which, int r, const BosonState& v) {
    const int n = rank_of(v);
    if (v.is_zero() || r < 0) return BosonState{};
    // Two components, each a polynomial in u with state coefficients.
    using Poly = std::vector<BosonState>;
    Poly top(1), bottom(1);
    if (which == MonodromyEntry::A || which == MonodromyEntry::C)
        top[0] = v;
    else
        bottom[0] = v;
    for (int i = 1; i <= n; ++i) {
        Poly new_top(top.size() + 1), new_bottom(top.size() + 1);
        for (std::size_t d = 0; d < top.size(); ++d) {
            new_top[d] += top[d];
            new_top[d + 1] += apply_phi_star(i, bottom[d]);
            new_bottom[d] += apply_phi(i, top[d]);
            new_bottom[d + 1] += bottom[d];
        }
        top = std::move(new_top);
        bottom = std::move(new_bottom);
        bottom.resize(top.size());
    }
    const Poly& picked = (which == MonodromyEntry::A || which == MonodromyEntry::B) ? top : bottom;
    if (static_cast<std::size_t>(r) >= picked.size()) return BosonState{};
    return picked[static_cast<std::size_t>(r)];
}

BosonState transfer_apply(int r, const BosonState& v) {
    return monodromy_apply(MonodromyEntry::A, r, v) + z_power(1) * monodromy_apply(MonodromyEntry::D, r, v);
}

}  // namespace vqc
