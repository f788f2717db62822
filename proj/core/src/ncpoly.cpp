#include "vqc/ncpoly.hpp"

#include <algorithm>
#include <bit>

namespace vqc {

SymPoly SymPoly::constant(const LaurentInt& c) {
    SymPoly p;
    p.add({}, c);
    return p;
}

SymPoly SymPoly::symbol(int index) {
    SymPoly p;
    p.add({index}, LaurentInt(1));
    return p;
}

void SymPoly::add(const Monomial& m, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            SymPoly::Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add(m, ca * cb);
        }
    return out;
}

SymPoly expand_determinant(int m, const std::function<SymPoly(int, int)>& entry) {
    if (m == 0) return SymPoly::constant(LaurentInt(1));
    const std::size_t full = (std::size_t{1} << m);
    std::vector<SymPoly> minor(full);
    minor[0] = SymPoly::constant(LaurentInt(1));
    std::vector<std::vector<SymPoly>> cache(static_cast<std::size_t>(m), std::vector<SymPoly>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) cache[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
    for (std::size_t mask = 1; mask < full; ++mask) {
        const int row = std::popcount(mask) - 1;
        SymPoly acc;
        for (int c = 0; c < m; ++c) {
            if (!((mask >> c) & 1U)) continue;
            const SymPoly& a = cache[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            const SymPoly& sub = minor[mask & ~(std::size_t{1} << c)];
            if (a.is_zero() || sub.is_zero()) continue;
            const int larger = std::popcount(mask >> (c + 1));
            if (larger % 2 == 0)
                acc += a * sub;
            else
                acc -= a * sub;
        }
        minor[mask] = std::move(acc);
    }
    return minor[full - 1];
}

SymPoly jacobi_trudi_symbolic(const Partition& shape, const std::function<SymPoly(int)>& symbol_of) {
    const int m = shape.length();
    return expand_determinant(m, [&](int i, int j) { return symbol_of(shape.part(i + 1) - (i + 1) + (j + 1)); });
}

}  // namespace vqc
