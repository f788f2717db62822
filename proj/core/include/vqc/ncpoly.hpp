#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/laurent.hpp"
#include "vqc/state.hpp"

#include <functional>
#include <map>
#include <vector>

namespace vqc {

// Polynomial in commuting symbols S_1, S_2, ... with Laurent coefficients in the formal variable.
// A monomial is the sorted multiset of symbol indices.
class SymPoly {
public:
    using Monomial = std::vector<int>;

    SymPoly() = default;
    static SymPoly constant(const LaurentInt& c);
    static SymPoly symbol(int index);

    const std::map<Monomial, LaurentInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    void add(const Monomial& m, const LaurentInt& c);
    std::map<Monomial, LaurentInt> terms_;
};

// Determinant of an m x m matrix with polynomial entries, by Laplace expansion over column subsets.
SymPoly expand_determinant(int m, const std::function<SymPoly(int, int)>& entry);

// det(X_{shape_i - i + j}) of size length(shape), where X_r is supplied by symbol_of.
SymPoly jacobi_trudi_symbolic(const Partition& shape, const std::function<SymPoly(int)>& symbol_of);

// Evaluates a symbolic polynomial on a state, each symbol acting through apply_symbol.
template <class Label>
StateVector<Label> apply_sympoly(const SymPoly& p,
                                 const std::function<StateVector<Label>(int, const StateVector<Label>&)>& apply_symbol,
                                 const StateVector<Label>& v) {
    StateVector<Label> out;
    for (const auto& [mono, coeff] : p.terms()) {
        StateVector<Label> cur = v;
        for (auto it = mono.rbegin(); it != mono.rend() && !cur.is_zero(); ++it) cur = apply_symbol(*it, cur);
        cur *= coeff;
        out += cur;
    }
    return out;
}

}  // namespace vqc
