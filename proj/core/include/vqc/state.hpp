#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/laurent.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace vqc {

namespace detail {
inline int basis_param(const AffineWeight& w) { return w.rank(); }
inline int basis_param(const Word01& w) { return w.length(); }
}  // namespace detail

// Finitely supported vector over basis labels with Laurent coefficients.
template <class Label>
class StateVector {
public:
    using Map = std::map<Label, LaurentInt>;

    StateVector() = default;
    explicit StateVector(const Label& basis) { terms_.emplace(basis, LaurentInt(1)); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    LaurentInt coefficient(const Label& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? LaurentInt{} : it->second;
    }

    void add(const Label& b, const LaurentInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    StateVector& operator+=(const StateVector& other) {
        for (const auto& [b, c] : other.terms_) add(b, c);
        return *this;
    }
    StateVector& operator-=(const StateVector& other) {
        for (const auto& [b, c] : other.terms_) add(b, -c);
        return *this;
    }
    StateVector& operator*=(const LaurentInt& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    // Coefficient-wise map, dropping terms that become zero.
    StateVector map_coefficients(const std::function<LaurentInt(const LaurentInt&)>& f) const {
        StateVector out;
        for (const auto& [b, c] : terms_) out.add(b, f(c));
        return out;
    }

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(const LaurentInt& s, StateVector v) { return v *= s; }
    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    Map terms_;
};

using BosonState = StateVector<AffineWeight>;
using FermionState = StateVector<Word01>;

// Sesquilinear pairing sum_b conj(u_b) v_b with the formal variable conjugated to its inverse.
template <class Label>
LaurentInt inner(const StateVector<Label>& u, const StateVector<Label>& v) {
    int param = -1;
    auto check = [&](const Label& b) {
        const int p = detail::basis_param(b);
        if (param < 0) param = p;
        if (p != param) throw std::invalid_argument("inner product of states over different bases");
    };
    for (const auto& [b, c] : u.terms()) check(b);
    for (const auto& [b, c] : v.terms()) check(b);
    LaurentInt out;
    for (const auto& [b, c] : u.terms()) {
        auto it = v.terms().find(b);
        if (it != v.terms().end()) out += c.conj() * it->second;
    }
    return out;
}

// Extends a basis-level map linearly.
template <class Label>
StateVector<Label> apply_linear(const std::function<StateVector<Label>(const Label&)>& on_basis,
                                const StateVector<Label>& v) {
    StateVector<Label> out;
    for (const auto& [b, c] : v.terms()) {
        StateVector<Label> img = on_basis(b);
        img *= c;
        out += img;
    }
    return out;
}

// Linear operator on a state space, given by its action on single basis vectors.
template <class Label>
using Operator = std::function<StateVector<Label>(const StateVector<Label>&)>;

}  // namespace vqc
