#include "vqc/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace vqc {

LaurentInt::LaurentInt(long long constant) {
    if (constant != 0) c_.emplace(0, BigInt(constant));
}

LaurentInt::LaurentInt(BigInt constant) {
    if (constant != 0) c_.emplace(0, std::move(constant));
}

LaurentInt LaurentInt::monomial(BigInt coeff, int exponent) {
    LaurentInt p;
    if (coeff != 0) p.c_.emplace(exponent, std::move(coeff));
    return p;
}

BigInt LaurentInt::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.begin()->first;
}

int LaurentInt::max_degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.rbegin()->first;
}

void LaurentInt::add_term(int exponent, const BigInt& value) {
    if (value == 0) return;
    auto [it, inserted] = c_.try_emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
    for (const auto& [e, v] : other.c_) add_term(e, v);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
    for (const auto& [e, v] : other.c_) add_term(e, -v);
    return *this;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) {
    LaurentInt out;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : other.c_) out.add_term(e1 + e2, v1 * v2);
    *this = std::move(out);
    return *this;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt out = *this;
    for (auto& [e, v] : out.c_) v = -v;
    return out;
}

LaurentInt LaurentInt::shifted(int e) const {
    LaurentInt out;
    for (const auto& [x, v] : c_) out.c_.emplace(x + e, v);
    return out;
}

LaurentInt LaurentInt::conj() const {
    LaurentInt out;
    for (const auto& [e, v] : c_) out.c_.emplace(-e, v);
    return out;
}

LaurentInt LaurentInt::twisted() const {
    LaurentInt out = *this;
    for (auto& [e, v] : out.c_)
        if (e % 2 != 0) v = -v;
    return out;
}

BigInt LaurentInt::at_one() const {
    BigInt s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
}

Complex LaurentInt::eval(Complex x) const {
    if (x == Complex(0.0, 0.0) && !c_.empty() && c_.begin()->first < 0)
        throw std::domain_error("negative power of zero in Laurent evaluation");
    Complex s = 0.0;
    for (const auto& [e, v] : c_) s += v.convert_to<double>() * std::pow(x, e);
    return s;
}

std::string LaurentInt::str(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (first) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace vqc
