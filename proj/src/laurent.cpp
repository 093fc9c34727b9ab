#include "plethyon/laurent.hpp"

#include <stdexcept>

namespace plethyon {

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, BigInt coeff) {
    LaurentPoly p(static_cast<int>(exponents.size()));
    p.add_term(exponents, coeff);
    return p;
}

LaurentPoly LaurentPoly::constant(int nvars, BigInt value) {
    LaurentPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), value);
    return p;
}

void LaurentPoly::add_term(const std::vector<int>& exponents, const BigInt& coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly: exponent vector has wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.nvars_ != nvars_)
        throw std::invalid_argument("LaurentPoly: mixed variable counts");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (other.nvars_ != nvars_)
        throw std::invalid_argument("LaurentPoly: mixed variable counts");
    LaurentPoly out(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::operator*(const BigInt& scalar) const {
    LaurentPoly out(nvars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

LaurentPoly LaurentPoly::power_substitute(int ell) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> scaled(e);
        for (int& v : scaled) v *= ell;
        out.terms_.emplace(std::move(scaled), c);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_monomials(
    int new_nvars, const std::vector<std::vector<int>>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly: one image per variable required");
    for (const auto& img : images)
        if (static_cast<int>(img.size()) != new_nvars)
            throw std::invalid_argument("LaurentPoly: image exponent length mismatch");
    LaurentPoly out(new_nvars);
    std::vector<int> e(new_nvars);
    for (const auto& [old_e, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < new_nvars; ++j) e[j] += old_e[i] * images[i][j];
        out.add_term(e, c);
    }
    return out;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::string LaurentPoly::to_json() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += ',';
        first = false;
        s += '"';
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e[i]);
        }
        s += "\":" + c.str();
    }
    s += '}';
    return s;
}

}  // namespace plethyon
