#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plethyon {

using BigInt = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in a fixed number of variables with exact integer
// coefficients.  Exponent vectors all have length nvars(); zero coefficients
// are never stored.
class LaurentPoly {
public:
    using Terms = std::map<std::vector<int>, BigInt>;

    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly monomial(std::vector<int> exponents, BigInt coeff = 1);
    static LaurentPoly constant(int nvars, BigInt value);

    int nvars() const { return nvars_; }
    // Value overload keeps range-for over a temporary's terms well defined.
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const std::vector<int>& exponents, const BigInt& coeff);
    BigInt coefficient(const std::vector<int>& exponents) const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly& operator+=(const LaurentPoly&);
    LaurentPoly operator*(const BigInt& scalar) const;

    // x_i -> x_i^ell on every term.
    LaurentPoly power_substitute(int ell) const;

    // Maps variable i to the monomial with exponent vector images[i] in a
    // new ring with new_nvars variables (images[i] may be all-zero: x_i -> 1).
    LaurentPoly substitute_monomials(int new_nvars,
                                     const std::vector<std::vector<int>>& images) const;

    BigInt eval_at_one() const;

    // {"e1,e2,...,en": coeff} with exponent keys in lexicographic order.
    std::string to_json() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    int nvars_;
    Terms terms_;
};

}  // namespace plethyon
