#pragma once

#include "exact/big_rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace witten {

// Sparse Laurent polynomial in two variables (P, U); zero coefficients are never stored.
class LaurentPoly2 {
public:
    using Exponent = std::pair<int, int>;

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(const BigRational& c, int i, int j);
    static LaurentPoly2 constant(const BigRational& c) { return monomial(c, 0, 0); }

    const std::map<Exponent, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    BigRational coeff(int i, int j) const;

    void add_term(const BigRational& c, int i, int j);

    LaurentPoly2 operator-() const;
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b);
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b);
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    LaurentPoly2 pow(unsigned e) const;
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

    BigRational eval(const BigRational& p, const BigRational& u) const;
    std::string str() const;

private:
    std::map<Exponent, BigRational> terms_;
};

}  // namespace witten
