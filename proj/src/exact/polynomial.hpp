#pragma once

#include "exact/big_rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace witten {

// Univariate polynomial over Q, coefficients in ascending degree, no trailing zeros.
// Constants combine with polynomials in any indeterminate; two non-constant
// operands must share the indeterminate.
class Polynomial {
public:
    explicit Polynomial(std::string var = "x") : var_(std::move(var)) {}
    Polynomial(std::string var, std::vector<BigRational> coeffs);
    static Polynomial constant(const BigRational& c, std::string var = "x");
    static Polynomial monomial(const BigRational& c, unsigned degree, std::string var = "x");
    static Polynomial identity(std::string var = "x") { return monomial(BigRational(1), 1, std::move(var)); }

    const std::string& var() const { return var_; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    BigRational coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigRational(); }
    BigRational leading() const { return c_.empty() ? BigRational() : c_.back(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const BigRational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Euclidean division; throws ZeroDivisionError for a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Quotient, throwing DomainError when the division leaves a remainder.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
    // Monic gcd (zero when both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    BigRational eval(const BigRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    // this(q(y)), result in q's indeterminate.
    Polynomial compose(const Polynomial& q) const;
    Polynomial with_var(std::string v) const { return Polynomial(std::move(v), c_); }

    std::string str() const;

private:
    void trim();
    std::string var_;
    std::vector<BigRational> c_;
};

std::string common_var(const Polynomial& a, const Polynomial& b);

}  // namespace witten
