#pragma once

#include "exact/polynomial.hpp"

namespace witten {

// num/den in lowest terms with monic denominator; zero is 0/1.
class RationalFunction {
public:
    explicit RationalFunction(std::string var = "x");
    RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(const BigRational& c, std::string var = "x");

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::string& var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Valid only when is_constant().
    BigRational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(int e) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    // Throws PoleError where the denominator vanishes.
    BigRational eval(const BigRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    // Same function written with the denominator's constant term equal to 1
    // (e.g. x/(1-x) rather than -x/(x-1)); num/den stay coprime.
    std::pair<Polynomial, Polynomial> unit_constant_form() const;

    std::string str() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace witten
