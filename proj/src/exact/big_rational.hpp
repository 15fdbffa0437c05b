#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace witten {

// Exact rational with canonical form: den > 0, gcd(num, den) = 1, zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);
    explicit BigRational(const mpq_class& q);
    explicit BigRational(const mpz_class& z) : q_(z) {}

    // Accepts "a", "-a", "a/b".
    static BigRational parse(const std::string& text);

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }
    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    // "num/den", always with the slash.
    std::string str() const;
    // "num" when the denominator is 1, otherwise "num/den".
    std::string short_str() const;

    double to_double() const { return q_.get_d(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Integer power; negative exponents invert (zero base throws).
    BigRational pow(long e) const;
    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigRational factorial(unsigned n);

// x (x-1) ... (x-k+1) / k!
BigRational binomial(const BigRational& x, unsigned k);
inline BigRational binomial(long n, unsigned k) { return binomial(BigRational(n), k); }

// x (x+1) ... (x+k-1)
BigRational rising_factorial(const BigRational& x, unsigned k);

}  // namespace witten
