#include "exact/big_rational.hpp"

#include "common/errors.hpp"

#include <cctype>

namespace witten {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw ZeroDivisionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) {
    if (q_.get_den() == 0) throw ZeroDivisionError("rational with zero denominator");
    q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    auto valid_int = [](const std::string& s, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw DomainError("not a rational number: '" + text + "'");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw ZeroDivisionError("rational with zero denominator: '" + text + "'");
    return BigRational(mpq_class(n, d));
}

std::string BigRational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::short_str() const {
    return is_integer() ? q_.get_num().get_str() : str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw ZeroDivisionError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw ZeroDivisionError("zero raised to a negative power");
        return BigRational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.short_str(); }

BigRational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRational(f);
}

BigRational binomial(const BigRational& x, unsigned k) {
    BigRational acc(1);
    for (unsigned j = 0; j < k; ++j) acc *= x - BigRational(static_cast<long>(j));
    return acc / factorial(k);
}

BigRational rising_factorial(const BigRational& x, unsigned k) {
    BigRational acc(1);
    for (unsigned j = 0; j < k; ++j) acc *= x + BigRational(static_cast<long>(j));
    return acc;
}

}  // namespace witten
