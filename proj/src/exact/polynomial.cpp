#include "exact/polynomial.hpp"

#include "common/errors.hpp"

#include <sstream>

namespace witten {

Polynomial::Polynomial(std::string var, std::vector<BigRational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(const BigRational& c, std::string var) {
    return Polynomial(std::move(var), {c});
}

Polynomial Polynomial::monomial(const BigRational& c, unsigned degree, std::string var) {
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(var), std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string common_var(const Polynomial& a, const Polynomial& b) {
    if (a.var() == b.var()) return a.var();
    if (a.is_constant()) return b.var();
    if (b.is_constant()) return a.var();
    throw DomainError("polynomial indeterminates differ: " + a.var() + " vs " + b.var());
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(common_var(a, b), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::string v = common_var(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(v);
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(v, std::move(c));
}

Polynomial Polynomial::scaled(const BigRational& k) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c *= k;
    r.trim();
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(BigRational(1), var_);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_ != b.c_) return false;
    return a.var_ == b.var_ || a.is_constant();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
    std::string v = common_var(a, b);
    Polynomial r(v, a.c_);
    if (a.degree() < b.degree()) return {Polynomial(v), r};
    std::vector<BigRational> q(a.c_.size() - b.c_.size() + 1);
    const BigRational lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
        const BigRational f = r.leading() / lead;
        q[shift] = f;
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
        r.trim();
    }
    return {Polynomial(v, std::move(q)), r};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    std::string v = common_var(a, b);
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return Polynomial(v);
    return a.scaled(BigRational(1) / a.leading()).with_var(v);
}

BigRational Polynomial::eval(const BigRational& x) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
    Polynomial acc(q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * q + constant(*it, q.var());
    return acc;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const BigRational& c = c_[i];
        if (c.is_zero()) continue;
        BigRational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == BigRational(1);
        if (i == 0 || !unit) os << mag.short_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace witten
