#include "exact/rational_function.hpp"

#include "common/errors.hpp"

namespace witten {

RationalFunction::RationalFunction(std::string var)
    : num_(var), den_(Polynomial::constant(BigRational(1), var)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(BigRational(1), num_.var())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunction RationalFunction::constant(const BigRational& c, std::string var) {
    return RationalFunction(Polynomial::constant(c, std::move(var)));
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
    const std::string v = common_var(num_, den_);
    if (num_.is_zero()) {
        num_ = Polynomial(v);
        den_ = Polynomial::constant(BigRational(1), v);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::div_exact(num_, g);
        den_ = Polynomial::div_exact(den_, g);
    }
    const BigRational lead = den_.leading();
    num_ = num_.scaled(BigRational(1) / lead).with_var(v);
    den_ = den_.scaled(BigRational(1) / lead).with_var(v);
}

BigRational RationalFunction::constant_value() const {
    if (!is_constant()) throw DomainError("rational function is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDivisionError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw ZeroDivisionError("zero rational function to a negative power");
        return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

BigRational RationalFunction::eval(const BigRational& x) const {
    BigRational d = den_.eval(x);
    if (d.is_zero())
        throw PoleError("rational function pole at " + var() + " = " + x.short_str(),
                        {x.to_double(), 0.0});
    return num_.eval(x) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> x) const {
    std::complex<double> d = den_.eval(x);
    if (d == 0.0) throw PoleError("rational function pole", x);
    return num_.eval(x) / d;
}

std::pair<Polynomial, Polynomial> RationalFunction::unit_constant_form() const {
    BigRational c = den_.coeff(0);
    if (c.is_zero()) return {num_, den_};
    BigRational k = BigRational(1) / c;
    return {num_.scaled(k), den_.scaled(k)};
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace witten
