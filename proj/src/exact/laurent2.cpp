#include "exact/laurent2.hpp"

#include <sstream>

namespace witten {

LaurentPoly2 LaurentPoly2::monomial(const BigRational& c, int i, int j) {
    LaurentPoly2 r;
    r.add_term(c, i, j);
    return r;
}

BigRational LaurentPoly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRational() : it->second;
}

void LaurentPoly2::add_term(const BigRational& c, int i, int j) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Exponent{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(c, e.first, e.second);
    return a;
}

LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a + (-b); }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned e) const {
    LaurentPoly2 r = constant(BigRational(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

BigRational LaurentPoly2::eval(const BigRational& p, const BigRational& u) const {
    BigRational acc;
    for (const auto& [e, c] : terms_) acc += c * p.pow(e.first) * u.pow(e.second);
    return acc;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        os << c.abs().short_str();
        if (e.first) os << "*P^" << e.first;
        if (e.second) os << "*U^" << e.second;
    }
    return os.str();
}

}  // namespace witten
