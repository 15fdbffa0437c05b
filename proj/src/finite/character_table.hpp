#pragma once

#include "exact/big_rational.hpp"
#include "numerics/budget.hpp"

#include <string>
#include <vector>

namespace witten {

struct GaussianRational {
    BigRational re;
    BigRational im;

    static GaussianRational parse(const std::string& text);
    std::string str() const;
    Complex to_complex() const { return {re.to_double(), im.to_double()}; }
    GaussianRational conj() const { return {re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

struct ConjugacyClass {
    std::string label;
    long size;
};

struct Irrep {
    long degree;
    std::vector<GaussianRational> chi;  // one value per class
};

// Character table of a finite group, validated on construction:
// class sizes sum to the order, degrees squared sum to the order, rows orthogonal.
class CharacterTable {
public:
    CharacterTable(std::string name, long order, std::vector<ConjugacyClass> classes, std::vector<Irrep> irreps);

    // Line format: "group <name> <order>", "classes <size>...", "irrep <deg> <chi>...".
    // '#' starts a comment. Throws ParseError with the offending line number.
    static CharacterTable parse(const std::string& text);
    static CharacterTable load(const std::string& path);
    static CharacterTable s3();
    static CharacterTable q8();
    // "s3" or "q8"
    static CharacterTable builtin(const std::string& name);

    const std::string& name() const { return name_; }
    long order() const { return order_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    // Index of the class of the identity (size 1, chi = degree for every irrep).
    int identity_class() const { return identity_; }

private:
    std::string name_;
    long order_;
    std::vector<ConjugacyClass> classes_;
    std::vector<Irrep> irreps_;
    int identity_ = -1;
};

// sum_rho chi_rho(c) deg(rho)^{-s-1}
Complex finite_witten_L(const CharacterTable& table, Complex s, int class_index);
// Exact value at integer s.
GaussianRational finite_witten_L_exact(const CharacterTable& table, long s, int class_index);

// (1/|G|) sum_c |c| finite_witten_L(c)
Complex haar_average_finite(const CharacterTable& table, Complex s);
GaussianRational haar_average_finite_exact(const CharacterTable& table, long s);

}  // namespace witten
