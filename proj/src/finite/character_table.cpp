#include "finite/character_table.hpp"

#include "common/errors.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace witten {

namespace {

BigRational parse_component(const std::string& text) {
    if (text == "+" || text.empty()) return BigRational(1);
    if (text == "-") return BigRational(-1);
    return BigRational::parse(text);
}

GaussianRational conj_product(const GaussianRational& a, const GaussianRational& b) { return a * b.conj(); }

// Row orthogonality failure as (i, j), or nullopt.
std::optional<std::pair<size_t, size_t>> orthogonality_failure(long order, const std::vector<ConjugacyClass>& classes,
                                                               const std::vector<Irrep>& irreps) {
    for (size_t i = 0; i < irreps.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            GaussianRational acc;
            for (size_t c = 0; c < classes.size(); ++c)
                acc = acc + GaussianRational{BigRational(classes[c].size), BigRational()} *
                                conj_product(irreps[i].chi[c], irreps[j].chi[c]);
            const GaussianRational expected{BigRational(i == j ? order : 0), BigRational()};
            if (!(acc == expected)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty character value");
    if (text.back() != 'i') return {BigRational::parse(text), BigRational()};
    const std::string body = text.substr(0, text.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {BigRational(), parse_component(body)};
    return {BigRational::parse(body.substr(0, split)), parse_component(body.substr(split))};
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.short_str();
    std::string imag = im.abs() == BigRational(1) ? "" : im.abs().short_str();
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag + "i";
    return re.short_str() + (im.sign() < 0 ? "-" : "+") + imag + "i";
}

CharacterTable::CharacterTable(std::string name, long order, std::vector<ConjugacyClass> classes,
                               std::vector<Irrep> irreps)
    : name_(std::move(name)), order_(order), classes_(std::move(classes)), irreps_(std::move(irreps)) {
    if (order_ <= 0) throw DomainError("group order must be positive");
    if (classes_.empty()) throw DomainError("character table has no classes");
    long total = 0;
    for (const auto& c : classes_) {
        if (c.size <= 0) throw DomainError("class sizes must be positive");
        total += c.size;
    }
    if (total != order_) throw DomainError("class sizes sum to " + std::to_string(total) + ", not the order");
    if (irreps_.size() != classes_.size()) throw DomainError("number of irreps differs from number of classes");
    long deg2 = 0;
    for (const auto& r : irreps_) {
        if (r.degree <= 0) throw DomainError("irrep degrees must be positive");
        if (r.chi.size() != classes_.size()) throw DomainError("irrep has the wrong number of character values");
        deg2 += r.degree * r.degree;
    }
    if (deg2 != order_) throw DomainError("squared degrees sum to " + std::to_string(deg2) + ", not the order");
    if (auto bad = orthogonality_failure(order_, classes_, irreps_))
        throw DomainError("rows " + std::to_string(bad->second + 1) + " and " + std::to_string(bad->first + 1) +
                          " violate orthogonality");
    for (size_t c = 0; c < classes_.size() && identity_ < 0; ++c) {
        if (classes_[c].size != 1) continue;
        bool all = true;
        for (const auto& r : irreps_)
            if (!(r.chi[c] == GaussianRational{BigRational(r.degree), BigRational()})) all = false;
        if (all) identity_ = static_cast<int>(c);
    }
    if (identity_ < 0) throw DomainError("no identity class (size 1 with chi = degree)");
}

CharacterTable CharacterTable::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<std::string> name;
    long order = 0;
    int group_line = 0, classes_line = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<Irrep> irreps;
    std::vector<int> irrep_lines;

    auto parse_long = [&](const std::string& tok, const char* what) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", lineno);
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "group") {
            if (name) throw ParseError("duplicate 'group' line", lineno);
            if (tok.size() != 3) throw ParseError("expected 'group <name> <order>'", lineno);
            name = tok[1];
            order = parse_long(tok[2], "order");
            if (order <= 0) throw ParseError("group order must be positive", lineno);
            group_line = lineno;
        } else if (kw == "classes") {
            if (!name) throw ParseError("'classes' before 'group'", lineno);
            if (!classes.empty()) throw ParseError("duplicate 'classes' line", lineno);
            if (tok.size() < 2) throw ParseError("'classes' needs at least one size", lineno);
            for (size_t k = 1; k < tok.size(); ++k) {
                long size = parse_long(tok[k], "class size");
                if (size <= 0) throw ParseError("class sizes must be positive", lineno);
                classes.push_back({"C" + std::to_string(k), size});
            }
            classes_line = lineno;
        } else if (kw == "irrep") {
            if (classes.empty()) throw ParseError("'irrep' before 'classes'", lineno);
            if (tok.size() != classes.size() + 2)
                throw ParseError("irrep needs a degree and " + std::to_string(classes.size()) + " character values",
                                 lineno);
            Irrep r;
            r.degree = parse_long(tok[1], "degree");
            if (r.degree <= 0) throw ParseError("irrep degree must be positive", lineno);
            for (size_t k = 2; k < tok.size(); ++k) {
                try {
                    r.chi.push_back(GaussianRational::parse(tok[k]));
                } catch (const std::exception& e) {
                    throw ParseError("bad character value '" + tok[k] + "'", lineno);
                }
            }
            irreps.push_back(std::move(r));
            irrep_lines.push_back(lineno);
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno);
        }
    }
    if (!name) throw ParseError("missing 'group' line", lineno);
    if (classes.empty()) throw ParseError("missing 'classes' line", lineno);
    long total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order) throw ParseError("class sizes sum to " + std::to_string(total) + ", not the order", classes_line);
    if (irreps.size() != classes.size())
        throw ParseError("expected " + std::to_string(classes.size()) + " irreps, found " + std::to_string(irreps.size()),
                         irreps.empty() ? lineno : irrep_lines.back());
    long deg2 = 0;
    for (const auto& r : irreps) deg2 += r.degree * r.degree;
    if (deg2 != order) throw ParseError("squared degrees sum to " + std::to_string(deg2) + ", not the order", group_line);
    if (auto bad = orthogonality_failure(order, classes, irreps))
        throw ParseError("irrep rows " + std::to_string(bad->second + 1) + " and " + std::to_string(bad->first + 1) +
                             " are not orthogonal",
                         irrep_lines[bad->first]);
    try {
        return CharacterTable(*name, order, std::move(classes), std::move(irreps));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno);
    }
}

CharacterTable CharacterTable::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open character table file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str());
}

CharacterTable CharacterTable::s3() {
    auto g = [](long v) { return GaussianRational{BigRational(v), BigRational()}; };
    return CharacterTable("S3", 6, {{"1", 1}, {"(12)", 3}, {"(123)", 2}},
                          {{1, {g(1), g(1), g(1)}}, {1, {g(1), g(-1), g(1)}}, {2, {g(2), g(0), g(-1)}}});
}

CharacterTable CharacterTable::q8() {
    auto g = [](long v) { return GaussianRational{BigRational(v), BigRational()}; };
    return CharacterTable("Q8", 8, {{"1", 1}, {"-1", 1}, {"i", 2}, {"j", 2}, {"k", 2}},
                          {{1, {g(1), g(1), g(1), g(1), g(1)}},
                           {1, {g(1), g(1), g(1), g(-1), g(-1)}},
                           {1, {g(1), g(1), g(-1), g(1), g(-1)}},
                           {1, {g(1), g(1), g(-1), g(-1), g(1)}},
                           {2, {g(2), g(-2), g(0), g(0), g(0)}}});
}

CharacterTable CharacterTable::builtin(const std::string& name) {
    if (name == "s3" || name == "S3") return s3();
    if (name == "q8" || name == "Q8") return q8();
    throw DomainError("unknown built-in group '" + name + "' (expected s3 or q8)");
}

GaussianRational finite_witten_L_exact(const CharacterTable& table, long s, int class_index) {
    if (class_index < 0 || class_index >= static_cast<int>(table.classes().size()))
        throw DomainError("class index out of range");
    GaussianRational acc;
    for (const auto& r : table.irreps()) {
        const BigRational w = BigRational(r.degree).pow(-s - 1);
        acc = acc + r.chi[class_index] * GaussianRational{w, BigRational()};
    }
    return acc;
}

Complex finite_witten_L(const CharacterTable& table, Complex s, int class_index) {
    if (class_index < 0 || class_index >= static_cast<int>(table.classes().size()))
        throw DomainError("class index out of range");
    if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real()) && std::abs(s.real()) <= 1000.0)
        return finite_witten_L_exact(table, static_cast<long>(s.real()), class_index).to_complex();
    Complex acc = 0.0;
    for (const auto& r : table.irreps())
        acc += r.chi[class_index].to_complex() * std::exp((-s - 1.0) * std::log(static_cast<double>(r.degree)));
    return acc;
}

GaussianRational haar_average_finite_exact(const CharacterTable& table, long s) {
    GaussianRational acc;
    for (size_t c = 0; c < table.classes().size(); ++c)
        acc = acc + GaussianRational{BigRational(table.classes()[c].size), BigRational()} *
                        finite_witten_L_exact(table, s, static_cast<int>(c));
    return acc * GaussianRational{BigRational(1) / BigRational(table.order()), BigRational()};
}

Complex haar_average_finite(const CharacterTable& table, Complex s) {
    if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real()) && std::abs(s.real()) <= 1000.0)
        return haar_average_finite_exact(table, static_cast<long>(s.real())).to_complex();
    Complex acc = 0.0;
    for (size_t c = 0; c < table.classes().size(); ++c)
        acc += static_cast<double>(table.classes()[c].size) * finite_witten_L(table, s, static_cast<int>(c));
    return acc / static_cast<double>(table.order());
}

}  // namespace witten
