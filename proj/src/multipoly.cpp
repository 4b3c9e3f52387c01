#include "momentlab/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "momentlab/error.hpp"

namespace momentlab {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::A: return "a";
        case Family::Lambda: return "lambda";
        case Family::C: return "c";
        case Family::Kappa: return "kappa";
        case Family::H: return "h";
        case Family::Mu: return "mu";
        case Family::X: return "x";
        case Family::T: return "t";
    }
    return "?";
}

Symbol::Symbol(Family family, unsigned index) : family_(family), index_(index) {
    if (family == Family::Lambda && index == 0) {
        throw std::invalid_argument("lambda_0 is the constant 0, not a symbol");
    }
}

std::string Symbol::to_string() const {
    std::string name(family_name(family_));
    if ((family_ == Family::X || family_ == Family::T) && index_ == 0) return name;
    return name + "_" + std::to_string(index_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Symbol s, unsigned exponent) {
    if (exponent > 0) {
        factors_.emplace_back(s, exponent);
        degree_ = exponent;
    }
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.first < y.first; });
    for (auto& [s, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == s) {
            factors_.back().second += e;
        } else {
            factors_.emplace_back(s, e);
        }
        degree_ += e;
    }
}

unsigned Monomial::exponent_of(Symbol s) const {
    for (const auto& [sym, e] : factors_) {
        if (sym == s) return e;
    }
    return 0;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    Monomial out;
    auto it = factors_.begin();
    for (const auto& [s, e] : divisor.factors_) {
        while (it != factors_.end() && it->first < s) {
            out.factors_.push_back(*it);
            ++it;
        }
        if (it == factors_.end() || !(it->first == s) || it->second < e) return std::nullopt;
        if (it->second > e) out.factors_.emplace_back(s, it->second - e);
        ++it;
    }
    out.factors_.insert(out.factors_.end(), it, factors_.end());
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial Monomial::without(Symbol s) const {
    Monomial out;
    for (const auto& f : factors_) {
        if (f.first == s) continue;
        out.factors_.push_back(f);
        out.degree_ += f.second;
    }
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : factors_) {
        if (!out.empty()) out += '*';
        out += s.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) {
            // The smaller symbol is absent from the other monomial.
            return fa[i].first < fb[i].first ? 1 : -1;
        }
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
    }
    if (i < fa.size()) return 1;
    if (i < fb.size()) return -1;
    return 0;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MultiPoly::MultiPoly(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, Rational c) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> MultiPoly::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return constant_term();
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

unsigned MultiPoly::degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(s));
    return d;
}

bool MultiPoly::mentions(Family f) const {
    for (const auto& [m, c] : terms_) {
        for (const auto& [s, e] : m.factors()) {
            if (s.family() == f) return true;
        }
    }
    return false;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Symbol s) const {
    std::vector<MultiPoly> out(degree_in(s) + 1);
    for (const auto& [m, c] : terms_) out[m.exponent_of(s)].add_term(m.without(s), c);
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<Symbol, MultiPoly>& values) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly term(c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [s, e] : m.factors()) {
            auto it = values.find(s);
            if (it == values.end()) {
                kept.emplace_back(s, e);
            } else {
                term *= pow(it->second, e);
            }
        }
        if (!kept.empty()) term *= MultiPoly(Monomial(std::move(kept)), Rational(1));
        out += term;
    }
    return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (auto c = b.constant_value()) return a * *c;
    if (auto c = a.constant_value()) return b * *c;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly result(1);
    MultiPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (auto c = q.constant_value()) return p * (Rational(1) / *c);
    MultiPoly remainder = p;
    MultiPoly quotient;
    const auto& [lead_m, lead_c] = q.leading();
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = remainder.leading();
        auto m = rm.divide(lead_m);
        if (!m) return std::nullopt;
        MultiPoly t(*m, rc / lead_c);
        quotient += t;
        remainder -= t * q;
    }
    return quotient;
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    return {};
}

// ---------------------------------------------------------------- text form

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string() + "*" + m.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        MultiPoly out = expr();
        if (!at_end()) fail("unbalanced ')'");
        return out;
    }

private:
    MultiPoly expr() {
        MultiPoly out;
        bool first = true;
        while (!at_end() && peek() != ')') {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            MultiPoly t = term();
            if (sign < 0) t = -t;
            out += t;
            skip_ws();
        }
        if (first) fail("empty expression");
        return out;
    }

    MultiPoly term() {
        MultiPoly t = factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            t *= factor();
            skip_ws();
        }
        return t;
    }

    MultiPoly factor() {
        if (at_end()) fail("unexpected end");
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            MultiPoly inner = expr();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            if (!at_end() && peek() == '^') {
                ++pos_;
                inner = pow(inner, number());
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            return MultiPoly(Rational::parse(text_.substr(start, pos_ - start)));
        }
        std::size_t start = pos_;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name.empty()) fail("expected symbol or number");
        std::optional<Family> family;
        for (Family f : {Family::A, Family::Lambda, Family::C, Family::Kappa, Family::H, Family::Mu,
                         Family::X, Family::T}) {
            if (family_name(f) == name) family = f;
        }
        if (!family) fail("unknown symbol family '" + std::string(name) + "'");
        unsigned index = 0;
        if (!at_end() && peek() == '_') {
            ++pos_;
            index = number();
        } else if (*family != Family::X && *family != Family::T) {
            fail("symbol '" + std::string(name) + "' needs an index");
        }
        unsigned exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            exponent = number();
        }
        try {
            return MultiPoly(Monomial(Symbol(*family, index), exponent), Rational(1));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    unsigned number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw MathError(ErrorKind::ParseError,
                        what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace momentlab
