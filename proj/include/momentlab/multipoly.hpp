#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momentlab/rational.hpp"

namespace momentlab {

/// Symbol families. `A` covers both a_n and the alternate alpha_n notation for
/// the same diagonal Jacobi parameters. `T` is a free scalar parameter.
enum class Family : std::uint8_t { A, Lambda, C, Kappa, H, Mu, X, T };

std::string_view family_name(Family f);

class Symbol {
public:
    /// lambda_0 is the value 0, never a symbol: Symbol(Family::Lambda, 0) throws.
    Symbol(Family family, unsigned index);

    Family family() const { return family_; }
    unsigned index() const { return index_; }
    std::string to_string() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol& a, const Symbol& b) {
        if (auto c = a.family_ <=> b.family_; c != 0) return c;
        return a.index_ <=> b.index_;
    }

private:
    Family family_;
    unsigned index_;
};

inline Symbol sym_a(unsigned i) { return {Family::A, i}; }
inline Symbol sym_lambda(unsigned i) { return {Family::Lambda, i}; }
inline Symbol sym_c(unsigned i) { return {Family::C, i}; }
inline Symbol sym_kappa(unsigned i) { return {Family::Kappa, i}; }
inline Symbol sym_h(unsigned i) { return {Family::H, i}; }
inline Symbol sym_mu(unsigned i) { return {Family::Mu, i}; }
inline Symbol sym_x() { return {Family::X, 0}; }
inline Symbol sym_t() { return {Family::T, 0}; }

/// Product of symbol powers; factors sorted by symbol, exponents positive.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(Symbol s, unsigned exponent = 1);
    explicit Monomial(std::vector<Factor> factors);  // normalizes

    const std::vector<Factor>& factors() const { return factors_; }
    unsigned degree() const { return degree_; }
    unsigned exponent_of(Symbol s) const;
    bool is_one() const { return factors_.empty(); }

    /// Divides when `divisor` divides *this; nullopt otherwise.
    std::optional<Monomial> divide(const Monomial& divisor) const;
    Monomial without(Symbol s) const;

    std::string to_string() const;  // "1" for the empty monomial

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// smallest symbol present decides (larger exponent is larger).
int compare_grlex(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) < 0; }
};

/// Sparse multivariate polynomial over Q. No stored zero coefficients.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    MultiPoly() = default;
    MultiPoly(Rational c);  // NOLINT: constants convert implicitly
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
    MultiPoly(Symbol s);  // NOLINT
    MultiPoly(const Monomial& m, Rational c);

    static MultiPoly parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value when the polynomial is a constant, nullopt otherwise.
    std::optional<Rational> constant_value() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    unsigned total_degree() const;
    unsigned degree_in(Symbol s) const;
    bool mentions(Family f) const;

    /// Leading term in grlex order. Precondition: nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

    /// Coefficients of powers of `s`: result[k] is the coefficient of s^k.
    std::vector<MultiPoly> coefficients_in(Symbol s) const;

    MultiPoly substitute(const std::map<Symbol, MultiPoly>& values) const;

    std::string to_string() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Adds c*m in place.
    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// Exact quotient p / q when q divides p in Q[symbols]; nullopt otherwise.
/// Throws std::domain_error when q is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);

}  // namespace momentlab
