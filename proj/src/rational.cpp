#include "momentlab/rational.hpp"

#include <stdexcept>

#include "momentlab/error.hpp"

namespace momentlab {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
        throw MathError(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw MathError(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace momentlab
