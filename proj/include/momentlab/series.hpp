#pragma once

#include <cstddef>
#include <vector>

#include "momentlab/multipoly.hpp"

namespace momentlab {

/// Formal power series known exactly for z^0..z^order. Binary operations
/// truncate to the smaller operand order; nothing beyond that is claimed.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::size_t order, std::vector<MultiPoly> coeffs);  // pads with zeros / truncates

    /// z at the given order.
    static TruncatedSeries variable(std::size_t order);
    static TruncatedSeries constant(std::size_t order, const MultiPoly& c);

    std::size_t order() const { return coeffs_.size() - 1; }
    const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    void set(std::size_t n, MultiPoly value) { coeffs_.at(n) = std::move(value); }

    TruncatedSeries truncated(std::size_t order) const;  // order must not exceed this->order()
    /// Multiplies by z^k; the known range grows by k.
    TruncatedSeries shifted(std::size_t k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const MultiPoly& c);
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    std::vector<MultiPoly> coeffs_;
};

/// Multiplicative inverse; constant term must be a nonzero rational.
TruncatedSeries reciprocal(const TruncatedSeries& f);
/// f^k for any integer k; negative k needs an invertible constant term.
TruncatedSeries pow(const TruncatedSeries& f, long k);

enum class SeriesOp { Add, Mul, Reciprocal, Pow };
/// Dispatcher over the arithmetic above; `g` is ignored for unary ops, `k` is the exponent for Pow.
TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op, long k = 0);

/// f(g(z)); g(0) must be 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
/// Compositional inverse h with g(h(z)) = z; needs g(0) = 0 and an invertible rational [z^1]g.
TruncatedSeries reverse(const TruncatedSeries& g);

TruncatedSeries log(const TruncatedSeries& f);  // f(0) = 1
TruncatedSeries exp(const TruncatedSeries& f);  // f(0) = 0

}  // namespace momentlab
