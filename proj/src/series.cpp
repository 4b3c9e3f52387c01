#include "momentlab/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "momentlab/error.hpp"

namespace momentlab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries z(order);
    if (order >= 1) z.coeffs_[1] = MultiPoly(1);
    return z;
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const MultiPoly& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot raise the known order");
    return TruncatedSeries(order, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    TruncatedSeries out(order() + k);
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n + k] = coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = -coeffs_[n];
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = f.coeffs_[n] + g.coeffs_[n];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = f.coeffs_[n] - g.coeffs_[n];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            if (g.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& f, const MultiPoly& c) {
    TruncatedSeries out(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) out.coeffs_[n] = f.coeffs_[n] * c;
    return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
    auto c0 = f[0].constant_value();
    if (!c0 || c0->is_zero()) {
        throw MathError(ErrorKind::NonInvertibleConstantTerm,
                        "constant term " + f[0].to_string() + " is not a nonzero rational");
    }
    const Rational inv = Rational(1) / *c0;
    TruncatedSeries out(f.order());
    out.set(0, MultiPoly(inv));
    for (std::size_t n = 1; n <= f.order(); ++n) {
        MultiPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero() || out[n - k].is_zero()) continue;
            acc += f[k] * out[n - k];
        }
        out.set(n, -(acc * inv));
    }
    return out;
}

TruncatedSeries pow(const TruncatedSeries& f, long k) {
    TruncatedSeries base = k < 0 ? reciprocal(f) : f;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    TruncatedSeries result = TruncatedSeries::constant(f.order(), MultiPoly(1));
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op, long k) {
    switch (op) {
        case SeriesOp::Add: return f + g;
        case SeriesOp::Mul: return f * g;
        case SeriesOp::Reciprocal: return reciprocal(f);
        case SeriesOp::Pow: return pow(f, k);
    }
    return f;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero()) {
        throw MathError(ErrorKind::CompositionConstantTerm, "inner series has constant term " + g[0].to_string());
    }
    const std::size_t order = std::min(f.order(), g.order());
    // Horner: f_N, then (acc * g + f_k) for k = N-1..0.
    TruncatedSeries acc = TruncatedSeries::constant(order, f[order]);
    const TruncatedSeries inner = g.truncated(order);
    for (std::size_t k = order; k-- > 0;) {
        acc = acc * inner;
        acc.set(0, acc[0] + f[k]);
    }
    return acc;
}

TruncatedSeries reverse(const TruncatedSeries& g) {
    if (g.order() < 1 || !g[0].is_zero()) {
        throw MathError(ErrorKind::NotReversible, "series must have zero constant term");
    }
    auto g1 = g[1].constant_value();
    if (!g1 || g1->is_zero()) {
        throw MathError(ErrorKind::NotReversible, "linear coefficient " + g[1].to_string() + " is not invertible");
    }
    const Rational inv = Rational(1) / *g1;
    TruncatedSeries h(g.order());
    h.set(1, MultiPoly(inv));
    // Adding d*z^n to h changes [z^n] g(h) by g_1*d and leaves lower coefficients alone.
    for (std::size_t n = 2; n <= g.order(); ++n) {
        TruncatedSeries gh = compose(g.truncated(n), h.truncated(n));
        h.set(n, -(gh[n] * inv));
    }
    return h;
}

TruncatedSeries log(const TruncatedSeries& f) {
    if (!f[0].constant_value() || !f[0].constant_value()->is_one()) {
        throw MathError(ErrorKind::BadConstantTerm, "log needs constant term 1, got " + f[0].to_string());
    }
    // g' f = f'  =>  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
    TruncatedSeries g(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        MultiPoly acc = f[n] * Rational(static_cast<long>(n));
        for (std::size_t k = 1; k < n; ++k) {
            if (g[k].is_zero() || f[n - k].is_zero()) continue;
            acc -= g[k] * f[n - k] * Rational(static_cast<long>(k));
        }
        g.set(n, acc * Rational(1, static_cast<long>(n)));
    }
    return g;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (!f[0].is_zero()) {
        throw MathError(ErrorKind::BadConstantTerm, "exp needs constant term 0, got " + f[0].to_string());
    }
    // e' = f' e  =>  n e_n = sum_{k=1}^{n} k f_k e_{n-k}
    TruncatedSeries e(f.order());
    e.set(0, MultiPoly(1));
    for (std::size_t n = 1; n <= f.order(); ++n) {
        MultiPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero() || e[n - k].is_zero()) continue;
            acc += f[k] * e[n - k] * Rational(static_cast<long>(k));
        }
        e.set(n, acc * Rational(1, static_cast<long>(n)));
    }
    return e;
}

}  // namespace momentlab
