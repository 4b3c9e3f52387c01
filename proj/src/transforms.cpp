#include "momentlab/transforms.hpp"

#include <stdexcept>

#include "momentlab/error.hpp"
#include "momentlab/paths.hpp"

namespace momentlab {

MomentSeq::MomentSeq(std::vector<MultiPoly> mu) : mu_(std::move(mu)) {
    if (mu_.empty() || !(mu_[0] == MultiPoly(1))) {
        throw MathError(ErrorKind::BadConstantTerm, "moment sequences need mu_0 = 1");
    }
}

MomentSeq MomentSeq::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw MathError(ErrorKind::InsufficientMoments, "only " + std::to_string(this->order()) + " moments known",
                        static_cast<long>(order));
    }
    return MomentSeq(std::vector<MultiPoly>(mu_.begin(), mu_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

std::string_view to_string(CumulantKind kind) {
    switch (kind) {
        case CumulantKind::Free: return "free";
        case CumulantKind::Classical: return "classical";
        case CumulantKind::Boolean: return "boolean";
    }
    return "?";
}

const MultiPoly& CumulantSeq::at(std::size_t n) const {
    if (n == 0 || n > values_.size()) {
        throw MathError(ErrorKind::IndexBeyondPrefix, "cumulant index " + std::to_string(n) + " out of range",
                        static_cast<long>(n));
    }
    return values_[n - 1];
}

CumulantSeq CumulantSeq::truncated(std::size_t order) const {
    if (order > values_.size()) {
        throw MathError(ErrorKind::IndexBeyondPrefix, "only " + std::to_string(values_.size()) + " cumulants known",
                        static_cast<long>(order));
    }
    return {kind_, std::vector<MultiPoly>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(order))};
}

MomentSeq symbolic_moments(std::size_t order) {
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (unsigned n = 1; n <= order; ++n) mu.emplace_back(sym_mu(n));
    return MomentSeq(std::move(mu));
}

CumulantSeq symbolic_cumulants(CumulantKind kind, std::size_t order) {
    std::vector<MultiPoly> values;
    for (unsigned n = 1; n <= order; ++n) {
        switch (kind) {
            case CumulantKind::Free: values.emplace_back(sym_c(n)); break;
            case CumulantKind::Classical: values.emplace_back(sym_kappa(n)); break;
            case CumulantKind::Boolean: values.emplace_back(sym_h(n)); break;
        }
    }
    return {kind, std::move(values)};
}

namespace {

// 1 + sum_{n>=1} k_n z^n
TruncatedSeries one_plus(const CumulantSeq& k) {
    TruncatedSeries s(k.order());
    s.set(0, MultiPoly(1));
    for (std::size_t n = 1; n <= k.order(); ++n) s.set(n, k.at(n));
    return s;
}

CumulantSeq tail(CumulantKind kind, const TruncatedSeries& s) {
    std::vector<MultiPoly> values(s.coeffs().begin() + 1, s.coeffs().end());
    return {kind, std::move(values)};
}

}  // namespace

CumulantSeq free_from_moments(const MomentSeq& m) {
    const std::size_t order = m.order();
    std::vector<MultiPoly> c;
    if (order == 0) return {CumulantKind::Free, c};
    c.push_back(m[1]);
    const TruncatedSeries inv = reciprocal(m.ogf());
    TruncatedSeries power = inv;  // M^{-(n-1)}
    for (std::size_t n = 2; n <= order; ++n) {
        c.push_back(power[n] * Rational(-1, static_cast<long>(n - 1)));
        power = power * inv;
    }
    return {CumulantKind::Free, std::move(c)};
}

CumulantSeq free_from_moments_reversion(const MomentSeq& m) {
    const std::size_t order = m.order();
    if (order == 0) return {CumulantKind::Free, {}};
    const TruncatedSeries w = m.ogf().shifted(1).truncated(order);  // z M(z)
    const TruncatedSeries z_of_w = reverse(w);
    return tail(CumulantKind::Free, compose(m.ogf(), z_of_w));
}

MomentSeq moments_from_free(const CumulantSeq& c) {
    if (c.kind() != CumulantKind::Free) throw std::invalid_argument("moments_from_free needs free cumulants");
    const std::size_t order = c.order();
    const TruncatedSeries cgf = one_plus(c);
    TruncatedSeries m = TruncatedSeries::constant(order, MultiPoly(1));
    // Iteration k fixes [z^k] M.
    for (std::size_t k = 0; k < order; ++k) m = compose(cgf, m.shifted(1).truncated(order));
    return MomentSeq(m.coeffs());
}

CumulantSeq classical_from_moments(const MomentSeq& m) {
    TruncatedSeries f(m.order());
    for (std::size_t n = 0; n <= m.order(); ++n) f.set(n, m[n] * (Rational(1) / factorial(static_cast<unsigned>(n))));
    TruncatedSeries k = log(f);
    for (std::size_t n = 1; n <= m.order(); ++n) k.set(n, k[n] * factorial(static_cast<unsigned>(n)));
    return tail(CumulantKind::Classical, k);
}

MomentSeq moments_from_classical(const CumulantSeq& kappa) {
    if (kappa.kind() != CumulantKind::Classical) throw std::invalid_argument("moments_from_classical needs classical cumulants");
    TruncatedSeries k(kappa.order());
    for (std::size_t n = 1; n <= kappa.order(); ++n) {
        k.set(n, kappa.at(n) * (Rational(1) / factorial(static_cast<unsigned>(n))));
    }
    TruncatedSeries f = exp(k);
    for (std::size_t n = 0; n <= kappa.order(); ++n) f.set(n, f[n] * factorial(static_cast<unsigned>(n)));
    return MomentSeq(f.coeffs());
}

CumulantSeq boolean_from_moments(const MomentSeq& m) {
    const TruncatedSeries one = TruncatedSeries::constant(m.order(), MultiPoly(1));
    return tail(CumulantKind::Boolean, one - reciprocal(m.ogf()));
}

MomentSeq moments_from_boolean(const CumulantSeq& h) {
    if (h.kind() != CumulantKind::Boolean) throw std::invalid_argument("moments_from_boolean needs boolean cumulants");
    const TruncatedSeries one = TruncatedSeries::constant(h.order(), MultiPoly(1));
    const TruncatedSeries hs = one_plus(h) - one;
    return MomentSeq(reciprocal(one - hs).coeffs());
}

namespace {

// sum over compositions of `remaining` of products of h, accumulated per number of parts.
void composition_sums(const CumulantSeq& h, std::size_t remaining, std::size_t parts, const MultiPoly& prefix,
                      std::vector<MultiPoly>& by_parts) {
    if (remaining == 0) {
        by_parts[parts] += prefix;
        return;
    }
    for (std::size_t i = 1; i <= remaining; ++i) {
        if (h.at(i).is_zero()) continue;
        composition_sums(h, remaining - i, parts + 1, prefix * h.at(i), by_parts);
    }
}

}  // namespace

MultiPoly free_cumulant_from_boolean(const CumulantSeq& h, std::size_t n) {
    if (n < 2) throw MathError(ErrorKind::BadOrder, "the composition formula needs n >= 2", static_cast<long>(n));
    if (h.order() < n) {
        throw MathError(ErrorKind::IndexBeyondPrefix, "need boolean cumulants up to " + std::to_string(n),
                        static_cast<long>(n));
    }
    std::vector<MultiPoly> by_parts(n + 1);
    composition_sums(h, n, 0, MultiPoly(1), by_parts);
    MultiPoly c;
    const long nm1 = static_cast<long>(n - 1);
    for (std::size_t r = 1; r <= n - 1; ++r) {
        Rational coeff = binomial(nm1, static_cast<long>(r)) * Rational(1, nm1);
        if (r % 2 == 0) coeff = -coeff;
        c += by_parts[r] * coeff;
    }
    return c;
}

CumulantSeq free_from_boolean(const CumulantSeq& h, std::size_t n) {
    if (h.kind() != CumulantKind::Boolean) throw std::invalid_argument("free_from_boolean needs boolean cumulants");
    if (n < 2) throw MathError(ErrorKind::BadOrder, "free_from_boolean needs n >= 2", static_cast<long>(n));
    std::vector<MultiPoly> c{h.at(1)};
    for (std::size_t k = 2; k <= n; ++k) c.push_back(free_cumulant_from_boolean(h, k));
    return {CumulantKind::Free, std::move(c)};
}

MomentSeq moments_from_cumulants_paths(const CumulantSeq& k) {
    ValuationScheme scheme = [&] {
        switch (k.kind()) {
            case CumulantKind::Free: return ValuationScheme::lukas_free(k.values());
            case CumulantKind::Classical: return ValuationScheme::lukas_classical(k.values());
            case CumulantKind::Boolean: break;
        }
        throw std::invalid_argument("boolean cumulants have no Lukasiewicz path model here");
    }();
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= k.order(); ++n) mu.push_back(path_sum(n, scheme));
    return MomentSeq(std::move(mu));
}

MomentSeq to_moments(const CumulantSeq& k) {
    switch (k.kind()) {
        case CumulantKind::Free: return moments_from_free(k);
        case CumulantKind::Classical: return moments_from_classical(k);
        case CumulantKind::Boolean: return moments_from_boolean(k);
    }
    throw std::logic_error("unreachable");
}

CumulantSeq from_moments(const MomentSeq& m, CumulantKind kind) {
    switch (kind) {
        case CumulantKind::Free: return free_from_moments(m);
        case CumulantKind::Classical: return classical_from_moments(m);
        case CumulantKind::Boolean: return boolean_from_moments(m);
    }
    throw std::logic_error("unreachable");
}

MomentSeq scale_moments(const MomentSeq& m, const MultiPoly& t) {
    std::vector<MultiPoly> mu;
    MultiPoly tn(1);
    for (std::size_t n = 0; n <= m.order(); ++n) {
        mu.push_back(m[n] * tn);
        tn *= t;
    }
    return MomentSeq(std::move(mu));
}

}  // namespace momentlab
