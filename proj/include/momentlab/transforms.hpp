#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "momentlab/multipoly.hpp"
#include "momentlab/series.hpp"

namespace momentlab {

/// mu_0..mu_N with mu_0 = 1.
class MomentSeq {
public:
    /// Throws MathError(BadConstantTerm) unless mu[0] == 1.
    explicit MomentSeq(std::vector<MultiPoly> mu);

    std::size_t order() const { return mu_.size() - 1; }
    const MultiPoly& operator[](std::size_t n) const { return mu_.at(n); }
    const std::vector<MultiPoly>& values() const { return mu_; }
    MomentSeq truncated(std::size_t order) const;

    /// Ordinary generating function M(z) = sum mu_n z^n.
    TruncatedSeries ogf() const { return TruncatedSeries(order(), mu_); }

    friend bool operator==(const MomentSeq&, const MomentSeq&) = default;

private:
    std::vector<MultiPoly> mu_;
};

enum class CumulantKind { Free, Classical, Boolean };

std::string_view to_string(CumulantKind kind);

/// k_1..k_N; there is no k_0.
class CumulantSeq {
public:
    CumulantSeq(CumulantKind kind, std::vector<MultiPoly> values) : kind_(kind), values_(std::move(values)) {}

    CumulantKind kind() const { return kind_; }
    std::size_t order() const { return values_.size(); }
    /// 1-based.
    const MultiPoly& at(std::size_t n) const;
    const std::vector<MultiPoly>& values() const { return values_; }
    CumulantSeq truncated(std::size_t order) const;

    friend bool operator==(const CumulantSeq&, const CumulantSeq&) = default;

private:
    CumulantKind kind_;
    std::vector<MultiPoly> values_;
};

MomentSeq symbolic_moments(std::size_t order);                     // 1, mu_1, ..., mu_N
CumulantSeq symbolic_cumulants(CumulantKind kind, std::size_t order);  // c_n / kappa_n / h_n

/// Free cumulants via Lagrange inversion: c_1 = mu_1 and
/// c_n = -1/(n-1) [z^n] M(z)^{-(n-1)} for n >= 2.
CumulantSeq free_from_moments(const MomentSeq& m);
/// Free cumulants from C(zM(z)) = M(z): reverse w = zM(z), then C(w) = M(z(w)).
CumulantSeq free_from_moments_reversion(const MomentSeq& m);
/// Fixed point M <- C(zM(z)) iterated exactly N times from M = 1.
MomentSeq moments_from_free(const CumulantSeq& c);

/// kappa_n = n! [z^n] log(sum mu_k z^k / k!).
CumulantSeq classical_from_moments(const MomentSeq& m);
MomentSeq moments_from_classical(const CumulantSeq& kappa);

/// H(z) = 1 - 1/M(z).
CumulantSeq boolean_from_moments(const MomentSeq& m);
/// M(z) = 1/(1 - H(z)).
MomentSeq moments_from_boolean(const CumulantSeq& h);

/// c_n = sum_{r=1}^{n-1} (-1)^{r-1}/(n-1) binom(n-1, r) sum_{i_1+...+i_r=n} h_{i_1}...h_{i_r},
/// evaluated literally over compositions. Precondition n >= 2 (BadOrder otherwise).
MultiPoly free_cumulant_from_boolean(const CumulantSeq& h, std::size_t n);
/// c_1 = h_1, then the composition sum for 2 <= k <= n.
CumulantSeq free_from_boolean(const CumulantSeq& h, std::size_t n);

/// Moments as Lukasiewicz path sums with the free or classical valuation.
MomentSeq moments_from_cumulants_paths(const CumulantSeq& k);

/// Any moments/cumulant representation to moments, and moments to any cumulant kind.
MomentSeq to_moments(const CumulantSeq& k);
CumulantSeq from_moments(const MomentSeq& m, CumulantKind kind);

/// mu_n -> t^n mu_n.
MomentSeq scale_moments(const MomentSeq& m, const MultiPoly& t);

}  // namespace momentlab
