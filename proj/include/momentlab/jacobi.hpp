#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/multipoly.hpp"
#include "momentlab/series.hpp"
#include "momentlab/transforms.hpp"

namespace momentlab {

/// Recurrence coefficients of monic orthogonal polynomials,
///   x P_n = P_{n+1} + a_n P_n + lambda_n P_{n-1},   lambda_0 = 0.
/// `a` holds a_0..a_{K-1}; `lambda` holds lambda_1..lambda_{K-1} (lambda[i] = lambda_{i+1}).
/// The diagonal parameters are sometimes written alpha_n; the `A` symbol family covers both.
struct JacobiParams {
    std::vector<MultiPoly> a;
    std::vector<MultiPoly> lambda;

    std::size_t depth() const { return a.size(); }
    const MultiPoly& a_at(std::size_t n) const;
    /// lambda_0 = 0; n >= 1 reads the prefix.
    MultiPoly lambda_at(std::size_t n) const;

    /// a_0..a_{depth-1}, lambda_1..lambda_{depth-1} as symbols.
    static JacobiParams symbolic(std::size_t depth);
    /// Depth large enough for moments up to `order` (levels reachable by paths of that length).
    static JacobiParams symbolic_for_order(std::size_t order);

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// Throws IndexBeyondPrefix unless the prefixes cover every step a Motzkin path
/// of length <= order can take.
void require_prefix_for_order(const JacobiParams& j, std::size_t order);

/// mu_n = (J^n)_{00} for the tridiagonal Jacobi matrix (1 above the diagonal,
/// a_n on it, lambda_n below it).
MomentSeq moments_from_jacobi(const JacobiParams& j, std::size_t order);
/// mu_n = sum of Flajolet valuations over Motzkin paths of length n.
MomentSeq moments_from_jacobi_paths(const JacobiParams& j, std::size_t order);

/// Hankel determinant Delta_n = det[mu_{i+j}]_{0<=i,j<=n}; Delta_{-1} = 1.
MultiPoly hankel_delta(const MomentSeq& m, long n);
/// Bordered determinant with columns 0..n-1, n+1; tilde Delta_{-1} = 0.
MultiPoly hankel_delta_tilde(const MomentSeq& m, long n);

/// lambda_n = Delta_{n-2} Delta_n / Delta_{n-1}^2 and
/// a_n = tildeDelta_n / Delta_n - tildeDelta_{n-1} / Delta_{n-1}.
/// From mu_0..mu_N returns depth K = floor((N+1)/2). Throws SingularHankel(k)
/// when a divisor Delta_k vanishes.
JacobiParams jacobi_from_moments(const MomentSeq& m);

/// Monic polynomials in the symbol x; polys[n] = P_n.
using MonicPolySeq = std::vector<MultiPoly>;

/// P_0 = 1, P_1 = x - a_0, P_{n+1} = (x - a_n) P_n - lambda_n P_{n-1}.
MonicPolySeq orthopoly_recurrence(const JacobiParams& j, std::size_t n_max);
/// P_n = D_n(x) / Delta_{n-1}, D_n the Hankel determinant with last row 1, x, ..., x^n.
MultiPoly orthopoly_determinant(const MomentSeq& m, std::size_t n);

/// Applies the moment functional x^k -> mu_k to a polynomial in x.
MultiPoly apply_functional(const MomentSeq& m, const MultiPoly& p);

struct OrthogonalityReport {
    bool ok = true;
    std::vector<MultiPoly> norms;  // s_n = L(P_n^2)
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
    std::string message;
};

/// Checks L(P_i P_j) = 0 for i != j <= n_max and, when `j` is given, s_n = lambda_1 ... lambda_n.
OrthogonalityReport orthogonality_check(const MomentSeq& m, const MonicPolySeq& polys, std::size_t n_max,
                                        const std::optional<JacobiParams>& j = std::nullopt);

enum class ContFracKind { Moment, Boolean };

/// Bottom-up evaluation of the continued fraction truncated at `depth` levels
///   M = 1/(1 - a_0 z - lambda_1 z^2/(1 - a_1 z - ...)),   H = a_0 z + lambda_1 z^2 T_1.
/// Coefficients are only stable up to z^{2 depth - 1}; asking for more throws InsufficientDepth.
TruncatedSeries contfrac_series(const JacobiParams& j, std::size_t depth, ContFracKind which, std::size_t order);
/// The same finite fraction expanded to any order, without the stability guard.
TruncatedSeries contfrac_expand_finite(const JacobiParams& j, std::size_t depth, ContFracKind which,
                                       std::size_t order);

}  // namespace momentlab
