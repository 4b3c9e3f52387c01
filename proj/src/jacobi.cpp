#include "momentlab/jacobi.hpp"

#include <algorithm>

#include "momentlab/determinant.hpp"
#include "momentlab/error.hpp"
#include "momentlab/paths.hpp"

namespace momentlab {

const MultiPoly& JacobiParams::a_at(std::size_t n) const {
    if (n >= a.size()) {
        throw MathError(ErrorKind::IndexBeyondPrefix, "a_" + std::to_string(n) + " is beyond the parameter prefix",
                        static_cast<long>(n));
    }
    return a[n];
}

MultiPoly JacobiParams::lambda_at(std::size_t n) const {
    if (n == 0) return MultiPoly();
    if (n > lambda.size()) {
        throw MathError(ErrorKind::IndexBeyondPrefix,
                        "lambda_" + std::to_string(n) + " is beyond the parameter prefix", static_cast<long>(n));
    }
    return lambda[n - 1];
}

JacobiParams JacobiParams::symbolic(std::size_t depth) {
    JacobiParams j;
    for (unsigned n = 0; n < depth; ++n) j.a.emplace_back(sym_a(n));
    for (unsigned n = 1; n < depth; ++n) j.lambda.emplace_back(sym_lambda(n));
    return j;
}

JacobiParams JacobiParams::symbolic_for_order(std::size_t order) { return symbolic(order / 2 + 1); }

void require_prefix_for_order(const JacobiParams& j, std::size_t order) {
    if (order >= 1) j.a_at((order - 1) / 2);
    if (order >= 2) j.lambda_at(order / 2);
}

MomentSeq moments_from_jacobi(const JacobiParams& j, std::size_t order) {
    require_prefix_for_order(j, order);
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        // Row vector e_0^T J^k, restricted to levels from which level 0 is still reachable.
        std::vector<MultiPoly> row{MultiPoly(1)};
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t top = std::min(k + 1, n - k - 1);
            std::vector<MultiPoly> next(top + 1);
            for (std::size_t y = 0; y < row.size(); ++y) {
                if (row[y].is_zero()) continue;
                if (y + 1 <= top) next[y + 1] += row[y];
                if (y <= top && !j.a_at(y).is_zero()) next[y] += row[y] * j.a_at(y);
                if (y >= 1 && y - 1 <= top) {
                    const MultiPoly lam = j.lambda_at(y);
                    if (!lam.is_zero()) next[y - 1] += row[y] * lam;
                }
            }
            row = std::move(next);
        }
        mu.push_back(row[0]);
    }
    return MomentSeq(std::move(mu));
}

MomentSeq moments_from_jacobi_paths(const JacobiParams& j, std::size_t order) {
    require_prefix_for_order(j, order);
    const ValuationScheme scheme = ValuationScheme::motzkin(j.a, j.lambda);
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) mu.push_back(path_sum(n, scheme));
    return MomentSeq(std::move(mu));
}

namespace {

MultiPoly hankel_det(const MomentSeq& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    PolyMatrix mat(rows.size(), std::vector<MultiPoly>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t s = 0; s < cols.size(); ++s) {
            const std::size_t idx = rows[r] + cols[s];
            if (idx > m.order()) {
                throw MathError(ErrorKind::InsufficientMoments, "needs mu_" + std::to_string(idx),
                                static_cast<long>(idx));
            }
            mat[r][s] = m[idx];
        }
    }
    return det_exact(mat);
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

MultiPoly quotient(const MultiPoly& p, const MultiPoly& q, long singular_index) {
    if (q.is_zero()) {
        throw MathError(ErrorKind::SingularHankel,
                        "Hankel determinant Delta_" + std::to_string(singular_index) + " vanishes", singular_index);
    }
    auto r = divide_exact(p, q);
    if (!r) {
        throw MathError(ErrorKind::NotExactlyDivisible,
                        "(" + p.to_string() + ") / (" + q.to_string() + ") is not a polynomial");
    }
    return *r;
}

}  // namespace

MultiPoly hankel_delta(const MomentSeq& m, long n) {
    if (n < 0) return MultiPoly(1);
    const auto idx = iota(static_cast<std::size_t>(n) + 1);
    return hankel_det(m, idx, idx);
}

MultiPoly hankel_delta_tilde(const MomentSeq& m, long n) {
    if (n < 0) return MultiPoly();
    const auto rows = iota(static_cast<std::size_t>(n) + 1);
    auto cols = iota(static_cast<std::size_t>(n));
    cols.push_back(static_cast<std::size_t>(n) + 1);
    return hankel_det(m, rows, cols);
}

JacobiParams jacobi_from_moments(const MomentSeq& m) {
    const std::size_t depth = (m.order() + 1) / 2;
    std::vector<MultiPoly> delta;  // delta[k+1] = Delta_k
    std::vector<MultiPoly> tilde;  // tilde[k+1] = tildeDelta_k
    for (long k = -1; k < static_cast<long>(depth); ++k) {
        delta.push_back(hankel_delta(m, k));
        if (k >= 0 && delta.back().is_zero()) {
            throw MathError(ErrorKind::SingularHankel, "Hankel determinant Delta_" + std::to_string(k) + " vanishes", k);
        }
        tilde.push_back(hankel_delta_tilde(m, k));
    }
    JacobiParams j;
    for (std::size_t n = 0; n < depth; ++n) {
        const long ln = static_cast<long>(n);
        MultiPoly a = quotient(tilde[n + 1], delta[n + 1], ln);
        if (n > 0) a -= quotient(tilde[n], delta[n], ln - 1);
        j.a.push_back(std::move(a));
        if (n >= 1) {
            const MultiPoly denom = delta[n] * delta[n];
            j.lambda.push_back(quotient(delta[n - 1] * delta[n + 1], denom, ln - 1));
        }
    }
    return j;
}

MonicPolySeq orthopoly_recurrence(const JacobiParams& j, std::size_t n_max) {
    const MultiPoly x(sym_x());
    MonicPolySeq p{MultiPoly(1)};
    if (n_max >= 1) p.push_back(x - j.a_at(0));
    for (std::size_t n = 1; n < n_max; ++n) p.push_back((x - j.a_at(n)) * p[n] - j.lambda_at(n) * p[n - 1]);
    return p;
}

MultiPoly orthopoly_determinant(const MomentSeq& m, std::size_t n) {
    if (n == 0) return MultiPoly(1);
    if (2 * n - 1 > m.order()) {
        throw MathError(ErrorKind::InsufficientMoments, "D_" + std::to_string(n) + " needs mu_" +
                                                            std::to_string(2 * n - 1),
                        static_cast<long>(2 * n - 1));
    }
    PolyMatrix mat(n + 1, std::vector<MultiPoly>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= n; ++k) mat[i][k] = m[i + k];
    }
    for (std::size_t k = 0; k <= n; ++k) mat[n][k] = MultiPoly(Monomial(sym_x(), static_cast<unsigned>(k)), Rational(1));
    const MultiPoly d = det_exact(mat);
    return quotient(d, hankel_delta(m, static_cast<long>(n) - 1), static_cast<long>(n) - 1);
}

MultiPoly apply_functional(const MomentSeq& m, const MultiPoly& p) {
    const auto coeffs = p.coefficients_in(sym_x());
    MultiPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (k > m.order()) {
            throw MathError(ErrorKind::InsufficientMoments, "functional needs mu_" + std::to_string(k),
                            static_cast<long>(k));
        }
        out += coeffs[k] * m[k];
    }
    return out;
}

OrthogonalityReport orthogonality_check(const MomentSeq& m, const MonicPolySeq& polys, std::size_t n_max,
                                        const std::optional<JacobiParams>& j) {
    OrthogonalityReport report;
    if (polys.size() <= n_max) throw std::invalid_argument("orthogonality_check: not enough polynomials");
    MultiPoly norm_product(1);
    for (std::size_t i = 0; i <= n_max; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            const MultiPoly value = apply_functional(m, polys[i] * polys[k]);
            if (k < i && !value.is_zero() && report.ok) {
                report.ok = false;
                report.first_failure = {k, i};
                report.message = "L(P_" + std::to_string(k) + " P_" + std::to_string(i) + ") = " + value.to_string();
            }
            if (k == i) report.norms.push_back(value);
        }
        if (j) {
            if (i >= 1) norm_product *= j->lambda_at(i);
            if (!(report.norms.back() == norm_product) && report.ok) {
                report.ok = false;
                report.first_failure = {i, i};
                report.message = "s_" + std::to_string(i) + " = " + report.norms.back().to_string() +
                                 " but lambda_1...lambda_" + std::to_string(i) + " = " + norm_product.to_string();
            }
        }
    }
    return report;
}

namespace {

struct ContFracParts {
    TruncatedSeries t0;
    std::optional<TruncatedSeries> t1;
};

ContFracParts evaluate_contfrac(const JacobiParams& j, std::size_t depth, std::size_t order) {
    if (depth == 0) throw MathError(ErrorKind::InsufficientDepth, "continued fraction depth must be >= 1");
    const TruncatedSeries z = TruncatedSeries::variable(order);
    const TruncatedSeries one = TruncatedSeries::constant(order, MultiPoly(1));
    const TruncatedSeries z2 = z * z;
    TruncatedSeries t = reciprocal(one - z * j.a_at(depth - 1));
    std::optional<TruncatedSeries> below;
    for (std::size_t k = depth - 1; k-- > 0;) {
        below = t;
        t = reciprocal(one - z * j.a_at(k) - z2 * t * j.lambda_at(k + 1));
    }
    return {t, below};
}

TruncatedSeries select(const JacobiParams& j, const ContFracParts& parts, ContFracKind which, std::size_t order) {
    if (which == ContFracKind::Moment) return parts.t0;
    const TruncatedSeries z = TruncatedSeries::variable(order);
    TruncatedSeries h = z * j.a_at(0);
    if (parts.t1) h = h + z * z * *parts.t1 * j.lambda_at(1);
    return h;
}

}  // namespace

TruncatedSeries contfrac_series(const JacobiParams& j, std::size_t depth, ContFracKind which, std::size_t order) {
    if (depth == 0 || order > 2 * depth - 1) {
        throw MathError(ErrorKind::InsufficientDepth,
                        "depth " + std::to_string(depth) + " only fixes coefficients up to z^" +
                            std::to_string(depth == 0 ? 0 : 2 * depth - 1),
                        static_cast<long>(order));
    }
    return contfrac_expand_finite(j, depth, which, order);
}

TruncatedSeries contfrac_expand_finite(const JacobiParams& j, std::size_t depth, ContFracKind which,
                                       std::size_t order) {
    return select(j, evaluate_contfrac(j, depth, order), which, order);
}

}  // namespace momentlab
