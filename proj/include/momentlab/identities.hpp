#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "momentlab/jacobi.hpp"
#include "momentlab/multipoly.hpp"
#include "momentlab/paths.hpp"
#include "momentlab/transforms.hpp"

namespace momentlab {

// ---------------------------------------------------------------- free cumulants from Motzkin paths

/// One summand of c_n = sum_pi (-1)^{|pi|_0 - 1}/(n-1) binom(n-1, |pi|_0) v(pi).
struct MotzkinCumulantTerm {
    LatticePath path;
    std::size_t returns = 0;  // |pi|_0
    Rational coefficient;     // (-1)^{|pi|_0-1} binom(n-1,|pi|_0) / (n-1); zero when |pi|_0 = n
    MultiPoly valuation;
};

/// Every Motzkin path of length n with its coefficient; BadOrder for n < 2.
std::vector<MotzkinCumulantTerm> free_cumulant_motzkin_terms(const JacobiParams& j, std::size_t n);
MultiPoly free_cumulant_motzkin(const JacobiParams& j, std::size_t n);

struct CancellationReport {
    bool sign_coherent = true;
    bool returns_match_level_zero_steps = true;
    std::size_t paths = 0;
    std::size_t monomials = 0;
    std::vector<std::string> violations;  // offending monomials or paths

    bool ok() const { return sign_coherent && returns_match_level_zero_steps; }
};

/// Groups the signed Motzkin sum for c_n (symbolic parameters) by monomial and
/// checks that each monomial only ever receives one sign, and that |pi|_0 equals
/// the number of horizontal steps at level 0 plus the number of falls to level 0.
CancellationReport no_cancellation_check(std::size_t n);

// ---------------------------------------------------------------- boolean cumulants as first-return sums

/// h_n as the sum over irreducible paths of length n (n >= 1).
MultiPoly boolean_from_paths(const ValuationScheme& scheme, std::size_t n);

// ---------------------------------------------------------------- Hankel minors

/// Rows i_1 < ... < i_p and columns j_1 < ... < j_p of [mu_{i+j}].
class HankelMinorSpec {
public:
    /// Throws std::invalid_argument unless equal length and strictly increasing.
    HankelMinorSpec(std::vector<std::size_t> rows, std::vector<std::size_t> cols);

    /// 0..n by 0..n
    static HankelMinorSpec delta(std::size_t n);
    /// 0..n by 0..n-1, n+1
    static HankelMinorSpec delta_tilde(std::size_t n);

    const std::vector<std::size_t>& rows() const { return rows_; }
    const std::vector<std::size_t>& cols() const { return cols_; }
    std::size_t size() const { return rows_.size(); }
    std::size_t max_moment() const;  // max(i) + max(j)
    std::string to_string() const;

private:
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
};

/// All increasing p x p specs with indices in 0..max_index, p = 1..max_index+1.
std::vector<HankelMinorSpec> all_minor_specs(std::size_t max_index);

MultiPoly hankel_minor_det(const MomentSeq& m, const HankelMinorSpec& spec);

/// One vertex-disjoint path system: path k runs from (-rows[k], 0) to (cols[perm[k]], 0).
struct PathConfiguration {
    std::vector<std::size_t> perm;
    std::vector<LatticePath> paths;
    int sign = 1;
    MultiPoly valuation;  // product of path valuations, without the sign
};

struct GvResult {
    MultiPoly value;
    std::size_t configurations = 0;
    std::uint64_t nodes_visited = 0;
    std::vector<PathConfiguration> terms;  // filled only when requested
};

constexpr std::uint64_t kDefaultConfigBound = 10'000'000;

/// Signed sum over vertex-disjoint path systems (Gessel-Viennot). Vertices are
/// (x, level) pairs; a zero-length path occupies its single point. Throws
/// ExplosionGuard once more than `max_partial_configs` partial systems are visited.
GvResult hankel_minor_gv(const ValuationScheme& scheme, const HankelMinorSpec& spec, bool keep_terms = false,
                         std::uint64_t max_partial_configs = kDefaultConfigBound);

// ---------------------------------------------------------------- verification suite

struct VerifyEntry {
    std::string identity;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyReport {
    std::size_t depth = 0;
    std::vector<VerifyEntry> entries;
    bool all_passed() const;
};

struct VerifyOptions {
    /// Restrict to one identity class; empty runs all.
    std::string only;
    /// Harness self-test: perturbs the oracle side of the named identity by +1.
    std::string perturb;
};

std::vector<std::string> identity_names();

/// Runs every cross-module identity at symbolic order bounded by `depth`.
VerifyReport verify_suite(std::size_t depth, const VerifyOptions& options = {});

}  // namespace momentlab
