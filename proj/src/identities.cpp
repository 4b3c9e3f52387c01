#include "momentlab/identities.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "momentlab/determinant.hpp"
#include "momentlab/error.hpp"

namespace momentlab {

// ---------------------------------------------------------------- free cumulants from Motzkin paths

std::vector<MotzkinCumulantTerm> free_cumulant_motzkin_terms(const JacobiParams& j, std::size_t n) {
    if (n < 2) throw MathError(ErrorKind::BadOrder, "the Motzkin cumulant formula needs n >= 2", static_cast<long>(n));
    require_prefix_for_order(j, n);
    const ValuationScheme scheme = ValuationScheme::motzkin(j.a, j.lambda);
    const long nm1 = static_cast<long>(n - 1);
    std::vector<MotzkinCumulantTerm> terms;
    for_each_path(n, Discipline::Motzkin, false, [&](const LatticePath& p) {
        MotzkinCumulantTerm t{p, returns_to_zero(p), Rational(0), valuate(p, scheme)};
        const long r = static_cast<long>(t.returns);
        t.coefficient = binomial(nm1, r) * Rational(1, nm1);
        if (r % 2 == 0) t.coefficient = -t.coefficient;
        terms.push_back(std::move(t));
    });
    return terms;
}

MultiPoly free_cumulant_motzkin(const JacobiParams& j, std::size_t n) {
    MultiPoly c;
    for (const auto& t : free_cumulant_motzkin_terms(j, n)) c += t.valuation * t.coefficient;
    return c;
}

CancellationReport no_cancellation_check(std::size_t n) {
    const JacobiParams j = JacobiParams::symbolic_for_order(n);
    CancellationReport report;
    std::map<Monomial, int, MonomialLess> signs;
    for (const auto& t : free_cumulant_motzkin_terms(j, n)) {
        ++report.paths;
        const auto& lv = t.path.levels();
        std::size_t level_zero_steps = 0;
        for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
            if (lv[i + 1] == 0 && lv[i] <= 1) ++level_zero_steps;  // horizontal at 0 or fall to 0
        }
        const Monomial& mono = t.valuation.terms().begin()->first;
        const std::size_t marked = mono.exponent_of(sym_a(0)) + mono.exponent_of(sym_lambda(1));
        if (level_zero_steps != t.returns || marked != t.returns) {
            report.returns_match_level_zero_steps = false;
            report.violations.push_back("path " + t.path.to_string());
        }
        if (t.coefficient.is_zero()) continue;
        for (const auto& [m, c] : t.valuation.terms()) {
            const int s = (c * t.coefficient).sign();
            auto [it, inserted] = signs.try_emplace(m, s);
            if (!inserted && it->second != s) {
                report.sign_coherent = false;
                report.violations.push_back("monomial " + m.to_string());
            }
        }
    }
    report.monomials = signs.size();
    return report;
}

// ---------------------------------------------------------------- boolean cumulants

MultiPoly boolean_from_paths(const ValuationScheme& scheme, std::size_t n) {
    if (n < 1) throw MathError(ErrorKind::BadOrder, "boolean cumulants start at n = 1", static_cast<long>(n));
    return path_sum(n, scheme, true);
}

// ---------------------------------------------------------------- Hankel minors

HankelMinorSpec::HankelMinorSpec(std::vector<std::size_t> rows, std::vector<std::size_t> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
    if (rows_.size() != cols_.size()) throw std::invalid_argument("minor spec: rows and cols differ in length");
    for (const auto* v : {&rows_, &cols_}) {
        for (std::size_t i = 1; i < v->size(); ++i) {
            if ((*v)[i] <= (*v)[i - 1]) throw std::invalid_argument("minor spec: indices must be strictly increasing");
        }
    }
}

HankelMinorSpec HankelMinorSpec::delta(std::size_t n) {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    return {idx, idx};
}

HankelMinorSpec HankelMinorSpec::delta_tilde(std::size_t n) {
    std::vector<std::size_t> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rows[i] = i;
    std::vector<std::size_t> cols(rows.begin(), rows.end() - 1);
    cols.push_back(n + 1);
    return {rows, cols};
}

std::size_t HankelMinorSpec::max_moment() const {
    if (rows_.empty()) return 0;
    return rows_.back() + cols_.back();
}

std::string HankelMinorSpec::to_string() const {
    auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "(" + join(rows_) + "; " + join(cols_) + ")";
}

std::vector<HankelMinorSpec> all_minor_specs(std::size_t max_index) {
    const std::size_t n = max_index + 1;
    std::vector<std::vector<std::vector<std::size_t>>> subsets_by_size(n + 1);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1U << i)) s.push_back(i);
        }
        subsets_by_size[s.size()].push_back(std::move(s));
    }
    std::vector<HankelMinorSpec> specs;
    for (std::size_t p = 1; p <= n; ++p) {
        for (const auto& r : subsets_by_size[p]) {
            for (const auto& c : subsets_by_size[p]) specs.emplace_back(r, c);
        }
    }
    return specs;
}

MultiPoly hankel_minor_det(const MomentSeq& m, const HankelMinorSpec& spec) {
    if (spec.max_moment() > m.order()) {
        throw MathError(ErrorKind::InsufficientMoments, "minor " + spec.to_string() + " needs mu_" +
                                                            std::to_string(spec.max_moment()),
                        static_cast<long>(spec.max_moment()));
    }
    PolyMatrix mat(spec.size(), std::vector<MultiPoly>(spec.size()));
    for (std::size_t r = 0; r < spec.size(); ++r) {
        for (std::size_t s = 0; s < spec.size(); ++s) mat[r][s] = m[spec.rows()[r] + spec.cols()[s]];
    }
    return det_exact(mat);
}

namespace {

class VertexSet {
public:
    explicit VertexSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & o.words_[w]) return true;
        }
        return false;
    }
    void merge(const VertexSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    }
    void remove(const VertexSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    }

private:
    std::vector<std::uint64_t> words_;
};

struct PlacedPath {
    LatticePath path;
    MultiPoly valuation;
    VertexSet vertices;
};

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t k = i + 1; k < perm.size(); ++k) {
            if (perm[i] > perm[k]) sign = -sign;
        }
    }
    return sign;
}

class GvSearch {
public:
    GvSearch(const ValuationScheme& scheme, const HankelMinorSpec& spec, bool keep_terms, std::uint64_t bound)
        : spec_(spec), keep_terms_(keep_terms), bound_(bound) {
        const std::size_t p = spec.size();
        const std::size_t max_row = p ? spec.rows().back() : 0;
        const std::size_t max_col = p ? spec.cols().back() : 0;
        const std::size_t max_len = max_row + max_col;
        x_offset_ = max_row;
        width_ = max_row + max_col + 1;
        const std::size_t levels = (scheme.discipline() == Discipline::Motzkin ? max_len / 2 : max_len) + 1;
        bits_ = width_ * levels;
        candidates_.assign(p, std::vector<std::vector<PlacedPath>>(p));
        for (std::size_t k = 0; k < p; ++k) {
            for (std::size_t s = 0; s < p; ++s) {
                const std::size_t start = spec.rows()[k];
                for_each_path(start + spec.cols()[s], scheme.discipline(), false, [&](const LatticePath& path) {
                    MultiPoly v = valuate(path, scheme);
                    if (v.is_zero()) return;
                    VertexSet vs(bits_);
                    for (std::size_t t = 0; t < path.levels().size(); ++t) {
                        // x = t - start, stored shifted by max_row
                        const std::size_t x = x_offset_ + t - start;
                        vs.set(static_cast<std::size_t>(path.levels()[t]) * width_ + x);
                    }
                    candidates_[k][s].push_back({path, std::move(v), std::move(vs)});
                });
            }
        }
    }

    GvResult run() {
        const std::size_t p = spec_.size();
        perm_.assign(p, 0);
        chosen_.assign(p, nullptr);
        used_.assign(p, false);
        occupied_ = VertexSet(bits_);
        if (p == 0) {
            result_.value = MultiPoly(1);
            result_.configurations = 1;
            return result_;
        }
        descend(0, MultiPoly(1));
        return std::move(result_);
    }

private:
    void descend(std::size_t k, const MultiPoly& weight) {
        const std::size_t p = spec_.size();
        if (k == p) {
            const int sign = permutation_sign(perm_);
            result_.value += sign > 0 ? weight : -weight;
            ++result_.configurations;
            if (keep_terms_) {
                PathConfiguration cfg{perm_, {}, sign, weight};
                for (const auto* c : chosen_) cfg.paths.push_back(c->path);
                result_.terms.push_back(std::move(cfg));
            }
            return;
        }
        for (std::size_t s = 0; s < p; ++s) {
            if (used_[s]) continue;
            for (const auto& cand : candidates_[k][s]) {
                if (cand.vertices.intersects(occupied_)) continue;
                if (++result_.nodes_visited > bound_) {
                    throw MathError(ErrorKind::ExplosionGuard,
                                    "more than " + std::to_string(bound_) + " partial configurations for minor " +
                                        spec_.to_string(),
                                    static_cast<long>(bound_));
                }
                used_[s] = true;
                perm_[k] = s;
                chosen_[k] = &cand;
                occupied_.merge(cand.vertices);
                descend(k + 1, weight * cand.valuation);
                occupied_.remove(cand.vertices);
                used_[s] = false;
            }
        }
    }

    const HankelMinorSpec& spec_;
    bool keep_terms_;
    std::uint64_t bound_;
    std::size_t x_offset_ = 0;
    std::size_t width_ = 0;
    std::size_t bits_ = 0;
    std::vector<std::vector<std::vector<PlacedPath>>> candidates_;
    std::vector<std::size_t> perm_;
    std::vector<const PlacedPath*> chosen_;
    std::vector<bool> used_;
    VertexSet occupied_;
    GvResult result_;
};

}  // namespace

GvResult hankel_minor_gv(const ValuationScheme& scheme, const HankelMinorSpec& spec, bool keep_terms,
                         std::uint64_t max_partial_configs) {
    return GvSearch(scheme, spec, keep_terms, max_partial_configs).run();
}

}  // namespace momentlab
