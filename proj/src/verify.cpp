#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "momentlab/catalog.hpp"
#include "momentlab/error.hpp"
#include "momentlab/identities.hpp"

namespace momentlab {

namespace {

class Checker {
public:
    Checker(std::string name, const VerifyOptions& options)
        : entry_{std::move(name), true, 0, ""}, perturb_(options.perturb == entry_.identity) {}

    /// Records one case: `value` must equal `oracle`.
    void expect(const MultiPoly& value, MultiPoly oracle, const std::string& label) {
        if (perturb_ && entry_.cases == 0) oracle += MultiPoly(1);
        ++entry_.cases;
        if (!(value == oracle)) fail(label + ": " + value.to_string() + " != " + oracle.to_string());
    }

    void expect_true(bool condition, const std::string& label) {
        const bool perturbed = perturb_ && entry_.cases == 0;
        ++entry_.cases;
        if (!condition || perturbed) fail(label);
    }

    template <class Seq>
    void expect_seq(const Seq& value, const Seq& oracle, const std::string& label) {
        const auto& v = value.values();
        const auto& o = oracle.values();
        if (v.size() != o.size()) {
            ++entry_.cases;
            fail(label + ": length mismatch");
            return;
        }
        for (std::size_t i = 0; i < v.size(); ++i) expect(v[i], o[i], label + "[" + std::to_string(i) + "]");
    }

    void fail(const std::string& detail) {
        if (entry_.passed) entry_.detail = detail;
        entry_.passed = false;
    }

    VerifyEntry finish() { return std::move(entry_); }

private:
    VerifyEntry entry_;
    bool perturb_;
};

using IdentityFn = std::function<void(Checker&, std::size_t)>;

struct Identity {
    const char* name;
    IdentityFn run;
};

const std::vector<Identity>& identities() {
    static const std::vector<Identity> list = {
        {"eq13",
         [](Checker& ck, std::size_t d) {
             const std::size_t top = std::max<std::size_t>(d, 2);
             const JacobiParams j = JacobiParams::symbolic_for_order(top);
             const CumulantSeq oracle = free_from_moments(moments_from_jacobi(j, top));
             for (std::size_t n = 2; n <= top; ++n) {
                 ck.expect(free_cumulant_motzkin(j, n), oracle.at(n), "c_" + std::to_string(n));
             }
         }},
        {"sign-coherence",
         [](Checker& ck, std::size_t d) {
             for (std::size_t n = 2; n <= std::max<std::size_t>(d, 2); ++n) {
                 const CancellationReport r = no_cancellation_check(n);
                 ck.expect_true(r.ok(), "n=" + std::to_string(n) +
                                            (r.violations.empty() ? "" : " " + r.violations.front()));
             }
         }},
        {"flajolet-routes",
         [](Checker& ck, std::size_t d) {
             const std::size_t order = std::min<std::size_t>(2 * d, 10);
             const JacobiParams j = JacobiParams::symbolic_for_order(order);
             ck.expect_seq(moments_from_jacobi_paths(j, order), moments_from_jacobi(j, order), "mu");
         }},
        {"free-two-routes",
         [](Checker& ck, std::size_t d) {
             const MomentSeq m = symbolic_moments(d);
             ck.expect_seq(free_from_moments(m), free_from_moments_reversion(m), "c");
         }},
        {"free-lukasiewicz",
         [](Checker& ck, std::size_t d) {
             const CumulantSeq c = symbolic_cumulants(CumulantKind::Free, d);
             ck.expect_seq(moments_from_cumulants_paths(c), moments_from_free(c), "mu");
         }},
        {"classical-lukasiewicz",
         [](Checker& ck, std::size_t d) {
             const CumulantSeq k = symbolic_cumulants(CumulantKind::Classical, d);
             ck.expect_seq(moments_from_cumulants_paths(k), moments_from_classical(k), "mu");
         }},
        {"boolean",
         [](Checker& ck, std::size_t d) {
             const std::size_t order = std::min<std::size_t>(2 * d, 10);
             const std::size_t depth = order / 2 + 1;
             const JacobiParams j = JacobiParams::symbolic(depth);
             const ValuationScheme scheme = ValuationScheme::motzkin(j.a, j.lambda);
             const TruncatedSeries h = contfrac_series(j, depth, ContFracKind::Boolean, order);
             const CumulantSeq via_moments = boolean_from_moments(moments_from_jacobi(j, order));
             for (std::size_t n = 1; n <= order; ++n) {
                 const MultiPoly paths = boolean_from_paths(scheme, n);
                 ck.expect(paths, h[n], "contfrac h_" + std::to_string(n));
                 ck.expect(paths, via_moments.at(n), "1-1/M h_" + std::to_string(n));
             }
         }},
        {"boolean-lukasiewicz",
         [](Checker& ck, std::size_t d) {
             for (CumulantKind kind : {CumulantKind::Free, CumulantKind::Classical}) {
                 const CumulantSeq k = symbolic_cumulants(kind, d);
                 const ValuationScheme scheme = kind == CumulantKind::Free
                                                    ? ValuationScheme::lukas_free(k.values())
                                                    : ValuationScheme::lukas_classical(k.values());
                 const CumulantSeq oracle = boolean_from_moments(to_moments(k));
                 for (std::size_t n = 1; n <= d; ++n) {
                     ck.expect(boolean_from_paths(scheme, n), oracle.at(n),
                               std::string(to_string(kind)) + " h_" + std::to_string(n));
                 }
             }
         }},
        {"free-from-boolean",
         [](Checker& ck, std::size_t d) {
             const std::size_t top = std::max<std::size_t>(d, 2);
             const JacobiParams j = JacobiParams::symbolic_for_order(top);
             const ValuationScheme scheme = ValuationScheme::motzkin(j.a, j.lambda);
             std::vector<MultiPoly> h;
             for (std::size_t n = 1; n <= top; ++n) h.push_back(boolean_from_paths(scheme, n));
             const CumulantSeq hs(CumulantKind::Boolean, h);
             for (std::size_t n = 2; n <= top; ++n) {
                 ck.expect(free_cumulant_from_boolean(hs, n), free_cumulant_motzkin(j, n), "c_" + std::to_string(n));
             }
         }},
        {"delta-product",
         [](Checker& ck, std::size_t d) {
             const std::size_t top = std::min<std::size_t>(d, 5);
             const JacobiParams j = JacobiParams::symbolic_for_order(2 * top);
             const MomentSeq m = moments_from_jacobi(j, 2 * top);
             const ValuationScheme scheme = ValuationScheme::motzkin(j.a, j.lambda);
             for (std::size_t n = 0; n <= top; ++n) {
                 MultiPoly product(1);
                 for (std::size_t k = 1; k <= n; ++k) {
                     product *= MultiPoly(Monomial(sym_lambda(static_cast<unsigned>(k)),
                                                   static_cast<unsigned>(n + 1 - k)),
                                          Rational(1));
                 }
                 const HankelMinorSpec spec = HankelMinorSpec::delta(n);
                 ck.expect(hankel_minor_det(m, spec), product, "Delta_" + std::to_string(n));
                 if (n <= 4) {
                     const GvResult gv = hankel_minor_gv(scheme, spec);
                     ck.expect_true(gv.configurations == 1 && gv.value == product,
                                    "GV Delta_" + std::to_string(n) + " has " + std::to_string(gv.configurations) +
                                        " configurations");
                 }
             }
         }},
        {"gv",
         [](Checker& ck, std::size_t d) {
             const std::size_t max_index = std::min<std::size_t>(d > 0 ? d - 1 : 0, 3);
             const std::size_t order = 2 * max_index;
             const JacobiParams j = JacobiParams::symbolic_for_order(order);
             const MomentSeq motzkin_moments = moments_from_jacobi(j, order);
             const ValuationScheme motzkin = ValuationScheme::motzkin(j.a, j.lambda);
             const CumulantSeq c = symbolic_cumulants(CumulantKind::Free, std::max<std::size_t>(order, 1));
             const MomentSeq free_moments = moments_from_free(c);
             const ValuationScheme lukas = ValuationScheme::lukas_free(c.values());
             for (const auto& spec : all_minor_specs(max_index)) {
                 ck.expect(hankel_minor_gv(motzkin, spec).value, hankel_minor_det(motzkin_moments, spec),
                           "motzkin " + spec.to_string());
                 ck.expect(hankel_minor_gv(lukas, spec).value, hankel_minor_det(free_moments, spec),
                           "lukas-free " + spec.to_string());
             }
         }},
        {"orthopoly",
         [](Checker& ck, std::size_t d) {
             const std::size_t top = std::min<std::size_t>(d, 3);
             const JacobiParams j = JacobiParams::symbolic_for_order(2 * top);
             const MomentSeq m = moments_from_jacobi(j, 2 * top);
             const MonicPolySeq rec = orthopoly_recurrence(j, top);
             for (std::size_t n = 0; n <= top; ++n) {
                 ck.expect(orthopoly_determinant(m, n), rec[n], "P_" + std::to_string(n));
             }
         }},
        {"orthogonality",
         [](Checker& ck, std::size_t d) {
             const std::size_t top = std::min<std::size_t>(d, 4);
             const auto run = [&](const JacobiParams& j, const std::string& label) {
                 const MomentSeq m = moments_from_jacobi(j, 2 * top);
                 const OrthogonalityReport r = orthogonality_check(m, orthopoly_recurrence(j, top), top, j);
                 ck.expect_true(r.ok, label + " " + r.message);
             };
             run(catalog::gaussian_hermite_jacobi(top + 1), "hermite");
             run(catalog::semicircle_jacobi(top + 1), "semicircle");
             run(JacobiParams::symbolic(top + 1), "symbolic");
         }},
        {"jacobi-roundtrip",
         [](Checker& ck, std::size_t d) {
             const std::size_t depth = std::clamp<std::size_t>(d, 1, 4);
             const JacobiParams j = JacobiParams::symbolic(depth);
             const JacobiParams back = jacobi_from_moments(moments_from_jacobi(j, 2 * depth - 1));
             for (std::size_t n = 0; n < depth; ++n) ck.expect(back.a_at(n), j.a_at(n), "a_" + std::to_string(n));
             for (std::size_t n = 1; n < depth; ++n) {
                 ck.expect(back.lambda_at(n), j.lambda_at(n), "lambda_" + std::to_string(n));
             }
         }},
        {"transform-roundtrips",
         [](Checker& ck, std::size_t d) {
             std::mt19937_64 rng(0x5eed + d);
             const std::size_t order = std::min<std::size_t>(3 * d, 16);
             for (int trial = 0; trial < 5; ++trial) {
                 const MomentSeq m = catalog::random_moments(rng, order);
                 for (CumulantKind kind : {CumulantKind::Free, CumulantKind::Classical, CumulantKind::Boolean}) {
                     ck.expect_seq(to_moments(from_moments(m, kind)), m, std::string(to_string(kind)));
                 }
                 ck.expect_seq(free_from_moments(m), free_from_moments_reversion(m), "free two routes");
             }
         }},
        {"homogeneity",
         [](Checker& ck, std::size_t d) {
             const MomentSeq m = symbolic_moments(d);
             const MultiPoly t(sym_t());
             for (CumulantKind kind : {CumulantKind::Free, CumulantKind::Classical, CumulantKind::Boolean}) {
                 const CumulantSeq k = from_moments(m, kind);
                 const CumulantSeq scaled = from_moments(scale_moments(m, t), kind);
                 for (std::size_t n = 1; n <= d; ++n) {
                     ck.expect(scaled.at(n), k.at(n) * pow(t, static_cast<unsigned>(n)),
                               std::string(to_string(kind)) + " k_" + std::to_string(n));
                 }
             }
         }},
        {"leading-term",
         [](Checker& ck, std::size_t d) {
             const MomentSeq m = symbolic_moments(d);
             for (CumulantKind kind : {CumulantKind::Free, CumulantKind::Classical, CumulantKind::Boolean}) {
                 const CumulantSeq k = from_moments(m, kind);
                 for (std::size_t n = 1; n <= d; ++n) {
                     const MultiPoly rest = k.at(n) - m[n];
                     bool lower_only = true;
                     for (const auto& [mono, c] : rest.terms()) {
                         for (const auto& [s, e] : mono.factors()) {
                             if (s.family() != Family::Mu || s.index() >= n) lower_only = false;
                         }
                     }
                     ck.expect_true(lower_only, std::string(to_string(kind)) + " k_" + std::to_string(n));
                 }
             }
         }},
    };
    return list;
}

}  // namespace

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& id : identities()) names.emplace_back(id.name);
    return names;
}

bool VerifyReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.passed; });
}

VerifyReport verify_suite(std::size_t depth, const VerifyOptions& options) {
    if (!options.only.empty()) {
        const auto names = identity_names();
        if (std::find(names.begin(), names.end(), options.only) == names.end()) {
            throw std::invalid_argument("unknown identity '" + options.only + "'");
        }
    }
    VerifyReport report;
    report.depth = depth;
    for (const auto& id : identities()) {
        if (!options.only.empty() && options.only != id.name) continue;
        Checker ck(id.name, options);
        try {
            id.run(ck, depth);
        } catch (const std::exception& e) {
            ck.fail(std::string("exception: ") + e.what());
        }
        report.entries.push_back(ck.finish());
    }
    return report;
}

}  // namespace momentlab
