// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion N]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "momentlab/catalog.hpp"
#include "momentlab/error.hpp"
#include "momentlab/identities.hpp"
#include "momentlab/jacobi.hpp"
#include "momentlab/paths.hpp"
#include "momentlab/transforms.hpp"
#include "oracles.hpp"

using namespace momentlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> ints(std::initializer_list<long> v) {
    std::vector<MultiPoly> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Outcome criterion1() {
    Outcome o;
    for (std::size_t n = 2; n <= 7; ++n) {
        const JacobiParams j = JacobiParams::symbolic_for_order(n);
        o.require(free_cumulant_motzkin(j, n) == free_from_moments(moments_from_jacobi(j, n)).at(n),
                  "mismatch at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const JacobiParams j = JacobiParams::symbolic(3);
    o.require(free_cumulant_motzkin(j, 2) == P("lambda_1"), "c_2");
    o.require(free_cumulant_motzkin(j, 3) == P("lambda_1*a_1 - lambda_1*a_0"), "c_3");
    // per-path ledger for n = 3
    int seen = 0;
    for (const auto& t : free_cumulant_motzkin_terms(j, 3)) {
        const std::string s = t.path.to_string();
        if (s == "0,1,1,0") o.require(t.returns == 1 && t.coefficient == Rational(1) && t.valuation == P("a_1*lambda_1"), s), ++seen;
        if (s == "0,1,0,0" || s == "0,0,1,0")
            o.require(t.returns == 2 && t.coefficient == Rational(-1, 2) && t.valuation == P("a_0*lambda_1"), s), ++seen;
        if (s == "0,0,0,0") o.require(t.returns == 3 && t.coefficient.is_zero(), "HHH not annihilated"), ++seen;
    }
    o.require(seen == 4, "expected four Motzkin paths of length 3");
    for (const auto& t : free_cumulant_motzkin_terms(j, 2))
        if (t.path.to_string() == "0,0,0") o.require(t.coefficient.is_zero(), "HH not annihilated");
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto r = no_cancellation_check(n);
        o.require(r.sign_coherent, "sign clash at n=" + std::to_string(n));
        o.require(r.returns_match_level_zero_steps, "return count mismatch at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    const MomentSeq m = moments_from_jacobi(JacobiParams::symbolic_for_order(10), 10);
    for (unsigned n = 0; n <= 5; ++n) {
        MultiPoly want(1);
        for (unsigned k = 1; k <= n; ++k) want *= pow(MultiPoly(sym_lambda(k)), n + 1 - k);
        o.require(hankel_minor_det(m, HankelMinorSpec::delta(n)) == want, "Delta_" + std::to_string(n));
    }
    const auto gv = hankel_minor_gv(ValuationScheme::symbolic(ValuationScheme::Kind::MotzkinFlajolet, 8),
                                    HankelMinorSpec::delta(4));
    o.require(gv.configurations == 1, "GV found " + std::to_string(gv.configurations) + " configurations");
    return o;
}

// Criterion 5 has two parts. The equality part holds. The literal claim that the
// (0,1,2; 0,1,3) term list contains the +-c_1^2 c_2^2 c_3 pair cannot hold: every
// configuration of that minor has total cumulant weight 0+1+2+0+1+3 = 7, while the
// pair has weight 9. We report the literal clause honestly and also check the pair
// in (0,1,2; 1,2,3), the smallest minor whose weight (9) admits it.
Outcome criterion5() {
    Outcome o;
    const auto mf = ValuationScheme::symbolic(ValuationScheme::Kind::MotzkinFlajolet, 6);
    const auto lf = ValuationScheme::symbolic(ValuationScheme::Kind::LukasFree, 6);
    const MomentSeq mm = moments_from_jacobi(JacobiParams::symbolic_for_order(6), 6);
    const MomentSeq ml = moments_from_free(symbolic_cumulants(CumulantKind::Free, 6));
    std::size_t specs = 0;
    for (const auto& spec : all_minor_specs(3)) {
        ++specs;
        o.require(hankel_minor_gv(mf, spec).value == hankel_minor_det(mm, spec), "motzkin " + spec.to_string());
        o.require(hankel_minor_gv(lf, spec).value == hankel_minor_det(ml, spec), "lukas-free " + spec.to_string());
    }
    const bool equality_ok = o.pass;

    const MultiPoly target = P("c_1^2*c_2^2*c_3");
    auto pair_in = [&](const HankelMinorSpec& spec) {
        int plus = 0, minus = 0;
        for (const auto& t : hankel_minor_gv(lf, spec, true).terms)
            if (t.valuation == target) (t.sign > 0 ? plus : minus)++;
        return plus > 0 && minus > 0;
    };
    const bool literal = pair_in(HankelMinorSpec({0, 1, 2}, {0, 1, 3}));
    const bool shifted = pair_in(HankelMinorSpec({0, 1, 2}, {1, 2, 3}));

    std::ostringstream d;
    d << "gv=det on " << specs << " specs x 2 models: " << (equality_ok ? "ok" : "FAILED")
      << "; cancelling pair in (0,1,2; 1,2,3): " << (shifted ? "found" : "missing")
      << "; cancelling pair in (0,1,2; 0,1,3): " << (literal ? "found" : "absent (weight 7 minor cannot hold a weight-9 term)");
    o.pass = equality_ok && shifted && literal;
    if (equality_ok) o.detail = d.str();
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 100; ++i) {
        const MomentSeq m = catalog::random_moments(rng, 16);
        const CumulantSeq c = free_from_moments(m);
        o.require(moments_from_free(c) == m, "free round trip, sample " + std::to_string(i));
        o.require(free_from_moments_reversion(m) == c, "free routes disagree, sample " + std::to_string(i));
        o.require(moments_from_classical(classical_from_moments(m)) == m, "classical, sample " + std::to_string(i));
        o.require(moments_from_boolean(boolean_from_moments(m)) == m, "boolean, sample " + std::to_string(i));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    const MomentSeq g = catalog::gaussian_hermite(8);
    const CumulantSeq k = classical_from_moments(g);
    for (std::size_t n = 1; n <= 8; ++n) o.require(k.at(n) == MultiPoly(n == 2 ? 1 : 0), "kappa_" + std::to_string(n));
    const JacobiParams j = jacobi_from_moments(g);
    o.require(j.a == ints({0, 0, 0, 0}) && j.lambda == ints({1, 2, 3}), "gaussian jacobi parameters");
    const CumulantSeq c = free_from_moments(catalog::semicircle(10));
    for (std::size_t n = 1; n <= 10; ++n) o.require(c.at(n) == MultiPoly(n == 2 ? 1 : 0), "c_" + std::to_string(n));
    const MomentSeq pm = catalog::point_mass(MultiPoly(1), 8);
    const CumulantSeq h = boolean_from_moments(pm);
    for (std::size_t n = 1; n <= 8; ++n) o.require(h.at(n) == MultiPoly(n == 1 ? 1 : 0), "h_" + std::to_string(n));
    try {
        jacobi_from_moments(pm);
        o.require(false, "point mass did not raise SingularHankel");
    } catch (const MathError& e) {
        o.require(e.kind() == ErrorKind::SingularHankel && e.index() == 1, "wrong error for point mass");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const std::vector<std::size_t> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323};
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132};
    for (std::size_t n = 0; n < motzkin.size(); ++n)
        o.require(count_paths(n, Discipline::Motzkin) == motzkin[n], "Motzkin count n=" + std::to_string(n));
    for (std::size_t n = 0; n < catalan.size(); ++n)
        o.require(count_paths(n, Discipline::Lukasiewicz) == catalan[n], "Catalan count n=" + std::to_string(n));
    for (std::size_t n = 0; n <= 8; ++n)
        for (auto d : {Discipline::Motzkin, Discipline::Lukasiewicz})
            for_each_path(n, d, false, [&](const LatticePath& p) {
                o.require(concatenate(factorize_irreducible(p)) == p, "factorization of " + p.to_string());
            });
    return o;
}

Outcome criterion9() {
    Outcome o;
    constexpr std::size_t N = 8;
    const JacobiParams j = JacobiParams::symbolic_for_order(N);
    const auto scheme = ValuationScheme::symbolic(ValuationScheme::Kind::MotzkinFlajolet, N);
    const TruncatedSeries hcf = contfrac_series(j, j.depth(), ContFracKind::Boolean, N);
    const CumulantSeq hm = boolean_from_moments(moments_from_jacobi(j, N));
    std::vector<MultiPoly> hp;
    for (std::size_t n = 1; n <= N; ++n) {
        hp.push_back(boolean_from_paths(scheme, n));
        o.require(hp.back() == hcf[n], "path sum vs continued fraction at n=" + std::to_string(n));
        o.require(hp.back() == hm.at(n), "path sum vs 1-1/M at n=" + std::to_string(n));
    }
    const CumulantSeq h(CumulantKind::Boolean, hp);
    for (std::size_t n = 2; n <= 7; ++n)
        o.require(free_cumulant_from_boolean(h, n) == free_cumulant_motzkin(j, n),
                  "composition vs signed Motzkin sum at n=" + std::to_string(n));
    return o;
}

Outcome criterion10() {
    Outcome o;
    {
        const JacobiParams j = JacobiParams::symbolic(4);
        const MomentSeq m = moments_from_jacobi(j, 7);
        const auto rec = orthopoly_recurrence(j, 3);
        for (std::size_t n = 0; n <= 3; ++n) o.require(orthopoly_determinant(m, n) == rec[n], "symbolic P_" + std::to_string(n));
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const JacobiParams j = catalog::random_jacobi(rng, 7);
        const MomentSeq m = moments_from_jacobi(j, 12);
        const auto rec = orthopoly_recurrence(j, 6);
        for (std::size_t n = 0; n <= 6; ++n) o.require(orthopoly_determinant(m, n) == rec[n], "numeric P_" + std::to_string(n));
    }
    auto norms_ok = [&](const JacobiParams& j, std::size_t n_max, const std::string& name) {
        const MomentSeq m = moments_from_jacobi(j, 2 * n_max);
        const auto r = orthogonality_check(m, orthopoly_recurrence(j, n_max), n_max, j);
        o.require(r.ok, name + ": " + r.message);
        MultiPoly prod(1);
        for (std::size_t n = 0; n <= n_max && r.ok; ++n) {
            if (n > 0) prod *= j.lambda_at(n);
            o.require(r.norms.at(n) == prod, name + " norm s_" + std::to_string(n));
        }
        return r;
    };
    const auto herm = norms_ok(catalog::gaussian_hermite_jacobi(7), 6, "hermite");
    for (std::size_t n = 0; n <= 6 && herm.ok; ++n)
        o.require(herm.norms[n] == MultiPoly(factorial(static_cast<unsigned>(n))), "hermite s_n != n!");
    const auto semi = norms_ok(catalog::semicircle_jacobi(7), 6, "semicircle");
    for (std::size_t n = 0; n <= 6 && semi.ok; ++n) o.require(semi.norms[n] == MultiPoly(1), "semicircle s_n != 1");
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"signed Motzkin free-cumulant formula, n=2..7", criterion1},
    {"worked instances c_2, c_3 with per-path ledger", criterion2},
    {"sign coherence and return counts, n<=7", criterion3},
    {"Hankel product formula, single GV configuration", criterion4},
    {"GV equals determinant; cancelling pair in (0,1,2; 0,1,3)", criterion5},
    {"transform round trips on 100 random sequences, order 16", criterion6},
    {"catalog identities", criterion7},
    {"path counts and factorization round trip", criterion8},
    {"boolean triangle and composition route", criterion9},
    {"orthogonal polynomial routes and norms", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    int failures = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (only != 0 && only != id) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = kCriteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << kCriteria[i].first << " ["
                  << secs << "s]";
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
