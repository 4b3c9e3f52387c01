#include <doctest.h>

#include <algorithm>

#include "momentlab/catalog.hpp"
#include "momentlab/error.hpp"
#include "momentlab/identities.hpp"
#include "momentlab/jacobi.hpp"
#include "momentlab/transforms.hpp"
#include "oracles.hpp"

using namespace momentlab;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }

// Hand-rolled formula: sum over brute-force Motzkin words with the signed binomial weight.
MultiPoly eq13_oracle(std::size_t n) {
    MultiPoly total;
    for (const auto& lv : oracle::brute_paths(static_cast<int>(n), true)) {
        long r = 0;
        MultiPoly v(1);
        for (std::size_t i = 1; i < lv.size(); ++i) {
            if (lv[i] == 0) ++r;
            const int from = lv[i - 1], to = lv[i];
            if (to == from) v *= MultiPoly(sym_a(static_cast<unsigned>(from)));
            else if (to < from) v *= MultiPoly(sym_lambda(static_cast<unsigned>(from)));
        }
        Rational coef = binomial(static_cast<long>(n) - 1, r) / Rational(static_cast<long>(n) - 1);
        if (r % 2 == 0) coef = -coef;
        total += v * coef;
    }
    return total;
}
}  // namespace

TEST_CASE("signed Motzkin formula matches Lagrange inversion") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const JacobiParams j = JacobiParams::symbolic_for_order(n);
        const MultiPoly lhs = free_cumulant_motzkin(j, n);
        CHECK(lhs == free_from_moments(moments_from_jacobi(j, n)).at(n));
        CHECK(lhs == eq13_oracle(n));
    }
    CHECK_THROWS_AS(free_cumulant_motzkin(JacobiParams::symbolic(2), 1), MathError);
}

TEST_CASE("worked instances") {
    const JacobiParams j = JacobiParams::symbolic(3);
    CHECK(free_cumulant_motzkin(j, 2) == P("lambda_1"));
    CHECK(free_cumulant_motzkin(j, 3) == P("lambda_1*(a_1 - a_0)"));
    const auto terms = free_cumulant_motzkin_terms(j, 3);
    REQUIRE(terms.size() == 4);
    for (const auto& t : terms) {
        const std::string s = t.path.to_string();
        if (s == "0,0,0,0") CHECK(t.coefficient.is_zero());
        if (s == "0,1,1,0") CHECK(t.coefficient == Rational(1));
        if (s == "0,0,1,0" || s == "0,1,0,0") CHECK(t.coefficient == Rational(-1, 2));
    }
    CHECK(free_cumulant_motzkin(catalog::semicircle_jacobi(3), 4).is_zero());
}

TEST_CASE("no cancellation") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto r = no_cancellation_check(n);
        CHECK(r.ok());
        CHECK(r.violations.empty());
    }
    CHECK(no_cancellation_check(3).monomials == 2);
    CHECK(no_cancellation_check(5).paths == 21);
}

TEST_CASE("boolean cumulants from irreducible paths") {
    using K = ValuationScheme::Kind;
    CHECK(boolean_from_paths(ValuationScheme::symbolic(K::MotzkinFlajolet, 4), 3) == P("a_1*lambda_1"));
    CHECK(boolean_from_paths(ValuationScheme::symbolic(K::LukasFree, 4), 2) == P("c_2"));
    CHECK(boolean_from_paths(ValuationScheme::symbolic(K::LukasFree, 4), 1) == P("c_1"));
    CHECK(boolean_from_paths(ValuationScheme::symbolic(K::LukasClassical, 4), 1) == P("kappa_1"));
    const auto mf = ValuationScheme::symbolic(K::MotzkinFlajolet, 8);
    const JacobiParams j = JacobiParams::symbolic_for_order(8);
    const CumulantSeq h = boolean_from_moments(moments_from_jacobi(j, 8));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(boolean_from_paths(mf, n) == h.at(n));
    const auto lf = ValuationScheme::symbolic(K::LukasFree, 6);
    const CumulantSeq hf = boolean_from_moments(moments_from_free(symbolic_cumulants(CumulantKind::Free, 6)));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(boolean_from_paths(lf, n) == hf.at(n));
}

TEST_CASE("minor specs") {
    CHECK_THROWS(HankelMinorSpec({0, 1}, {0}));
    CHECK_THROWS(HankelMinorSpec({1, 0}, {0, 1}));
    CHECK(HankelMinorSpec::delta_tilde(2).cols() == std::vector<std::size_t>{0, 1, 3});
    CHECK(HankelMinorSpec({0, 1, 2}, {0, 1, 3}).to_string() == "(0,1,2; 0,1,3)");
    // 2^4 - 1 nonempty subsets per side, paired by size: sum C(4,k)^2 = 69
    CHECK(all_minor_specs(3).size() == 69);
}

TEST_CASE("determinant minors") {
    const MomentSeq m = moments_from_jacobi(JacobiParams::symbolic_for_order(8), 8);
    CHECK(hankel_minor_det(m, HankelMinorSpec({0}, {0})) == MultiPoly(1));
    // product formula at n = 2
    CHECK(hankel_minor_det(m, HankelMinorSpec::delta(2)) == P("lambda_1^2*lambda_2"));
    CHECK(hankel_minor_det(m, HankelMinorSpec::delta(2)) == oracle::leibniz_det({{m[0], m[1], m[2]}, {m[1], m[2], m[3]}, {m[2], m[3], m[4]}}));
    CHECK(hankel_minor_det(m, HankelMinorSpec::delta_tilde(2)) == hankel_delta_tilde(m, 2));
    CHECK_THROWS_AS(hankel_minor_det(m.truncated(3), HankelMinorSpec::delta(2)), MathError);
}

TEST_CASE("Gessel-Viennot agrees with determinants") {
    using K = ValuationScheme::Kind;
    const auto mf = ValuationScheme::symbolic(K::MotzkinFlajolet, 8);
    const MomentSeq mm = moments_from_jacobi(JacobiParams::symbolic_for_order(6), 6);
    const auto lf = ValuationScheme::symbolic(K::LukasFree, 6);
    const MomentSeq ml = moments_from_free(symbolic_cumulants(CumulantKind::Free, 6));
    for (const auto& spec : all_minor_specs(3)) {
        CHECK(hankel_minor_gv(mf, spec).value == hankel_minor_det(mm, spec));
        CHECK(hankel_minor_gv(lf, spec).value == hankel_minor_det(ml, spec));
    }
    const auto one = hankel_minor_gv(mf, HankelMinorSpec({1}, {1}));
    CHECK(one.value == P("a_0^2 + lambda_1"));
    CHECK(one.configurations == 2);
}

TEST_CASE("single configuration for Delta_4") {
    const auto mf = ValuationScheme::symbolic(ValuationScheme::Kind::MotzkinFlajolet, 8);
    const auto r = hankel_minor_gv(mf, HankelMinorSpec::delta(4), true);
    CHECK(r.configurations == 1);
    CHECK(r.value == P("lambda_1^4*lambda_2^3*lambda_3^2*lambda_4"));
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].sign == 1);
}

TEST_CASE("cancelling pair in the Lukasiewicz model") {
    const auto lf = ValuationScheme::symbolic(ValuationScheme::Kind::LukasFree, 6);
    const MultiPoly target = P("c_1^2*c_2^2*c_3");
    // The weight-9 pair cannot live in (0,1,2; 0,1,3), whose entries have total weight 7.
    const auto small = hankel_minor_gv(lf, HankelMinorSpec({0, 1, 2}, {0, 1, 3}), true);
    CHECK(small.configurations == 19);
    for (const auto& t : small.terms) CHECK(t.valuation != target);
    const auto r = hankel_minor_gv(lf, HankelMinorSpec({0, 1, 2}, {1, 2, 3}), true);
    int plus = 0, minus = 0;
    for (const auto& t : r.terms)
        if (t.valuation == target) (t.sign > 0 ? plus : minus)++;
    CHECK(plus >= 1);
    CHECK(minus >= 1);
    CHECK(r.value.coefficient(target.terms().begin()->first) == Rational(plus - minus));
}

TEST_CASE("explosion guard") {
    const auto mf = ValuationScheme::symbolic(ValuationScheme::Kind::MotzkinFlajolet, 8);
    try {
        hankel_minor_gv(mf, HankelMinorSpec::delta(3), false, 5);
        FAIL("expected ExplosionGuard");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::ExplosionGuard);
    }
}

TEST_CASE("verify suite") {
    const auto full = verify_suite(5);
    CHECK(full.all_passed());
    CHECK(full.entries.size() >= 10);
    CHECK(verify_suite(2).all_passed());
    for (const auto& name : identity_names()) {
        VerifyOptions opt;
        opt.perturb = name;
        const auto r = verify_suite(3, opt);
        std::size_t failing = 0;
        for (const auto& e : r.entries)
            if (!e.passed) {
                ++failing;
                CHECK(e.identity == name);
            }
        CHECK(failing == 1);
    }
    VerifyOptions bad;
    bad.only = "nope";
    CHECK_THROWS(verify_suite(3, bad));
}
