#include <doctest.h>

#include <random>

#include "momentlab/catalog.hpp"
#include "momentlab/determinant.hpp"
#include "momentlab/error.hpp"
#include "momentlab/identities.hpp"
#include "momentlab/jacobi.hpp"
#include "oracles.hpp"

using namespace momentlab;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> ints(std::initializer_list<long> v) {
    std::vector<MultiPoly> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Moments by explicit powers of the truncated tridiagonal matrix: mu_n = (J^n)_{00}.
MomentSeq matrix_oracle(const JacobiParams& j, std::size_t order) {
    const std::size_t d = j.depth();
    std::vector<std::vector<MultiPoly>> J(d, std::vector<MultiPoly>(d));
    for (std::size_t i = 0; i < d; ++i) {
        J[i][i] = j.a_at(i);
        if (i + 1 < d) {
            J[i][i + 1] = MultiPoly(1);
            J[i + 1][i] = j.lambda_at(i + 1);
        }
    }
    std::vector<MultiPoly> row(d);
    row[0] = MultiPoly(1);
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        std::vector<MultiPoly> next(d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r) next[c] += row[r] * J[r][c];
        row = next;
        mu.push_back(row[0]);
    }
    return MomentSeq(mu);
}
}  // namespace

TEST_CASE("moment routes agree") {
    for (std::size_t order = 1; order <= 9; ++order) {
        const JacobiParams j = JacobiParams::symbolic_for_order(order);
        const MomentSeq a = moments_from_jacobi(j, order);
        CHECK(a == moments_from_jacobi_paths(j, order));
        CHECK(a == matrix_oracle(JacobiParams::symbolic(order + 1), order));
    }
    const JacobiParams j = JacobiParams::symbolic(3);
    CHECK(moments_from_jacobi(j, 3)[3] == P("a_0^3 + 2*a_0*lambda_1 + a_1*lambda_1"));
}

TEST_CASE("catalog moments") {
    CHECK(moments_from_jacobi(catalog::gaussian_hermite_jacobi(4), 6).values() == ints({1, 0, 1, 0, 3, 0, 15}));
    CHECK(moments_from_jacobi(catalog::semicircle_jacobi(5), 8).values() == ints({1, 0, 1, 0, 2, 0, 5, 0, 14}));
}

TEST_CASE("prefix precheck") {
    const JacobiParams j = JacobiParams::symbolic(1);
    CHECK_THROWS_AS(moments_from_jacobi(j, 3), MathError);
    CHECK_NOTHROW(moments_from_jacobi(j, 1));
}

TEST_CASE("Hankel determinants") {
    const MomentSeq m = moments_from_jacobi(JacobiParams::symbolic_for_order(8), 8);
    CHECK(hankel_delta(m, -1) == MultiPoly(1));
    CHECK(hankel_delta_tilde(m, -1).is_zero());
    CHECK(hankel_delta(m, 0) == MultiPoly(1));
    CHECK(hankel_delta(m, 1) == P("lambda_1"));
    CHECK(hankel_delta(m, 2) == P("lambda_1^2*lambda_2"));
    CHECK(hankel_delta(m, 3) == P("lambda_1^3*lambda_2^2*lambda_3"));
    CHECK(hankel_delta_tilde(m, 0) == P("a_0"));
    const PolyMatrix h{{m[0], m[1]}, {m[1], m[2]}};
    CHECK(hankel_delta(m, 1) == oracle::leibniz_det(h));
}

TEST_CASE("Jacobi parameters from moments") {
    const JacobiParams g = jacobi_from_moments(MomentSeq(ints({1, 0, 1, 0, 3, 0, 15, 0, 105})));
    CHECK(g.a == ints({0, 0, 0, 0}));
    CHECK(g.lambda == ints({1, 2, 3}));
    const JacobiParams s = jacobi_from_moments(catalog::semicircle(8));
    CHECK(s.a == ints({0, 0, 0, 0}));
    CHECK(s.lambda == ints({1, 1, 1}));
    const JacobiParams sym = JacobiParams::symbolic(3);
    const JacobiParams back = jacobi_from_moments(moments_from_jacobi(sym, 5));
    CHECK(back.a == sym.a);
    CHECK(back.lambda == sym.lambda);
    try {
        jacobi_from_moments(catalog::point_mass(P("3"), 6));
        FAIL("expected SingularHankel");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::SingularHankel);
        CHECK(e.index() == 1);
    }
}

TEST_CASE("random numeric round trip") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const JacobiParams j = catalog::random_jacobi(rng, 4);
        const JacobiParams back = jacobi_from_moments(moments_from_jacobi(j, 7));
        CHECK(back.a == j.a);
        CHECK(back.lambda == std::vector<MultiPoly>(j.lambda.begin(), j.lambda.begin() + 3));
    }
}

TEST_CASE("orthogonal polynomials") {
    const auto herm = orthopoly_recurrence(catalog::gaussian_hermite_jacobi(4), 3);
    CHECK(herm[2] == P("x^2 - 1"));
    CHECK(herm[3] == P("x^3 - 3*x"));
    const auto cheb = orthopoly_recurrence(catalog::semicircle_jacobi(4), 3);
    CHECK(cheb[2] == P("x^2 - 1"));
    CHECK(cheb[3] == P("x^3 - 2*x"));

    const MomentSeq sm = symbolic_moments(4);
    CHECK(orthopoly_determinant(sm, 0) == MultiPoly(1));
    CHECK(orthopoly_determinant(sm, 1) == P("x - mu_1"));
    CHECK(orthopoly_determinant(catalog::gaussian_hermite(6), 3) == P("x^3 - 3*x"));

    const JacobiParams j = JacobiParams::symbolic(4);
    const MomentSeq m = moments_from_jacobi(j, 7);
    const auto rec = orthopoly_recurrence(j, 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(orthopoly_determinant(m, n) == rec[n]);
}

TEST_CASE("orthogonality") {
    const auto herm = orthopoly_recurrence(catalog::gaussian_hermite_jacobi(5), 3);
    const auto r = orthogonality_check(catalog::gaussian_hermite(6), herm, 3, catalog::gaussian_hermite_jacobi(5));
    CHECK(r.ok);
    CHECK(r.norms == ints({1, 1, 2, 6}));
    const auto semi = orthopoly_recurrence(catalog::semicircle_jacobi(5), 4);
    const auto rs = orthogonality_check(catalog::semicircle(8), semi, 4);
    CHECK(rs.ok);
    CHECK(rs.norms == ints({1, 1, 1, 1, 1}));
    // wrong polynomials must be caught
    auto bad = herm;
    bad[2] = P("x^2");
    CHECK_FALSE(orthogonality_check(catalog::gaussian_hermite(6), bad, 3).ok);
}

TEST_CASE("continued fractions") {
    const auto semi = contfrac_series(catalog::semicircle_jacobi(4), 4, ContFracKind::Moment, 7);
    CHECK(semi.coeffs() == ints({1, 0, 1, 0, 2, 0, 5, 0}));
    // depth 4 only fixes coefficients through order 7
    CHECK_THROWS_AS(contfrac_series(catalog::semicircle_jacobi(4), 4, ContFracKind::Moment, 8), MathError);
    CHECK(contfrac_expand_finite(catalog::semicircle_jacobi(4), 4, ContFracKind::Moment, 8)[8] == MultiPoly(13));

    const JacobiParams one = JacobiParams::symbolic(1);
    const auto geo = contfrac_expand_finite(one, 1, ContFracKind::Moment, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(geo[n] == pow(P("a_0"), static_cast<unsigned>(n)));

    const auto h = contfrac_series(JacobiParams::symbolic(2), 2, ContFracKind::Boolean, 3);
    CHECK(h[0].is_zero());
    CHECK(h[1] == P("a_0"));
    CHECK(h[2] == P("lambda_1"));
    CHECK(h[3] == P("a_1*lambda_1"));

    const JacobiParams j = JacobiParams::symbolic(5);
    CHECK(contfrac_series(j, 5, ContFracKind::Moment, 9) == moments_from_jacobi(j, 9).ogf());
}
