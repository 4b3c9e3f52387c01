#include "momentlab/catalog.hpp"

namespace momentlab::catalog {

JacobiParams semicircle_jacobi(std::size_t depth) {
    JacobiParams j;
    j.a.assign(depth, MultiPoly());
    if (depth > 1) j.lambda.assign(depth - 1, MultiPoly(1));
    return j;
}

MomentSeq semicircle(std::size_t order) {
    return moments_from_jacobi(semicircle_jacobi(order / 2 + 1), order);
}

JacobiParams gaussian_hermite_jacobi(std::size_t depth) {
    JacobiParams j;
    j.a.assign(depth, MultiPoly());
    for (std::size_t n = 1; n < depth; ++n) j.lambda.emplace_back(Rational(static_cast<long>(n)));
    return j;
}

MomentSeq gaussian_hermite(std::size_t order) {
    return moments_from_jacobi(gaussian_hermite_jacobi(order / 2 + 1), order);
}

MomentSeq point_mass(const MultiPoly& t, std::size_t order) {
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) mu.push_back(mu.back() * t);
    return MomentSeq(std::move(mu));
}

CumulantSeq free_poisson_cumulants(const MultiPoly& t, std::size_t order) {
    return {CumulantKind::Free, std::vector<MultiPoly>(order, t)};
}

MomentSeq free_poisson(const MultiPoly& t, std::size_t order) {
    return moments_from_free(free_poisson_cumulants(t, order));
}

std::vector<std::string> names() { return {"semicircle", "gaussian-hermite", "point-mass", "free-poisson"}; }

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    long p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p, den(rng));
}

}  // namespace

MomentSeq random_moments(std::mt19937_64& rng, std::size_t order) {
    std::vector<MultiPoly> mu{MultiPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) mu.emplace_back(random_rational(rng, false));
    return MomentSeq(std::move(mu));
}

JacobiParams random_jacobi(std::mt19937_64& rng, std::size_t depth) {
    JacobiParams j;
    for (std::size_t n = 0; n < depth; ++n) j.a.emplace_back(random_rational(rng, false));
    for (std::size_t n = 1; n < depth; ++n) j.lambda.emplace_back(random_rational(rng, true));
    return j;
}

}  // namespace momentlab::catalog
