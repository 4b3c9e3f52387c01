#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "momentlab/jacobi.hpp"
#include "momentlab/transforms.hpp"

namespace momentlab::catalog {

/// a = 0, lambda = 1: Catalan numbers in the even moments.
JacobiParams semicircle_jacobi(std::size_t depth);
MomentSeq semicircle(std::size_t order);

/// a = 0, lambda_n = n: double factorials in the even moments.
JacobiParams gaussian_hermite_jacobi(std::size_t depth);
MomentSeq gaussian_hermite(std::size_t order);

/// mu_n = t^n.
MomentSeq point_mass(const MultiPoly& t, std::size_t order);

/// c_n = t for every n.
CumulantSeq free_poisson_cumulants(const MultiPoly& t, std::size_t order);
MomentSeq free_poisson(const MultiPoly& t, std::size_t order);

std::vector<std::string> names();

/// mu_0 = 1, other moments p/q with |p| <= 9, 1 <= q <= 9.
MomentSeq random_moments(std::mt19937_64& rng, std::size_t order);
/// Random nonzero rationals for lambda, arbitrary for a.
JacobiParams random_jacobi(std::mt19937_64& rng, std::size_t depth);

}  // namespace momentlab::catalog
