#pragma once

#include <vector>

#include "momentlab/multipoly.hpp"

namespace momentlab {

/// Row-major square matrix of polynomials.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant. The 0x0 determinant is 1.
///
/// Rational matrices and polynomial matrices larger than 5x5 go through
/// fraction-free (Bareiss) elimination with exact division by the previous
/// pivot. Polynomial matrices up to 5x5 use Laplace expansion memoized on
/// column subsets, which keeps intermediate polynomials small.
MultiPoly det_exact(const PolyMatrix& m);

MultiPoly det_bareiss(const PolyMatrix& m);
MultiPoly det_laplace(const PolyMatrix& m);

}  // namespace momentlab
