#include "momentlab/determinant.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace momentlab {

namespace {

void require_square(const PolyMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
    }
}

bool all_constant(const PolyMatrix& m) {
    for (const auto& row : m) {
        for (const auto& e : row) {
            if (!e.is_constant()) return false;
        }
    }
    return true;
}

}  // namespace

MultiPoly det_bareiss(const PolyMatrix& input) {
    require_square(input);
    const std::size_t n = input.size();
    if (n == 0) return MultiPoly(1);
    PolyMatrix a = input;
    MultiPoly previous(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return MultiPoly();
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = divide_exact(num, previous);
                if (!q) throw std::logic_error("Bareiss step is not exactly divisible");
                a[i][j] = std::move(*q);
            }
            a[i][k] = MultiPoly();
        }
        previous = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly det_laplace(const PolyMatrix& m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    if (n > 20) throw std::invalid_argument("det_laplace: matrix too large");
    // minors[mask] = determinant of rows n-popcount(mask)..n-1 restricted to the columns in mask.
    std::vector<MultiPoly> minors(std::size_t{1} << n);
    minors[0] = MultiPoly(1);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        MultiPoly acc;
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1U << col))) continue;
            const MultiPoly& rest = minors[mask & ~(1U << col)];
            if (!m[row][col].is_zero() && !rest.is_zero()) {
                MultiPoly t = m[row][col] * rest;
                if (sign > 0) acc += t; else acc -= t;
            }
            sign = -sign;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

MultiPoly det_exact(const PolyMatrix& m) {
    require_square(m);
    if (m.size() <= 5 && !all_constant(m)) return det_laplace(m);
    return det_bareiss(m);
}

}  // namespace momentlab
