#pragma once

// Dense exact linear algebra over the scalar field K.

#include <intdiff/expalg.hpp>

#include <optional>
#include <vector>

namespace intdiff {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n);
// Fraction-free Bareiss elimination (square input).
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {c : c^T m = 0}; m has rows() rows.
std::vector<std::vector<Scalar>> left_nullspace(const Matrix& m, std::size_t rows);
Matrix multiply(const Matrix& a, const Matrix& b);
// Indices of a maximal set of linearly independent rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& m);

}  // namespace intdiff
