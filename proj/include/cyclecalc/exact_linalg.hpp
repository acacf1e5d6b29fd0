#pragma once

// Dense Gaussian elimination over the rationals. Sizes here never exceed a
// few dozen, so no pivoting strategy beyond "first nonzero" is needed.

#include <string>
#include <vector>

#include "cyclecalc/rational.hpp"

namespace cyclecalc {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);

/// Reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);

/// Solves a x = b for square nonsingular a; throws SingularSystem otherwise.
Vector solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& a);

std::string to_string(const Matrix& m);
std::string to_string(const Vector& v);

}  // namespace cyclecalc
