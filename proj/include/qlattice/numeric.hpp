#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qlattice/errors.hpp"
#include "qlattice/tolerance.hpp"

namespace qlat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace numeric {

/// Frobenius norm of (a - b). Throws ShapeError on dimension mismatch.
double residual(const Matrix& a, const Matrix& b);

/// true iff every entry of m is finite.
bool all_finite(const Matrix& m);

/// Frobenius distance from m to its adjoint.
double hermiticity_defect(const Matrix& m);

/// Columns form an orthonormal basis of range(m); column count is the
/// numerical rank (singular values above eps_rank relative to the largest).
/// The zero matrix yields a dim x 0 matrix.
Matrix orthonormal_range_basis(const Matrix& m, const ToleranceConfig& tol);

/// Eigenvalues of a Hermitian matrix, ascending. Throws DomainError when the
/// input is not Hermitian within eps_structural.
std::vector<double> hermitian_eigenvalues(const Matrix& m,
                                          const ToleranceConfig& tol = {});

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of diag(R) absorbed into Q. Deterministic per (dim, seed).
Matrix random_unitary(int dim, std::uint64_t seed);

/// ||u u* - I||_F <= eps.
bool is_unitary(const Matrix& u, double eps);

}  // namespace numeric
}  // namespace qlat
