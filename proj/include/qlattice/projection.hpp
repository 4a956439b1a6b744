#pragma once

#include <vector>

#include "qlattice/numeric.hpp"

namespace qlat {

/// A validated element of the projection lattice: Hermitian, idempotent,
/// with cached numerical rank and an orthonormal basis of its range.
/// Immutable after construction.
class Projection {
  public:
    /// Validates m and builds the projection. Throws NotHermitianError or
    /// NotIdempotentError with the offending residual.
    static Projection validate(const Matrix& m, const ToleranceConfig& tol = {});

    /// Projector onto the span of the given vectors (empty -> zero
    /// projection; dim then taken from `dim_if_empty`).
    static Projection from_span(const std::vector<Vector>& vectors,
                                const ToleranceConfig& tol = {},
                                int dim_if_empty = -1);

    /// |psi><psi| after normalization. Throws DomainError on the zero vector.
    static Projection rank1_from_ket(const Vector& psi, const ToleranceConfig& tol = {});

    static Projection zero(int dim, const ToleranceConfig& tol = {});
    static Projection identity(int dim, const ToleranceConfig& tol = {});

    const Matrix& matrix() const { return matrix_; }
    const Matrix& range_basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.cols()); }
    int dim() const { return static_cast<int>(matrix_.rows()); }

    Projection complement() const;

    /// u p u*, revalidated. Throws DomainError for non-unitary u.
    Projection conjugate(const Matrix& u) const;

  private:
    Projection(Matrix m, Matrix basis, ToleranceConfig tol)
        : matrix_(std::move(m)), basis_(std::move(basis)), tol_(tol) {}

    Matrix matrix_;
    Matrix basis_;
    ToleranceConfig tol_;
};

namespace lattice {

/// p <= q via the pq = p characterization.
bool leq(const Projection& p, const Projection& q, const ToleranceConfig& tol = {});

/// pq = 0.
bool orthogonal(const Projection& p, const Projection& q, const ToleranceConfig& tol = {});

bool commutes(const Projection& p, const Projection& q, const ToleranceConfig& tol = {});

/// Projector onto range(p) ∩ range(q), via the kernel of p' + q'.
Projection meet(const Projection& p, const Projection& q, const ToleranceConfig& tol = {});

/// Projector onto range(p) + range(q).
Projection join(const Projection& p, const Projection& q, const ToleranceConfig& tol = {});

}  // namespace lattice
}  // namespace qlat
