#include "qlattice/projection.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qlat {

using numeric::orthonormal_range_basis;
using numeric::residual;

Projection Projection::validate(const Matrix& m, const ToleranceConfig& tol) {
    tol.validate();
    if (m.rows() != m.cols()) throw ShapeError("validate_projection: matrix not square");
    if (!numeric::all_finite(m)) throw DomainError("validate_projection: non-finite entries");

    const double herm = numeric::hermiticity_defect(m);
    if (herm > tol.eps_structural) throw NotHermitianError(herm);
    const double idem = (m * m - m).norm();
    if (idem > tol.eps_structural) throw NotIdempotentError(idem);

    Matrix basis = orthonormal_range_basis(m, tol);
    const double tr = m.trace().real();
    const int rank = static_cast<int>(basis.cols());
    if (std::abs(tr - rank) > tol.eps_structural * static_cast<double>(m.rows()))
        throw DomainError("validate_projection: trace does not match numerical rank");
    return Projection(m, std::move(basis), tol);
}

Projection Projection::from_span(const std::vector<Vector>& vectors,
                                 const ToleranceConfig& tol, int dim_if_empty) {
    if (vectors.empty()) {
        if (dim_if_empty < 1)
            throw ShapeError("from_span: empty span needs an explicit dimension");
        return zero(dim_if_empty, tol);
    }
    const Eigen::Index dim = vectors.front().size();
    Matrix cols(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != dim) throw ShapeError("from_span: inconsistent vector dimensions");
        cols.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    // Orthonormalize via the range of cols * cols^*.
    Matrix gram = cols * cols.adjoint();
    Matrix basis = orthonormal_range_basis(gram, tol);
    Matrix proj = basis * basis.adjoint();
    proj = (proj + Matrix(proj.adjoint())) / 2.0;
    return Projection(std::move(proj), std::move(basis), tol);
}

Projection Projection::rank1_from_ket(const Vector& psi, const ToleranceConfig& tol) {
    const double n = psi.norm();
    if (!(n > 0.0) || !psi.allFinite())
        throw DomainError("rank1_from_ket: vector must be nonzero and finite");
    Vector unit = psi / n;
    Matrix proj = unit * unit.adjoint();
    proj = (proj + Matrix(proj.adjoint())) / 2.0;
    Matrix basis(psi.size(), 1);
    basis.col(0) = unit;
    return Projection(std::move(proj), std::move(basis), tol);
}

Projection Projection::zero(int dim, const ToleranceConfig& tol) {
    if (dim < 1) throw DomainError("zero projection needs dim >= 1");
    return Projection(Matrix::Zero(dim, dim), Matrix(dim, 0), tol);
}

Projection Projection::identity(int dim, const ToleranceConfig& tol) {
    if (dim < 1) throw DomainError("identity projection needs dim >= 1");
    return Projection(Matrix::Identity(dim, dim), Matrix::Identity(dim, dim), tol);
}

Projection Projection::complement() const {
    Matrix c = Matrix::Identity(dim(), dim()) - matrix_;
    Matrix basis = orthonormal_range_basis(c, tol_);
    return Projection(std::move(c), std::move(basis), tol_);
}

Projection Projection::conjugate(const Matrix& u) const {
    if (u.rows() != dim() || u.cols() != dim())
        throw ShapeError("conjugate: unitary dimension mismatch");
    if (!numeric::is_unitary(u, tol_.eps_structural))
        throw DomainError("conjugate: matrix is not unitary within tolerance");
    Matrix m = u * matrix_ * u.adjoint();
    m = (m + Matrix(m.adjoint())) / 2.0;
    return validate(m, tol_);
}

namespace lattice {

namespace {
void check_same_dim(const Projection& p, const Projection& q) {
    if (p.dim() != q.dim()) throw ShapeError("projection dimension mismatch");
}
}  // namespace

bool leq(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
    check_same_dim(p, q);
    return residual(p.matrix() * q.matrix(), p.matrix()) <= tol.eps_exist;
}

bool orthogonal(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
    check_same_dim(p, q);
    return (p.matrix() * q.matrix()).norm() <= tol.eps_exist;
}

bool commutes(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
    check_same_dim(p, q);
    return (p.matrix() * q.matrix() - q.matrix() * p.matrix()).norm() <= tol.eps_exist;
}

Projection meet(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
    check_same_dim(p, q);
    // range(p) ∩ range(q) = ker(p') ∩ ker(q') = ker(p' + q') for positive operators.
    Matrix sum = p.complement().matrix() + q.complement().matrix();
    sum = (sum + Matrix(sum.adjoint())) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sum);
    std::vector<Vector> kernel;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) <= tol.eps_rank) kernel.push_back(es.eigenvectors().col(i));
    return Projection::from_span(kernel, tol, p.dim());
}

Projection join(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
    check_same_dim(p, q);
    std::vector<Vector> span;
    for (Eigen::Index j = 0; j < p.range_basis().cols(); ++j) span.push_back(p.range_basis().col(j));
    for (Eigen::Index j = 0; j < q.range_basis().cols(); ++j) span.push_back(q.range_basis().col(j));
    return Projection::from_span(span, tol, p.dim());
}

}  // namespace lattice
}  // namespace qlat
