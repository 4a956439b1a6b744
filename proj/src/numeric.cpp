#include "qlattice/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace qlat::numeric {

double residual(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("residual: dimension mismatch");
    return (a - b).norm();
}

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

double hermiticity_defect(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("hermiticity_defect: matrix not square");
    return (m - m.adjoint()).norm();
}

Matrix orthonormal_range_basis(const Matrix& m, const ToleranceConfig& tol) {
    if (m.rows() != m.cols()) throw ShapeError("orthonormal_range_basis: matrix not square");
    if (!all_finite(m)) throw DomainError("orthonormal_range_basis: non-finite entries");
    tol.validate();

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return Matrix(m.rows(), 0);
    const double cutoff = tol.eps_rank * sv(0);
    Eigen::Index k = 0;
    while (k < sv.size() && sv(k) > cutoff) ++k;
    return svd.matrixU().leftCols(k);
}

std::vector<double> hermitian_eigenvalues(const Matrix& m, const ToleranceConfig& tol) {
    if (m.rows() != m.cols()) throw ShapeError("hermitian_eigenvalues: matrix not square");
    if (hermiticity_defect(m) > tol.eps_structural)
        throw DomainError("hermitian_eigenvalues: input not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Matrix random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw DomainError("random_unitary: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));

    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR so the result is Haar distributed.
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

bool is_unitary(const Matrix& u, double eps) {
    if (u.rows() != u.cols()) return false;
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return (u * u.adjoint() - id).norm() <= eps;
}

}  // namespace qlat::numeric
