#include "qlattice/examples.hpp"

#include <cmath>
#include <random>

namespace qlat {

void TwoPlaneParams::validate(const ToleranceConfig& tol) const {
    const double norm2 = s1 * s1 + s2 * s2 + s3 * s3;
    if (std::abs(norm2 - 1.0) > tol.eps_structural)
        throw DomainError("two-plane parameters must lie on the unit sphere");
}

namespace examples {

ProjectionPair two_plane_pair(const TwoPlaneParams& params, const ToleranceConfig& tol) {
    params.validate(tol);
    const double s1 = params.s1, s2 = params.s2, s3 = params.s3;
    const double c = s1 * s1 + s2 * s2;

    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = 1.0;
    p(1, 1) = 1.0;

    Matrix q(4, 4);
    q << c, 0, s1 * s3, -s2 * s3,
         0, c, s2 * s3, s1 * s3,
         s1 * s3, s2 * s3, s3 * s3, 0,
         -s2 * s3, s1 * s3, 0, s3 * s3;

    return {Projection::validate(p, tol), Projection::validate(q, tol)};
}

ProjectionPair rank1_pair(const Vector& psi, const Vector& phi, const ToleranceConfig& tol) {
    if (psi.size() != phi.size()) throw ShapeError("rank1_pair: dimension mismatch");
    return {Projection::rank1_from_ket(psi, tol), Projection::rank1_from_ket(phi, tol)};
}

ProjectionPair commuting_no_transition_pair(const std::vector<int>& mask_p,
                                            const std::vector<int>& mask_q,
                                            const ToleranceConfig& tol) {
    if (mask_p.size() != mask_q.size() || mask_p.empty())
        throw ShapeError("commuting pair: masks must be nonempty and of equal length");
    const int dim = static_cast<int>(mask_p.size());

    bool overlap = false;      // p q != 0
    bool p_outside_q = false;  // p not below q
    for (int i = 0; i < dim; ++i) {
        if (mask_p[i] && mask_q[i]) overlap = true;
        if (mask_p[i] && !mask_q[i]) p_outside_q = true;
    }
    if (!overlap)
        throw DomainError("commuting pair: masks are orthogonal, transition would be 0");
    if (!p_outside_q)
        throw DomainError("commuting pair: p is below q, transition would be 1");

    Matrix p = Matrix::Zero(dim, dim);
    Matrix q = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (mask_p[i]) p(i, i) = 1.0;
        if (mask_q[i]) q(i, i) = 1.0;
    }
    return {Projection::validate(p, tol), Projection::validate(q, tol)};
}

ProjectionPair asymmetric_pair(int dim, std::uint64_t seed, const ToleranceConfig& tol) {
    if (dim < 3) throw DomainError("asymmetric_pair: need dim >= 3");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int attempt = 0; attempt < 100; ++attempt) {
        Vector psi(dim);
        for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        Projection p = Projection::rank1_from_ket(psi, tol);

        Matrix u = numeric::random_unitary(dim, rng());
        std::vector<Vector> span;
        for (int j = 0; j < 2; ++j) span.push_back(u.col(j));
        Projection q = Projection::from_span(span, tol);

        if ((p.matrix() * q.matrix()).norm() <= 100.0 * tol.eps_exist) continue;
        TransitionResult backward = transition::transition_probability(q, p, tol);
        if (backward.spread <= 100.0 * tol.eps_exist) continue;  // accidentally equiangular
        return {p, q};
    }
    throw DomainError("asymmetric_pair: no suitable pair after 100 attempts");
}

ProjectionPair equiangular_pair(int dim, int rank, double theta, std::uint64_t seed,
                                const ToleranceConfig& tol) {
    if (rank < 1) throw DomainError("equiangular_pair: rank must be >= 1");
    if (dim < 2 * rank)
        throw DomainError("equiangular_pair: need dim >= 2 * rank to tilt every direction");
    Matrix u = numeric::random_unitary(dim, seed);
    std::vector<Vector> span_p, span_q;
    for (int j = 0; j < rank; ++j) {
        span_p.push_back(u.col(j));
        span_q.push_back(std::cos(theta) * u.col(j) + std::sin(theta) * u.col(rank + j));
    }
    return {Projection::from_span(span_p, tol), Projection::from_span(span_q, tol)};
}

Projection random_projection(int dim, int rank, std::uint64_t seed,
                             const ToleranceConfig& tol) {
    if (rank < 0 || rank > dim) throw DomainError("random_projection: rank out of range");
    if (rank == 0) return Projection::zero(dim, tol);
    Matrix u = numeric::random_unitary(dim, seed);
    std::vector<Vector> span;
    for (int j = 0; j < rank; ++j) span.push_back(u.col(j));
    return Projection::from_span(span, tol);
}

std::vector<ProjectionPair> conjugated_family(const Projection& p, const Projection& q,
                                              std::uint64_t seed, int n) {
    if (n < 0) throw DomainError("conjugated_family: n must be non-negative");
    std::vector<ProjectionPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Matrix u = numeric::random_unitary(p.dim(), seed + static_cast<std::uint64_t>(i));
        pairs.emplace_back(p.conjugate(u), q.conjugate(u));
    }
    return pairs;
}

}  // namespace examples
}  // namespace qlat
