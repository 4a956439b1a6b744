#include "qlattice/states.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qlat {

DensityState DensityState::validate(const Matrix& rho, const ToleranceConfig& tol) {
    tol.validate();
    if (rho.rows() != rho.cols()) throw ShapeError("density state: matrix not square");
    if (!numeric::all_finite(rho)) throw DomainError("density state: non-finite entries");
    const double herm = numeric::hermiticity_defect(rho);
    if (herm > tol.eps_structural) throw NotHermitianError(herm);

    Matrix sym = (rho + Matrix(rho.adjoint())) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() < -tol.eps_structural)
        throw DomainError("density state: negative eigenvalue beyond tolerance");
    const double tr = sym.trace().real();
    if (std::abs(tr - 1.0) > tol.eps_structural * static_cast<double>(rho.rows()))
        throw DomainError("density state: trace differs from 1 beyond tolerance");

    // Clip eigenvalue dust and renormalize.
    Eigen::VectorXd clipped = ev.cwiseMax(0.0);
    clipped /= clipped.sum();
    Matrix clean = es.eigenvectors() * clipped.asDiagonal() *
                   Matrix(es.eigenvectors().adjoint());
    clean = (clean + Matrix(clean.adjoint())) / 2.0;
    return DensityState(std::move(clean));
}

namespace states {

double evaluate(const DensityState& mu, const Projection& p) {
    if (mu.dim() != p.dim()) throw ShapeError("evaluate: dimension mismatch");
    const double v = (mu.rho() * p.matrix()).trace().real();
    return std::clamp(v, 0.0, 1.0);
}

DensityState condition(const DensityState& mu, const Projection& p,
                       const ToleranceConfig& tol) {
    if (mu.dim() != p.dim()) throw ShapeError("condition: dimension mismatch");
    const double weight = (mu.rho() * p.matrix()).trace().real();
    if (weight <= tol.eps_exist) throw ConditioningOnNullError();
    Matrix compressed = p.matrix() * mu.rho() * p.matrix();
    compressed /= compressed.trace().real();
    return DensityState::validate(compressed, tol);
}

DensityState random_state_supported_in(const Projection& p, std::uint64_t seed,
                                       const ToleranceConfig& tol) {
    if (p.rank() == 0) throw ZeroProjectionError();
    const int rank = p.rank();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix small = g * g.adjoint();
    small /= small.trace().real();
    Matrix rho = p.range_basis() * small * Matrix(p.range_basis().adjoint());
    return DensityState::validate(rho, tol);
}

DefiningPropertyReport defining_property_check(const Projection& p, const Projection& q,
                                               int n_samples, std::uint64_t seed,
                                               const ToleranceConfig& tol) {
    if (p.rank() == 0) throw ZeroProjectionError();
    if (n_samples < 1) throw DomainError("defining_property_check: need at least one sample");

    TransitionResult tp = transition::transition_probability(p, q, tol);
    DefiningPropertyReport report;
    report.transition_exists = tp.exists;
    report.transition_value = tp.value.value_or(tp.candidate);
    report.n_samples = n_samples;

    double lo = 2.0, hi = -1.0;
    for (int i = 0; i < n_samples; ++i) {
        DensityState mu = random_state_supported_in(p, seed + static_cast<std::uint64_t>(i), tol);
        const double v = evaluate(mu, q);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    if (tp.exists) {
        report.min_evaluation = std::min(lo, *tp.value);
        report.max_evaluation = std::max(hi, *tp.value);
        report.consistent = (report.max_evaluation - report.min_evaluation) <= 10.0 * tol.eps_exist;
    } else {
        // Extreme eigenstates of the compression realize the full spread, so
        // non-constancy is witnessed deterministically.
        Matrix compression = p.range_basis().adjoint() * q.matrix() * p.range_basis();
        compression = (compression + Matrix(compression.adjoint())) / 2.0;
        Eigen::SelfAdjointEigenSolver<Matrix> es(compression);
        Vector lo_ket = p.range_basis() * es.eigenvectors().col(0);
        Vector hi_ket = p.range_basis() * es.eigenvectors().col(es.eigenvalues().size() - 1);
        const double v_lo = transition::transition_rank1(lo_ket, q);
        const double v_hi = transition::transition_rank1(hi_ket, q);
        report.witness_gap = v_hi - v_lo;
        report.min_evaluation = std::min(lo, v_lo);
        report.max_evaluation = std::max(hi, v_hi);
        report.consistent = report.witness_gap > tol.eps_exist;
    }
    return report;
}

ExclusionCertificate deterministic_exclusion_certificate(int dim, std::uint64_t /*seed*/,
                                                         const ToleranceConfig& tol) {
    if (dim < 2)
        throw DomainError("exclusion certificate needs dim >= 2: in dim 1 all probabilities are 0 or 1");

    ExclusionCertificate cert;
    cert.dim = dim;

    for (int i = 0; i < dim; ++i) {
        Vector e = Vector::Zero(dim);
        e(i) = 1.0;
        cert.basis_projectors.push_back(Projection::rank1_from_ket(e, tol));
        // Partner at 45 degrees to the basis line: transition value exactly 1/2,
        // which maximizes the distance to {0, 1}.
        Vector partner = Vector::Zero(dim);
        partner(i) = 1.0 / std::sqrt(2.0);
        partner((i + 1) % dim) = 1.0 / std::sqrt(2.0);
        cert.partners.push_back(Projection::rank1_from_ket(partner, tol));
    }

    for (int i = 0; i < dim; ++i) {
        TransitionResult tp = transition::transition_probability(cert.basis_projectors[i],
                                                                 cert.partners[i], tol);
        cert.partner_values.push_back(tp.value.value_or(-1.0));
        std::ostringstream claim;
        claim << "transition probability from basis projector " << i << " to its partner is "
              << cert.partner_values.back()
              << "; a dispersion-free state mu with mu(p_" << i
              << ") = 1 would need mu(q_" << i << ") outside {0,1}, so mu(p_" << i << ") = 0";
        CertificateStep step;
        step.claim = claim.str();
        step.witness_value = cert.partner_values.back();
        step.verified = tp.exists && tp.value && *tp.value > 0.01 && *tp.value < 0.99;
        cert.derivation.push_back(step);
    }

    {
        Matrix sum = Matrix::Zero(dim, dim);
        for (const auto& p : cert.basis_projectors) sum += p.matrix();
        const double res = (sum - Matrix::Identity(dim, dim)).norm();
        CertificateStep step;
        step.claim = "the basis projectors are mutually orthogonal and sum to the identity; "
                     "additivity gives mu(I) = sum_i mu(p_i) = 0";
        step.witness_value = res;
        step.verified = res <= tol.eps_structural;
        for (int i = 0; i < dim && step.verified; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (!lattice::orthogonal(cert.basis_projectors[i], cert.basis_projectors[j], tol))
                    step.verified = false;
        cert.derivation.push_back(step);
    }

    cert.contradiction = "0 = sum_i mu(p_i) = mu(I) = 1";
    cert.verified = verify_certificate(cert, tol);
    return cert;
}

bool verify_certificate(const ExclusionCertificate& cert, const ToleranceConfig& tol) {
    if (cert.dim < 2) return false;
    if (cert.basis_projectors.size() != static_cast<std::size_t>(cert.dim)) return false;
    if (cert.partners.size() != cert.basis_projectors.size()) return false;

    Matrix sum = Matrix::Zero(cert.dim, cert.dim);
    for (const auto& p : cert.basis_projectors) {
        if (p.rank() != 1) return false;
        sum += p.matrix();
    }
    if ((sum - Matrix::Identity(cert.dim, cert.dim)).norm() > tol.eps_structural) return false;

    for (std::size_t i = 0; i < cert.partners.size(); ++i) {
        TransitionResult tp =
            transition::transition_probability(cert.basis_projectors[i], cert.partners[i], tol);
        if (!tp.exists || !tp.value) return false;
        if (*tp.value < 0.01 || *tp.value > 0.99) return false;
    }
    for (const auto& step : cert.derivation)
        if (!step.verified) return false;
    return true;
}

}  // namespace states
}  // namespace qlat
