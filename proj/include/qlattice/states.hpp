#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlattice/transition.hpp"

namespace qlat {

/// A linear state represented by a density matrix: Hermitian, positive
/// semidefinite, trace one. Construction absorbs rounding by projecting to
/// the PSD cone and renormalizing.
class DensityState {
  public:
    static DensityState validate(const Matrix& rho, const ToleranceConfig& tol = {});

    const Matrix& rho() const { return rho_; }
    int dim() const { return static_cast<int>(rho_.rows()); }

  private:
    explicit DensityState(Matrix rho) : rho_(std::move(rho)) {}
    Matrix rho_;
};

/// One verifiable step in the exclusion derivation.
struct CertificateStep {
    std::string claim;
    bool verified = false;
    double witness_value = 0.0;
};

/// Finite certificate that no dispersion-free linear state exists: basis
/// projectors summing to the identity, each with a partner whose transition
/// probability is strictly between 0 and 1, and the derivation chain ending
/// in 0 = 1.
struct ExclusionCertificate {
    int dim = 0;
    std::vector<Projection> basis_projectors;
    std::vector<Projection> partners;
    std::vector<double> partner_values;
    std::vector<CertificateStep> derivation;
    std::string contradiction;
    bool verified = false;
};

/// Outcome of sampling states supported in range(p) against the defining
/// property of the transition probability.
struct DefiningPropertyReport {
    bool transition_exists = false;
    double transition_value = 0.0;
    int n_samples = 0;
    double min_evaluation = 0.0;
    double max_evaluation = 0.0;
    bool consistent = false;  // constant when it must be, non-constant when it must not
    double witness_gap = 0.0; // for the non-existing case: spread of the extreme states
};

namespace states {

/// tr(rho p), clamped to [0, 1].
double evaluate(const DensityState& mu, const Projection& p);

/// The conditioned state x -> mu(pxp)/mu(p): p rho p renormalized.
/// Throws ConditioningOnNullError when mu(p) is numerically zero.
DensityState condition(const DensityState& mu, const Projection& p,
                       const ToleranceConfig& tol = {});

/// Deterministic per seed; the result assigns probability 1 to p.
DensityState random_state_supported_in(const Projection& p, std::uint64_t seed,
                                       const ToleranceConfig& tol = {});

/// Samples n states supported in range(p). When the transition exists every
/// sample must evaluate q to the same value; when it does not, the extreme
/// eigenstates of the compression witness a definite gap.
DefiningPropertyReport defining_property_check(const Projection& p, const Projection& q,
                                               int n_samples, std::uint64_t seed,
                                               const ToleranceConfig& tol = {});

/// Emits the dispersion-free-state exclusion argument as a machine-checked
/// certificate. Every claim is re-verified before emission.
ExclusionCertificate deterministic_exclusion_certificate(int dim, std::uint64_t seed,
                                                         const ToleranceConfig& tol = {});

/// Re-runs every check in an already-built certificate.
bool verify_certificate(const ExclusionCertificate& cert, const ToleranceConfig& tol = {});

}  // namespace states
}  // namespace qlat
