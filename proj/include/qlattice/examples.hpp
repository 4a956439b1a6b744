#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qlattice/transition.hpp"

namespace qlat {

/// Parameters of the two-plane pair in dimension 4: a point on the unit
/// sphere controlling the common angle between the ranges.
struct TwoPlaneParams {
    double s1 = 1.0;
    double s2 = 0.0;
    double s3 = 0.0;

    void validate(const ToleranceConfig& tol = {}) const;

    /// The transition value realized by the pair: s1^2 + s2^2 = 1 - s3^2.
    double predicted_value() const { return s1 * s1 + s2 * s2; }
};

using ProjectionPair = std::pair<Projection, Projection>;

namespace examples {

/// The explicit rank-2 equiangular pair in dimension 4, built entrywise
/// from the closed-form matrix so it can be compared coefficient by
/// coefficient.
ProjectionPair two_plane_pair(const TwoPlaneParams& params, const ToleranceConfig& tol = {});

/// (|psi><psi|, |phi><phi|); both transition directions exist and equal
/// |<psi|phi>|^2.
ProjectionPair rank1_pair(const Vector& psi, const Vector& phi, const ToleranceConfig& tol = {});

/// Commuting diagonal projectors from 0/1 masks, chosen so the pair is
/// neither orthogonal nor nested and therefore admits no transition.
ProjectionPair commuting_no_transition_pair(const std::vector<int>& mask_p,
                                            const std::vector<int>& mask_q,
                                            const ToleranceConfig& tol = {});

/// A rank-1 p and a higher-rank q with pq != 0 whose backward compression is
/// far from scalar: the forward transition exists, the backward one cannot.
ProjectionPair asymmetric_pair(int dim, std::uint64_t seed, const ToleranceConfig& tol = {});

/// A rank-k pair in dim >= 2k whose ranges meet at a common angle theta:
/// q is the span of each basis vector of p tilted by theta into the
/// complement, so the transition exists with value cos^2(theta).
ProjectionPair equiangular_pair(int dim, int rank, double theta, std::uint64_t seed,
                                const ToleranceConfig& tol = {});

/// A random projection of the given rank (span of columns of a Haar
/// unitary).
Projection random_projection(int dim, int rank, std::uint64_t seed,
                             const ToleranceConfig& tol = {});

/// n copies of (p, q) conjugated by independent random unitaries; each
/// preserves the transition result of the input pair.
std::vector<ProjectionPair> conjugated_family(const Projection& p, const Projection& q,
                                              std::uint64_t seed, int n);

}  // namespace examples
}  // namespace qlat
