#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qlattice/projection.hpp"

namespace qlat {

enum class Classification { Implies, Excludes, Intermediate, NoTransition };

std::string_view to_string(Classification c);

/// Outcome of the existence decision for a transition probability.
///
/// Existence is decided on the compression C = B* q B (B an orthonormal
/// basis of range(p)): it holds iff C is a scalar multiple of the identity,
/// equivalently iff all squared principal-angle cosines between the two
/// ranges coincide. Both the compression residual and the direct residual
/// of pqp - r p are recorded and must pass.
struct TransitionResult {
    bool exists = false;
    std::optional<double> value;
    double candidate = 0.0;              // trace(C)/rank(p), before the decision
    double residual_algebraic = 0.0;     // ||pqp - candidate * p||_F
    double residual_compression = 0.0;   // ||C - candidate * I||_F
    std::vector<double> compression_spectrum;  // ascending
    double spread = 0.0;                 // max - min of the spectrum
    bool numerically_ambiguous = false;  // residual within 100x of the threshold
    Classification classification = Classification::NoTransition;
};

struct ClassificationReport {
    TransitionResult forward;
    TransitionResult backward;
    bool symmetric_ok = true;
};

struct RankFeasibility {
    bool nonzero_possible = false;    // rank(q) >= rank(p)
    bool nontrivial_possible = false; // additionally rank(q') >= rank(p)
};

struct RestrictionReport {
    bool ok = false;
    double value_whole = 0.0;
    double value_part = 0.0;
    double difference = 0.0;
};

namespace transition {

/// Decide existence of the transition probability from p to q and compute it.
/// Throws ZeroProjectionError when rank(p) = 0.
TransitionResult transition_probability(const Projection& p, const Projection& q,
                                        const ToleranceConfig& tol = {});

/// <psi|q|psi> for normalized psi; always a transition probability since
/// rank-1 projections admit one for every q.
double transition_rank1(const Vector& psi, const Projection& q);

/// Both directions plus the symmetry verdict.
ClassificationReport symmetry_report(const Projection& p, const Projection& q,
                                     const ToleranceConfig& tol = {});

/// tr(pq)/tr(p). Always defined for p != 0 but meaningful as a transition
/// probability only when existence holds.
double trace_estimate(const Projection& p, const Projection& q);

RankFeasibility rank_feasible(const Projection& p, const Projection& q);

Classification classify_logical(const Projection& p, const Projection& q,
                                const ToleranceConfig& tol = {});

/// Checks that a transition existing for p1 restricts unchanged to any
/// nonzero p2 <= p1.
RestrictionReport restriction_check(const Projection& p1, const Projection& p2,
                                    const Projection& q, const ToleranceConfig& tol = {});

/// Existence and value are preserved under simultaneous conjugation by u.
bool unitary_invariance_check(const Projection& p, const Projection& q,
                              const Matrix& u, const ToleranceConfig& tol = {});

}  // namespace transition
}  // namespace qlat
