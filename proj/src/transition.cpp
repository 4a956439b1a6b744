#include "qlattice/transition.hpp"

#include <algorithm>
#include <cmath>

namespace qlat {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Implies: return "implies";
        case Classification::Excludes: return "excludes";
        case Classification::Intermediate: return "intermediate";
        case Classification::NoTransition: return "no_transition";
    }
    return "?";
}

namespace transition {

TransitionResult transition_probability(const Projection& p, const Projection& q,
                                        const ToleranceConfig& tol) {
    if (p.dim() != q.dim()) throw ShapeError("transition_probability: dimension mismatch");
    if (p.rank() == 0) throw ZeroProjectionError();
    tol.validate();

    const Matrix& basis = p.range_basis();
    const int rank = p.rank();
    Matrix compression = basis.adjoint() * q.matrix() * basis;
    compression = (compression + Matrix(compression.adjoint())) / 2.0;

    TransitionResult res;
    res.candidate = compression.trace().real() / static_cast<double>(rank);
    res.residual_compression =
        (compression - res.candidate * Matrix::Identity(rank, rank)).norm();

    const Matrix pqp = p.matrix() * q.matrix() * p.matrix();
    res.residual_algebraic = (pqp - res.candidate * p.matrix()).norm();

    res.compression_spectrum = numeric::hermitian_eigenvalues(compression, tol);
    res.spread = res.compression_spectrum.back() - res.compression_spectrum.front();

    const double threshold = tol.eps_exist * static_cast<double>(rank);
    const double worst = std::max(res.residual_compression, res.residual_algebraic);
    res.exists = worst <= threshold;
    res.numerically_ambiguous = !res.exists && worst <= 100.0 * threshold;

    if (res.exists) {
        res.value = std::clamp(res.candidate, 0.0, 1.0);
        if (*res.value >= 1.0 - tol.eps_exist)
            res.classification = Classification::Implies;
        else if (*res.value <= tol.eps_exist)
            res.classification = Classification::Excludes;
        else
            res.classification = Classification::Intermediate;
    } else {
        res.classification = Classification::NoTransition;
    }
    return res;
}

double transition_rank1(const Vector& psi, const Projection& q) {
    const double n = psi.norm();
    if (!(n > 0.0)) throw DomainError("transition_rank1: zero vector");
    if (psi.size() != q.dim()) throw ShapeError("transition_rank1: dimension mismatch");
    Vector unit = psi / n;
    return (unit.adjoint() * q.matrix() * unit)(0).real();
}

ClassificationReport symmetry_report(const Projection& p, const Projection& q,
                                     const ToleranceConfig& tol) {
    if (p.rank() == 0 || q.rank() == 0) throw ZeroProjectionError();
    ClassificationReport report;
    report.forward = transition_probability(p, q, tol);
    report.backward = transition_probability(q, p, tol);
    if (report.forward.exists && report.backward.exists)
        report.symmetric_ok =
            std::abs(*report.forward.value - *report.backward.value) <= 10.0 * tol.eps_exist;
    return report;
}

double trace_estimate(const Projection& p, const Projection& q) {
    if (p.dim() != q.dim()) throw ShapeError("trace_estimate: dimension mismatch");
    if (p.rank() == 0) throw ZeroProjectionError();
    return (p.matrix() * q.matrix()).trace().real() / p.matrix().trace().real();
}

RankFeasibility rank_feasible(const Projection& p, const Projection& q) {
    if (p.rank() == 0) throw ZeroProjectionError();
    RankFeasibility f;
    f.nonzero_possible = q.rank() >= p.rank();
    const int rank_q_complement = q.dim() - q.rank();
    f.nontrivial_possible = f.nonzero_possible && rank_q_complement >= p.rank();
    return f;
}

Classification classify_logical(const Projection& p, const Projection& q,
                                const ToleranceConfig& tol) {
    return transition_probability(p, q, tol).classification;
}

RestrictionReport restriction_check(const Projection& p1, const Projection& p2,
                                    const Projection& q, const ToleranceConfig& tol) {
    if (p2.rank() == 0) throw ZeroProjectionError();
    if (!lattice::leq(p2, p1, tol))
        throw PreconditionError("restriction_check: p2 is not below p1");
    TransitionResult whole = transition_probability(p1, q, tol);
    if (!whole.exists)
        throw PreconditionError("restriction_check: transition from p1 does not exist");

    RestrictionReport report;
    report.value_whole = *whole.value;
    TransitionResult part = transition_probability(p2, q, tol);
    if (part.exists) {
        report.value_part = *part.value;
        report.difference = std::abs(report.value_whole - report.value_part);
        report.ok = report.difference <= 10.0 * tol.eps_exist;
    }
    return report;
}

bool unitary_invariance_check(const Projection& p, const Projection& q,
                              const Matrix& u, const ToleranceConfig& tol) {
    TransitionResult plain = transition_probability(p, q, tol);
    TransitionResult rotated = transition_probability(p.conjugate(u), q.conjugate(u), tol);
    if (plain.exists != rotated.exists) return false;
    if (!plain.exists) return true;
    return std::abs(*plain.value - *rotated.value) <= 10.0 * tol.eps_exist;
}

}  // namespace transition
}  // namespace qlat
