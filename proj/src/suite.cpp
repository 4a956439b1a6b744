#include "qlattice/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qlattice/io.hpp"

namespace qlat::suite {

namespace {

using transition::transition_probability;

struct Recorder {
    PropertyResult& res;
    void record(bool ok, double residual) {
        ++res.trials;
        if (!ok) ++res.failures;
        res.worst_residual = std::max(res.worst_residual, residual);
    }
};

PropertyResult& add(SuiteReport& report, const std::string& name) {
    report.properties.push_back(PropertyResult{name});
    return report.properties.back();
}

// Pairs whose transition is known to exist, mixing rank-1 pairs with
// equiangular higher-rank pairs where the dimension allows.
ProjectionPair existing_pair(int dim, std::uint64_t seed, const ToleranceConfig& tol,
                             double* predicted = nullptr) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, M_PI / 2.0);
    const int max_rank = std::max(1, dim / 2);
    const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    const double theta = angle(rng);
    if (predicted) *predicted = std::cos(theta) * std::cos(theta);
    return examples::equiangular_pair(dim, rank, theta, rng(), tol);
}

ProjectionPair random_pair(int dim, std::uint64_t seed, const ToleranceConfig& tol) {
    std::mt19937_64 rng(seed);
    const int rank_p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    const int rank_q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    return {examples::random_projection(dim, rank_p, rng(), tol),
            examples::random_projection(dim, rank_q, rng(), tol)};
}

}  // namespace

SuiteReport run(int dim, int trials, std::uint64_t seed, const ToleranceConfig& tol) {
    if (dim < 2) throw DomainError("suite: dim must be >= 2");
    if (trials < 1) throw DomainError("suite: trials must be >= 1");
    tol.validate();

    SuiteReport report;
    report.dim = dim;
    report.trials = trials;
    report.seed = seed;

    std::mt19937_64 master(seed);

    {  // Both directions of an existing transition agree.
        Recorder rec{add(report, "symmetry")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = existing_pair(dim, master(), tol);
            ClassificationReport sym = transition::symmetry_report(p, q, tol);
            const double diff = (sym.forward.exists && sym.backward.exists)
                                    ? std::abs(*sym.forward.value - *sym.backward.value)
                                    : 0.0;
            rec.record(sym.symmetric_ok, diff);
        }
    }

    {  // Existing value matches tr(pq)/tr(p).
        Recorder rec{add(report, "trace_consistency")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = existing_pair(dim, master(), tol);
            TransitionResult res = transition_probability(p, q, tol);
            const double diff = res.exists
                                    ? std::abs(*res.value - transition::trace_estimate(p, q))
                                    : 0.0;
            rec.record(res.exists && diff <= 10.0 * tol.eps_exist, diff);
        }
    }

    {  // P(q'|p) = 1 - P(q|p) whenever the forward transition exists.
        Recorder rec{add(report, "complement_rule")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = existing_pair(dim, master(), tol);
            TransitionResult res = transition_probability(p, q, tol);
            TransitionResult comp = transition_probability(p, q.complement(), tol);
            const double diff = (res.exists && comp.exists)
                                    ? std::abs(*res.value + *comp.value - 1.0)
                                    : 1.0;
            rec.record(res.exists && comp.exists && diff <= 10.0 * tol.eps_exist, diff);
        }
    }

    {  // Conjugating both projections preserves existence and value.
        Recorder rec{add(report, "unitary_invariance")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = (t % 2 == 0) ? existing_pair(dim, master(), tol)
                                       : random_pair(dim, master(), tol);
            Matrix u = numeric::random_unitary(dim, master());
            rec.record(transition::unitary_invariance_check(p, q, u, tol), 0.0);
        }
    }

    {  // A nonzero transition value needs rank(q) >= rank(p); a strictly
       // intermediate one with rank(p) > 1 needs dim >= 4.
        Recorder rec{add(report, "rank_monotonicity")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = (t % 2 == 0) ? existing_pair(dim, master(), tol)
                                       : random_pair(dim, master(), tol);
            TransitionResult res = transition_probability(p, q, tol);
            bool ok = true;
            if (res.exists && *res.value > tol.eps_exist && q.rank() < p.rank()) ok = false;
            if (res.exists && *res.value > tol.eps_exist && *res.value < 1.0 - tol.eps_exist &&
                p.rank() > 1 && dim < 4)
                ok = false;
            rec.record(ok, 0.0);
        }
    }

    {  // An existing transition restricts unchanged to any nonzero part of p.
        Recorder rec{add(report, "restriction")};
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int t = 0; t < trials; ++t) {
            auto [p1, q] = existing_pair(dim, master(), tol);
            std::mt19937_64 rng(master());
            Vector coeff(p1.rank());
            for (int i = 0; i < p1.rank(); ++i) coeff(i) = Complex(gauss(rng), gauss(rng));
            Projection p2 = Projection::rank1_from_ket(p1.range_basis() * coeff, tol);
            RestrictionReport rest = transition::restriction_check(p1, p2, q, tol);
            rec.record(rest.ok, rest.difference);
        }
    }

    {  // Every state supported in range(p) evaluates q to the same number
       // iff the transition exists.
        Recorder rec{add(report, "defining_property")};
        const int samples = 20;
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = (t % 2 == 0) ? existing_pair(dim, master(), tol)
                                       : random_pair(dim, master(), tol);
            DefiningPropertyReport rep =
                states::defining_property_check(p, q, samples, master(), tol);
            rec.record(rep.consistent, rep.max_evaluation - rep.min_evaluation);
        }
    }

    {  // De Morgan, double complement, order antisymmetry, meet/join bounds.
        Recorder rec{add(report, "lattice_laws")};
        for (int t = 0; t < trials; ++t) {
            auto [p, q] = random_pair(dim, master(), tol);
            double worst = 0.0;
            bool ok = true;

            Projection dm_left = lattice::join(p, q, tol);
            Projection dm_right = lattice::meet(p.complement(), q.complement(), tol).complement();
            worst = std::max(worst, numeric::residual(dm_left.matrix(), dm_right.matrix()));

            worst = std::max(worst,
                             numeric::residual(p.complement().complement().matrix(), p.matrix()));

            if (lattice::leq(p, q, tol) && lattice::leq(q, p, tol))
                worst = std::max(worst, numeric::residual(p.matrix(), q.matrix()));

            Projection both = lattice::meet(p, q, tol);
            Projection either = lattice::join(p, q, tol);
            ok = ok && lattice::leq(both, p, tol) && lattice::leq(both, q, tol);
            ok = ok && lattice::leq(p, either, tol) && lattice::leq(q, either, tol);

            ok = ok && worst <= 10.0 * tol.eps_exist;
            rec.record(ok, worst);
        }
    }

    {  // Two distinct lines and their diagonal: meet distributes on neither side.
        Recorder rec{add(report, "distributivity_failure")};
        Vector e1(2), e2(2), diag(2);
        e1 << 1, 0;
        e2 << 0, 1;
        diag << 1, 1;
        Projection p = Projection::rank1_from_ket(e1, tol);
        Projection q = Projection::rank1_from_ket(e2, tol);
        Projection w = Projection::rank1_from_ket(diag, tol);
        Projection lhs = lattice::meet(w, lattice::join(p, q, tol), tol);
        Projection rhs =
            lattice::join(lattice::meet(w, p, tol), lattice::meet(w, q, tol), tol);
        const double keep = numeric::residual(lhs.matrix(), w.matrix());
        const bool failed_to_distribute =
            keep <= tol.eps_structural && rhs.rank() == 0;
        rec.record(failed_to_distribute, keep);
    }

    {  // Commuting projections never yield a strictly intermediate value.
        Recorder rec{add(report, "commuting_classification")};
        std::bernoulli_distribution coin(0.5);
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(master());
            std::vector<int> mask_p(dim), mask_q(dim);
            bool any_p = false;
            for (int i = 0; i < dim; ++i) {
                mask_p[i] = coin(rng) ? 1 : 0;
                mask_q[i] = coin(rng) ? 1 : 0;
                any_p = any_p || mask_p[i] != 0;
            }
            if (!any_p) mask_p[0] = 1;

            Matrix pm = Matrix::Zero(dim, dim), qm = Matrix::Zero(dim, dim);
            bool overlap = false, outside = false;
            for (int i = 0; i < dim; ++i) {
                if (mask_p[i]) pm(i, i) = 1.0;
                if (mask_q[i]) qm(i, i) = 1.0;
                if (mask_p[i] && mask_q[i]) overlap = true;
                if (mask_p[i] && !mask_q[i]) outside = true;
            }
            Projection p = Projection::validate(pm, tol);
            Projection q = Projection::validate(qm, tol);
            Classification got = transition::classify_logical(p, q, tol);
            Classification want = !overlap ? Classification::Excludes
                                 : !outside ? Classification::Implies
                                            : Classification::NoTransition;
            rec.record(got == want && got != Classification::Intermediate, 0.0);
        }
    }

    {  // State axioms: additivity on orthogonal pairs, conditioning
       // idempotence, and mu(xp) = 0 whenever mu(p) = 0.
        Recorder rec{add(report, "state_axioms")};
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(master());
            const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim - 1));
            Projection p = examples::random_projection(dim, rank, rng(), tol);
            Projection pc = p.complement();
            DensityState mu = states::random_state_supported_in(
                Projection::identity(dim, tol), rng(), tol);

            double worst = std::abs(states::evaluate(mu, Projection::identity(dim, tol)) - 1.0);
            const double additive = std::abs(
                (mu.rho() * (p.matrix() + pc.matrix())).trace().real() -
                states::evaluate(mu, p) - states::evaluate(mu, pc));
            worst = std::max(worst, additive);

            DensityState once = states::condition(mu, p, tol);
            DensityState twice = states::condition(once, p, tol);
            worst = std::max(worst, numeric::residual(once.rho(), twice.rho()));
            worst = std::max(worst, std::abs(states::evaluate(once, p) - 1.0));

            // A state supported in p assigns 0 to p' and then kills every
            // mixed term tr(rho x p').
            Matrix x(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) x(i, j) = Complex(gauss(rng), gauss(rng));
            DensityState inside = states::random_state_supported_in(p, rng(), tol);
            const double cs = std::abs((inside.rho() * x * pc.matrix()).trace());
            worst = std::max(worst, cs / std::max(1.0, x.norm()));

            rec.record(worst <= 10.0 * tol.eps_structural + tol.eps_exist, worst);
        }
    }

    return report;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json j;
    j["dim"] = report.dim;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : report.properties)
        props.push_back({{"name", p.name},
                         {"trials", p.trials},
                         {"failures", p.failures},
                         {"worst_residual", p.worst_residual},
                         {"worst_residual_repr", io::format_double(p.worst_residual)},
                         {"passed", p.passed()}});
    j["properties"] = props;
    return j;
}

}  // namespace qlat::suite
