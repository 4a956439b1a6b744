#include <doctest.h>

#include <random>

#include "qlattice/examples.hpp"
#include "qlattice/transition.hpp"

using namespace qlat;
using transition::transition_probability;

namespace {
const ToleranceConfig kTol{};

Matrix diag4(double a, double b, double c, double d) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

Vector unit(int dim, int i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}
}  // namespace

TEST_CASE("tilted-plane pair has a flat compression") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    TransitionResult res = transition_probability(p, q, kTol);
    CHECK(res.exists);
    CHECK(*res.value == doctest::Approx(0.36).epsilon(1e-10));
    CHECK(res.spread <= 1e-12);
    CHECK(res.classification == Classification::Intermediate);

    // Hand oracle for the backward direction: q p q = 0.36 q entrywise.
    Matrix qpq = q.matrix() * p.matrix() * q.matrix();
    CHECK((qpq - 0.36 * q.matrix()).norm() < 1e-12);
    TransitionResult back = transition_probability(q, p, kTol);
    CHECK(back.exists);
    CHECK(*back.value == doctest::Approx(0.36).epsilon(1e-10));
}

TEST_CASE("containment gives value one, orthogonality gives zero") {
    Projection small = Projection::validate(diag4(1, 0, 0, 0), kTol);
    Projection big = Projection::validate(diag4(1, 1, 0, 0), kTol);
    TransitionResult res = transition_probability(small, big, kTol);
    CHECK(res.exists);
    CHECK(*res.value == doctest::Approx(1.0));
    CHECK(res.classification == Classification::Implies);

    res = transition_probability(big, big.complement(), kTol);
    CHECK(res.exists);
    CHECK(*res.value == doctest::Approx(0.0));
    CHECK(res.classification == Classification::Excludes);
}

TEST_CASE("commuting overlap without containment has no transition") {
    Projection p = Projection::validate(diag4(1, 1, 0, 0), kTol);
    Projection q = Projection::validate(diag4(0, 1, 1, 0), kTol);
    TransitionResult res = transition_probability(p, q, kTol);
    CHECK_FALSE(res.exists);
    CHECK(res.classification == Classification::NoTransition);
    CHECK(res.spread == doctest::Approx(1.0));  // compression is diag(1, 0)
}

TEST_CASE("rank-2 p against a non-orthogonal line has no transition") {
    Projection p = Projection::validate(diag4(1, 1, 0, 0), kTol);
    Projection q = Projection::rank1_from_ket(unit(4, 0), kTol);
    TransitionResult res = transition_probability(p, q, kTol);
    CHECK_FALSE(res.exists);
}

TEST_CASE("zero p is rejected, zero q is excluded") {
    Projection zero = Projection::zero(3, kTol);
    Projection line = Projection::rank1_from_ket(unit(3, 0), kTol);
    CHECK_THROWS_AS(transition_probability(zero, line, kTol), ZeroProjectionError);

    TransitionResult res = transition_probability(line, zero, kTol);
    CHECK(res.exists);
    CHECK(*res.value == doctest::Approx(0.0));
}

TEST_CASE("transition_rank1") {
    Vector psi = unit(2, 0);
    Projection diag_line = Projection::rank1_from_ket((Vector(2) << 1, 1).finished(), kTol);
    CHECK(transition::transition_rank1(psi, diag_line) == doctest::Approx(0.5));
    CHECK(transition::transition_rank1(psi, Projection::identity(2, kTol)) ==
          doctest::Approx(1.0));

    Vector phi(3);
    phi << 0.6, 0.8, 0.0;
    CHECK(transition::transition_rank1(unit(3, 0), Projection::rank1_from_ket(phi, kTol)) ==
          doctest::Approx(0.36));

    // Matches the generic path, which always exists for rank-1 p.
    TransitionResult res =
        transition_probability(Projection::rank1_from_ket(psi, kTol), diag_line, kTol);
    CHECK(res.exists);
    CHECK(*res.value == doctest::Approx(0.5));

    CHECK_THROWS_AS(transition::transition_rank1(Vector::Zero(2), diag_line), DomainError);
}

TEST_CASE("rank-1 p admits a transition to every q") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 50; ++t) {
        int dim = 2 + static_cast<int>(rng() % 5);
        Vector psi(dim);
        for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        Projection p = Projection::rank1_from_ket(psi, kTol);
        Projection q = examples::random_projection(dim, 1 + static_cast<int>(rng() % dim), rng(), kTol);
        TransitionResult res = transition_probability(p, q, kTol);
        CHECK(res.exists);
        CHECK(*res.value ==
              doctest::Approx(transition::transition_rank1(psi, q)).epsilon(1e-9));
    }
}

TEST_CASE("symmetry_report") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    ClassificationReport rep = transition::symmetry_report(p, q, kTol);
    CHECK(rep.forward.exists);
    CHECK(rep.backward.exists);
    CHECK(rep.symmetric_ok);
    CHECK(*rep.forward.value == doctest::Approx(*rep.backward.value));

    Projection line = Projection::rank1_from_ket(unit(3, 0), kTol);
    Matrix plane = Matrix::Zero(3, 3);
    plane(0, 0) = plane(1, 1) = 1.0;
    rep = transition::symmetry_report(line, Projection::validate(plane, kTol), kTol);
    CHECK(rep.forward.exists);
    CHECK(*rep.forward.value == doctest::Approx(1.0));
    CHECK_FALSE(rep.backward.exists);
    CHECK(rep.symmetric_ok);  // vacuous when one side is absent

    rep = transition::symmetry_report(line, line, kTol);
    CHECK(*rep.forward.value == doctest::Approx(1.0));
    CHECK(*rep.backward.value == doctest::Approx(1.0));
}

TEST_CASE("trace_estimate") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    // Oracle by explicit multiplication: tr(pq) = 2 * 0.36, tr(p) = 2.
    CHECK((p.matrix() * q.matrix()).trace().real() == doctest::Approx(0.72));
    CHECK(transition::trace_estimate(p, q) == doctest::Approx(0.36));

    Projection small = Projection::validate(diag4(1, 0, 0, 0), kTol);
    Projection big = Projection::validate(diag4(1, 1, 0, 0), kTol);
    CHECK(transition::trace_estimate(small, big) == doctest::Approx(1.0));

    // The estimate is produced even when no transition exists.
    Projection line = Projection::rank1_from_ket(unit(4, 0), kTol);
    CHECK(transition::trace_estimate(big, line) == doctest::Approx(0.5));
    CHECK_FALSE(transition_probability(big, line, kTol).exists);

    CHECK_THROWS_AS(transition::trace_estimate(Projection::zero(4, kTol), big),
                    ZeroProjectionError);
}

TEST_CASE("rank_feasible") {
    Projection plane = Projection::validate(diag4(1, 1, 0, 0), kTol);
    Projection line = Projection::rank1_from_ket(unit(4, 0), kTol);

    auto f = transition::rank_feasible(plane, line);
    CHECK_FALSE(f.nonzero_possible);
    CHECK_FALSE(f.nontrivial_possible);

    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    f = transition::rank_feasible(p, q);
    CHECK(f.nonzero_possible);
    CHECK(f.nontrivial_possible);

    f = transition::rank_feasible(line, plane);
    CHECK(f.nonzero_possible);
    CHECK(f.nontrivial_possible);
}

TEST_CASE("classify_logical") {
    auto [p1, q1] = examples::commuting_no_transition_pair({1, 1, 0, 0}, {0, 1, 1, 0}, kTol);
    CHECK(transition::classify_logical(p1, q1, kTol) == Classification::NoTransition);

    auto [p2, q2] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    CHECK(transition::classify_logical(p2, q2, kTol) == Classification::Intermediate);

    Projection d10 = Projection::validate(diag4(1, 0, 0, 0), kTol);
    Projection d01 = Projection::validate(diag4(0, 1, 0, 0), kTol);
    CHECK(transition::classify_logical(d10, d01, kTol) == Classification::Excludes);
}

TEST_CASE("restriction_check") {
    auto [p1, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    Projection p2 = Projection::rank1_from_ket(unit(4, 0), kTol);
    RestrictionReport rep = transition::restriction_check(p1, p2, q, kTol);
    CHECK(rep.ok);
    CHECK(rep.value_whole == doctest::Approx(0.36));
    // Oracle: <e1| q |e1> = s1^2 + s2^2 = 0.36.
    CHECK(rep.value_part == doctest::Approx(0.36));

    CHECK(transition::restriction_check(p1, p1, q, kTol).ok);

    Projection outside = Projection::rank1_from_ket(unit(4, 2), kTol);
    CHECK_THROWS_AS(transition::restriction_check(p1, outside, q, kTol), PreconditionError);

    Projection line = Projection::rank1_from_ket(unit(4, 0), kTol);
    CHECK_THROWS_AS(transition::restriction_check(p1, p2, line, kTol), PreconditionError);
}

TEST_CASE("unitary_invariance_check") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    CHECK(transition::unitary_invariance_check(p, q, Matrix::Identity(4, 4), kTol));
    Matrix u = numeric::random_unitary(4, 7);
    CHECK(transition::unitary_invariance_check(p, q, u, kTol));
    // Conjugation preserves the value itself.
    TransitionResult rotated = transition_probability(p.conjugate(u), q.conjugate(u), kTol);
    CHECK(*rotated.value == doctest::Approx(0.36).epsilon(1e-9));

    Projection line = Projection::rank1_from_ket(unit(4, 0), kTol);
    CHECK(transition::unitary_invariance_check(p, line, u, kTol));  // stays non-existing
    CHECK_FALSE(transition_probability(p.conjugate(u), line.conjugate(u), kTol).exists);

    CHECK_THROWS_AS(transition::unitary_invariance_check(p, q, 2.0 * u, kTol), DomainError);
}

TEST_CASE("complement rule") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.0, M_PI / 2.0);
    for (int t = 0; t < 30; ++t) {
        auto [p, q] = examples::equiangular_pair(6, 1 + static_cast<int>(rng() % 3),
                                                 angle(rng), rng(), kTol);
        TransitionResult fwd = transition_probability(p, q, kTol);
        TransitionResult comp = transition_probability(p, q.complement(), kTol);
        REQUIRE(fwd.exists);
        REQUIRE(comp.exists);
        CHECK(*fwd.value + *comp.value == doctest::Approx(1.0).epsilon(1e-9));
    }
}
