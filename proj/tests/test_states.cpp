#include <doctest.h>

#include <random>

#include "qlattice/examples.hpp"
#include "qlattice/states.hpp"

using namespace qlat;

namespace {
const ToleranceConfig kTol{};

Vector unit(int dim, int i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}

DensityState maximally_mixed(int dim) {
    return DensityState::validate(Matrix::Identity(dim, dim) / static_cast<double>(dim), kTol);
}
}  // namespace

TEST_CASE("density state validation") {
    CHECK_NOTHROW(maximally_mixed(4));
    CHECK_THROWS_AS(DensityState::validate(Matrix::Identity(2, 2), kTol), DomainError);

    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityState::validate(neg, kTol), DomainError);

    Matrix nh(2, 2);
    nh << 0.5, 0.3, 0.0, 0.5;
    CHECK_THROWS_AS(DensityState::validate(nh, kTol), NotHermitianError);
}

TEST_CASE("evaluate") {
    Projection plane = Projection::from_span({unit(4, 0), unit(4, 1)}, kTol);
    CHECK(states::evaluate(maximally_mixed(4), plane) == doctest::Approx(0.5));
    CHECK(states::evaluate(maximally_mixed(4), Projection::identity(4, kTol)) ==
          doctest::Approx(1.0));

    // Pure state against a line: the squared overlap.
    Vector psi(2), phi(2);
    psi << 0.6, 0.8;
    phi << 1.0, 0.0;
    DensityState pure = DensityState::validate(
        Projection::rank1_from_ket(psi, kTol).matrix(), kTol);
    CHECK(states::evaluate(pure, Projection::rank1_from_ket(phi, kTol)) ==
          doctest::Approx(0.36));

    CHECK_THROWS_AS(states::evaluate(pure, plane), ShapeError);
}

TEST_CASE("additivity on orthogonal pairs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        int dim = 2 + static_cast<int>(rng() % 5);
        Projection p = examples::random_projection(dim, 1 + static_cast<int>(rng() % (dim - 1)),
                                                   rng(), kTol);
        Projection pc = p.complement();
        DensityState mu =
            states::random_state_supported_in(Projection::identity(dim, kTol), rng(), kTol);
        const double whole = (mu.rho() * (p.matrix() + pc.matrix())).trace().real();
        CHECK(std::abs(whole - states::evaluate(mu, p) - states::evaluate(mu, pc)) <= 1e-8);
    }
}

TEST_CASE("condition") {
    Projection plane = Projection::from_span({unit(4, 0), unit(4, 1)}, kTol);
    DensityState conditioned = states::condition(maximally_mixed(4), plane, kTol);
    CHECK((conditioned.rho() - plane.matrix() / 2.0).norm() < 1e-12);
    CHECK(states::evaluate(conditioned, plane) == doctest::Approx(1.0));

    // A state already supported in the range is unchanged.
    DensityState inside = states::random_state_supported_in(plane, 5, kTol);
    CHECK((states::condition(inside, plane, kTol).rho() - inside.rho()).norm() < 1e-10);

    // Conditioning is idempotent.
    DensityState once = states::condition(maximally_mixed(4), plane, kTol);
    CHECK((states::condition(once, plane, kTol).rho() - once.rho()).norm() < 1e-10);

    Projection far = Projection::rank1_from_ket(unit(4, 3), kTol);
    CHECK_THROWS_AS(states::condition(inside, far, kTol), ConditioningOnNullError);
}

TEST_CASE("conditioning lands on the transition value regardless of the initial state") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        DensityState mu =
            states::random_state_supported_in(Projection::identity(4, kTol), rng(), kTol);
        DensityState after = states::condition(mu, p, kTol);
        CHECK(states::evaluate(after, q) == doctest::Approx(0.36).epsilon(1e-8));
    }
}

TEST_CASE("random_state_supported_in") {
    Projection plane = Projection::from_span({unit(4, 0), unit(4, 1)}, kTol);
    for (std::uint64_t s = 0; s < 10; ++s) {
        DensityState mu = states::random_state_supported_in(plane, s, kTol);
        CHECK(states::evaluate(mu, plane) == doctest::Approx(1.0));
        CHECK(states::evaluate(mu, plane.complement()) == doctest::Approx(0.0));
    }

    // On a line the supported state is unique.
    Vector psi(3);
    psi << 0.6, 0.0, 0.8;
    Projection line = Projection::rank1_from_ket(psi, kTol);
    DensityState mu = states::random_state_supported_in(line, 77, kTol);
    CHECK((mu.rho() - line.matrix()).norm() < 1e-10);

    CHECK_THROWS_AS(states::random_state_supported_in(Projection::zero(3, kTol), 0, kTol),
                    ZeroProjectionError);
}

TEST_CASE("defining_property_check on an existing transition") {
    auto [p, q] = examples::two_plane_pair({0.6, 0.0, 0.8}, kTol);
    DefiningPropertyReport rep = states::defining_property_check(p, q, 100, 3, kTol);
    CHECK(rep.transition_exists);
    CHECK(rep.consistent);
    CHECK(rep.min_evaluation == doctest::Approx(0.36).epsilon(1e-8));
    CHECK(rep.max_evaluation == doctest::Approx(0.36).epsilon(1e-8));

    Projection small = Projection::rank1_from_ket(unit(4, 0), kTol);
    Projection big = Projection::from_span({unit(4, 0), unit(4, 1)}, kTol);
    rep = states::defining_property_check(small, big, 10, 3, kTol);
    CHECK(rep.consistent);
    CHECK(rep.min_evaluation == doctest::Approx(1.0));
}

TEST_CASE("defining_property_check witnesses non-constancy") {
    // The basis states e1 and e2 inside the plane evaluate the line to 1 and 0.
    Projection plane = Projection::from_span({unit(4, 0), unit(4, 1)}, kTol);
    Projection line = Projection::rank1_from_ket(unit(4, 0), kTol);
    DefiningPropertyReport rep = states::defining_property_check(plane, line, 20, 9, kTol);
    CHECK_FALSE(rep.transition_exists);
    CHECK(rep.consistent);
    CHECK(rep.witness_gap == doctest::Approx(1.0));
    CHECK(rep.max_evaluation - rep.min_evaluation >= 0.5);
}

TEST_CASE("exclusion certificate") {
    for (int dim : {2, 3, 4, 5}) {
        ExclusionCertificate cert = states::deterministic_exclusion_certificate(dim, 1, kTol);
        CHECK(cert.verified);
        CHECK(states::verify_certificate(cert, kTol));
        CHECK(static_cast<int>(cert.basis_projectors.size()) == dim);
        for (double v : cert.partner_values) CHECK(v == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(cert.derivation.size() == static_cast<std::size_t>(dim) + 1);
        CHECK(cert.contradiction.find("= 1") != std::string::npos);
    }
    CHECK_THROWS_AS(states::deterministic_exclusion_certificate(1, 0, kTol), DomainError);
}

TEST_CASE("certificate verification catches tampering") {
    ExclusionCertificate cert = states::deterministic_exclusion_certificate(3, 1, kTol);
    // Replace one partner with an orthogonal line: its transition value drops
    // to 0 and the certificate must no longer verify.
    cert.partners[0] = Projection::rank1_from_ket(unit(3, 2), kTol);
    CHECK_FALSE(states::verify_certificate(cert, kTol));
}
