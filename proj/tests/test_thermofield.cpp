#include <cmath>

#include <doctest.h>

#include "qhopf/bogoliubov.hpp"
#include "qhopf/thermofield.hpp"

using namespace qhopf;

TEST_CASE("theta-vacuum amplitudes are geometric") {
    const double theta = 0.5;
    const int cutoff = 20;
    ThetaVacuum vac = vacuum_closed_pair(theta, cutoff);
    const StateVector& state = vac.mode_states[0];
    const SpaceDescriptor& space = state.space;

    // c_n = tanh^n / cosh at |n,n>, in particular c_0 = 1/cosh(0.5)
    CHECK(std::abs(state.amplitudes(space.flat_index({0, 0}))) ==
          doctest::Approx(0.88681888397007391).epsilon(1e-12));
    for (int n = 0; n <= 5; ++n) {
        double expected = std::pow(std::tanh(theta), n) / std::cosh(theta);
        CHECK(std::abs(state.amplitudes(space.flat_index({n, n}))) ==
              doctest::Approx(expected).epsilon(1e-10));
    }

    // off-diagonal occupations never appear
    CHECK(std::abs(state.amplitudes(space.flat_index({1, 0}))) < 1e-15);
    CHECK(std::abs(state.amplitudes(space.flat_index({3, 5}))) < 1e-15);

    double n_a = expectation(state, number_op(space, space.factors[0].label)).real();
    CHECK(n_a == doctest::Approx(std::sinh(theta) * std::sinh(theta)).epsilon(1e-10));
    CHECK(n_a == doctest::Approx(0.27154031740762190).epsilon(1e-8));
}

TEST_CASE("exponential map agrees with the closed pair form") {
    const double theta = 0.5;
    const int cutoff = 20;
    ThetaVacuum vexp = vacuum_exponential(theta, cutoff);
    ThetaVacuum vcl = vacuum_closed_pair(theta, cutoff);
    CHECK(std::abs(1.0 - std::abs(overlap(vexp, vcl))) < 1e-10);
}

TEST_CASE("closed-form vacuum is annihilated by A(theta)") {
    const double theta = 0.5;
    ThetaVacuum vac = vacuum_closed_pair(theta, 18);
    const StateVector& state = vac.mode_states[0];
    Operator A = a_theta_closed(theta, state.space);
    CHECK(apply(A, state).amplitudes.norm() < 1e-12);
}

TEST_CASE("overlap closed form and mode-count decay") {
    const int cutoff = 30;
    double measured = per_mode_overlap(0.3, 0.8, cutoff);
    CHECK(measured == doctest::Approx(1.0 / std::cosh(0.5)).epsilon(1e-10));
    CHECK(measured == doctest::Approx(0.88681888397007400).epsilon(1e-10));

    // K-mode product decays exponentially in K
    std::vector<OverlapPoint> scan = overlap_scan(0.3, 0.8, 100, cutoff);
    REQUIRE(scan.size() == 100);
    CHECK(scan[0].overlap_abs == doctest::Approx(measured).epsilon(1e-12));
    CHECK(scan[99].overlap_abs == doctest::Approx(std::pow(measured, 100)).epsilon(1e-10));
    CHECK(scan[99].overlap_abs < 1e-4);
}

TEST_CASE("entropy expectation matches the closed form") {
    const double theta = 0.5;
    ThetaVacuum vac = vacuum_closed_pair(theta, 25);
    double S = entropy_expectation(vac, Sector::A);
    double c2 = std::cosh(theta) * std::cosh(theta);
    double s2 = std::sinh(theta) * std::sinh(theta);
    CHECK(entropy_closed_form(theta) ==
          doctest::Approx(c2 * std::log(c2) - s2 * std::log(s2)).epsilon(1e-14));
    CHECK(S == doctest::Approx(entropy_closed_form(theta)).epsilon(1e-10));
    CHECK(S == doctest::Approx(0.65945295916803640).epsilon(1e-8));

    // sector symmetry: pure state, S_A = S_B
    CHECK(entropy_expectation(vac, Sector::B) == doctest::Approx(S).epsilon(1e-12));

    // equals the entanglement entropy of the reduced state
    double vn = von_neumann_entropy(partial_trace(vac.mode_states[0], {0}));
    CHECK(std::abs(S - vn) < 1e-8);
}

TEST_CASE("entropy operator rejects theta = 0 but the limit is 0") {
    SpaceDescriptor space = two_mode_space(10);
    CHECK_THROWS(entropy_operator(0.0, space, Sector::A));
    // the expectation vanishes smoothly as theta -> 0
    ThetaVacuum vac = vacuum_closed_pair(1e-4, 10);
    CHECK(entropy_expectation(vac, Sector::A) < 2e-3);
}

TEST_CASE("entropy gradient relation") {
    EntropyGradientResult r40 = entropy_gradient_relation(0.5, 40);
    CHECK(r40.residual_fd < 1e-6);
    CHECK(r40.residual_generator < 1e-6);

    EntropyGradientResult r60 = entropy_gradient_relation(1.0, 60);
    CHECK(r60.residual_fd < 1e-5);
}

TEST_CASE("free energy stationarity gives the Bose distribution") {
    for (auto [beta, omega] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {2.0, 0.3}}) {
        double theta_star = stationary_theta(beta, omega);
        double s2 = std::sinh(theta_star) * std::sinh(theta_star);
        CHECK(s2 == doctest::Approx(bose_occupancy(beta, omega)).epsilon(1e-10));
    }
    // beta = omega = 1: sinh^2 theta* = 1/(e - 1)
    double theta_star = stationary_theta(1.0, 1.0);
    CHECK(std::sinh(theta_star) * std::sinh(theta_star) ==
          doctest::Approx(0.58197670686932642).epsilon(1e-10));

    // the stationary point is a minimum
    double h = 1e-4;
    double d2 = (free_energy(theta_star + h, 1.0, 1.0) - 2.0 * free_energy(theta_star, 1.0, 1.0) +
                 free_energy(theta_star - h, 1.0, 1.0)) / (h * h);
    CHECK(d2 > 0.0);
    CHECK(std::abs(free_energy_gradient(theta_star, 1.0, 1.0)) < 1e-10);
}

TEST_CASE("weight distribution") {
    const double theta = 0.5;
    WeightDistribution dist = weights({theta}, 50);

    double t2 = std::tanh(theta) * std::tanh(theta);
    double c2 = std::cosh(theta) * std::cosh(theta);
    CHECK(dist.weight(0) == doctest::Approx(1.0 / c2).epsilon(1e-13));
    CHECK(dist.weight(0) == doctest::Approx(0.78644773296592750).epsilon(1e-10));
    CHECK(dist.weight(1) == doctest::Approx(t2 / c2).epsilon(1e-13));
    CHECK(dist.weight(1) == doctest::Approx(0.16794769627868075).epsilon(1e-9));

    for (int n = 0; n < 50; ++n)
        CHECK(dist.weight(n + 1) / dist.weight(n) == doctest::Approx(t2).epsilon(1e-13));

    CHECK(std::abs(1.0 - dist.partial_sum() - dist.tail()) < 1e-13);
    CHECK(dist.partial_sum() == doctest::Approx(1.0).epsilon(1e-12));

    // multi-mode weights factorize
    WeightDistribution two = weights({0.5, 0.3}, 20);
    WeightDistribution lone = weights({0.3}, 20);
    CHECK(two.weight({2, 3}) == doctest::Approx(dist.weight(2) * lone.weight(3)).epsilon(1e-13));

    // theta = 0 degenerates to W_0 = 1
    WeightDistribution zero = weights({0.0}, 10);
    CHECK(zero.weight(0) == doctest::Approx(1.0));
    CHECK(zero.weight(1) == doctest::Approx(0.0));
}

TEST_CASE("four-mode vacuum structure") {
    const double theta = 0.5;
    const int cutoff = 6;
    ThetaVacuum vac = vacuum_four_mode(theta, cutoff);
    const StateVector& state = vac.mode_states[0];
    const SpaceDescriptor& space = state.space;
    REQUIRE(space.factors.size() == 4);

    double c2 = std::cosh(theta) * std::cosh(theta);
    double t = std::tanh(theta);
    // occupations (j, l, l, j) carry amplitude t^{j+l} / cosh^2, up to the
    // truncation renormalization; ratios are exact
    double a0 = std::abs(state.amplitudes(space.flat_index({0, 0, 0, 0})));
    CHECK(a0 == doctest::Approx(1.0 / c2).epsilon(1e-4));
    CHECK(std::abs(state.amplitudes(space.flat_index({1, 0, 0, 1}))) / a0 ==
          doctest::Approx(t).epsilon(1e-12));
    CHECK(std::abs(state.amplitudes(space.flat_index({0, 1, 1, 0}))) / a0 ==
          doctest::Approx(t).epsilon(1e-12));
    CHECK(std::abs(state.amplitudes(space.flat_index({2, 1, 1, 2}))) / a0 ==
          doctest::Approx(t * t * t).epsilon(1e-12));
    // anything off the pairing pattern vanishes
    CHECK(std::abs(state.amplitudes(space.flat_index({1, 0, 1, 0}))) < 1e-15);
}

TEST_CASE("entanglement report") {
    const double theta = 0.5;
    ThetaVacuum vac = vacuum_four_mode(theta, 10);
    EntanglementReport report = entanglement_report(vac, 6);
    REQUIRE(report.sectors.size() == 7);

    double t2 = std::tanh(theta) * std::tanh(theta);
    double c4 = std::pow(std::cosh(theta), 4.0);
    for (const SectorReport& s : report.sectors) {
        CHECK(s.expected_weight ==
              doctest::Approx((s.n + 1) * std::pow(t2, s.n) / c4).epsilon(1e-12));
        CHECK(s.sector_weight == doctest::Approx(s.expected_weight).epsilon(1e-6));
        CHECK(s.schmidt_rank == s.n + 1);
    }
    // n-sector with maximally mixed Schmidt spectrum: reduced entropy ln(n+1)
    CHECK(report.sectors[1].reduced_entropy == doctest::Approx(std::log(2.0)).epsilon(1e-8));

    // total entropy across the charge split is twice the per-pair value
    CHECK(report.total_reduced_entropy ==
          doctest::Approx(2.0 * entropy_closed_form(theta)).epsilon(1e-6));
}
