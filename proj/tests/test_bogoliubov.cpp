#include <cmath>

#include <doctest.h>

#include "qhopf/bogoliubov.hpp"

using namespace qhopf;

TEST_CASE("alpha_q and beta_q leg weights") {
    const double theta = 0.5;
    SpaceDescriptor space = two_mode_space(8);
    DeformationParameter q = DeformationParameter::from_theta(theta);
    double norm = std::sqrt(q_number_real(2.0, q));

    Operator al = alpha_q(theta, space);
    long c = space.flat_index({1, 1});
    CHECK(std::abs(al.matrix(space.flat_index({0, 1}), c) - Complex(std::exp(theta) / norm)) < 1e-14);
    CHECK(std::abs(al.matrix(space.flat_index({1, 0}), c) - Complex(std::exp(-theta) / norm)) < 1e-14);

    Operator be = beta_q(theta, space);
    CHECK(std::abs(be.matrix(space.flat_index({0, 1}), c) - Complex(std::exp(theta) / norm)) < 1e-14);
    CHECK(std::abs(be.matrix(space.flat_index({1, 0}), c) - Complex(-std::exp(-theta) / norm)) < 1e-14);
}

TEST_CASE("combination equals closed cosh/sinh form") {
    const int cutoff = 14;
    SpaceDescriptor space = two_mode_space(cutoff);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (double theta : {0.0, 0.25, -0.5, 1.0}) {
        Operator al = alpha(theta, space);
        Operator be = beta(theta, space);
        Operator A_comb = inv_sqrt2 * (al + be);
        Operator B_comb = inv_sqrt2 * (al - be);
        CHECK(max_abs((A_comb - a_theta_closed(theta, space)).matrix) < 1e-13);
        CHECK(max_abs((B_comb - b_theta_closed(theta, space)).matrix) < 1e-13);
    }
}

TEST_CASE("closed form matrix elements at theta = 0.5") {
    const double theta = 0.5;
    SpaceDescriptor space = two_mode_space(6);
    Operator A = a_theta_closed(theta, space);

    // A(theta) = a_1 cosh - a_2^dag sinh
    long c = space.flat_index({1, 0});
    CHECK(std::abs(A.matrix(space.flat_index({0, 0}), c) - Complex(std::cosh(theta))) < 1e-14);
    CHECK(std::abs(A.matrix(space.flat_index({1, 1}), c) - Complex(-std::sinh(theta))) < 1e-14);
}

TEST_CASE("canonical pair relations") {
    const int cutoff = 14;
    SpaceDescriptor space = two_mode_space(cutoff);
    for (double theta : {0.25, -0.5, 1.0}) {
        BogoliubovPair pair = make_pair(theta, space);
        Operator I = identity_op(space);
        CHECK(subblock_inf_norm(commutator(pair.A_theta, adjoint(pair.A_theta)) - I, cutoff - 2) < 1e-12);
        CHECK(subblock_inf_norm(commutator(pair.B_theta, adjoint(pair.B_theta)) - I, cutoff - 2) < 1e-12);
        CHECK(subblock_inf_norm(commutator(pair.A_theta, pair.B_theta), cutoff - 2) < 1e-12);
        CHECK(subblock_inf_norm(commutator(pair.A_theta, adjoint(pair.B_theta)), cutoff - 2) < 1e-12);
    }
}

TEST_CASE("generator is Hermitian and reproduces the theta-derivative") {
    SpaceDescriptor space = two_mode_space(16);
    Operator G = pair_generator(space);
    CHECK(max_abs((G - adjoint(G)).matrix) < 1e-14);

    CHECK(generator_fd_residual(0.5, space, 1e-5, 14) < 1e-8);
    CHECK(generator_fd_residual(-0.3, space, 1e-5, 14) < 1e-8);
}

TEST_CASE("translation moves theta additively") {
    const int cutoff = 24;
    SpaceDescriptor space = two_mode_space(cutoff);
    BogoliubovPair pair = make_pair(0.2, space);
    CHECK(translation_residual(pair, 0.3, cutoff / 3) < 1e-6);

    // group property: translating by 0 is exact
    CHECK(translation_residual(pair, 0.0, cutoff / 3) < 1e-12);
}

TEST_CASE("two translations compose") {
    const int cutoff = 24;
    SpaceDescriptor space = two_mode_space(cutoff);
    BogoliubovPair pair = make_pair(0.1, space);
    BogoliubovPair once = translate(translate(pair, 0.15), 0.1);
    BogoliubovPair direct = make_pair(0.35, space);
    CHECK(subblock_max_abs(once.A_theta - direct.A_theta, cutoff / 3) < 1e-6);
}

TEST_CASE("make_pair rejects a broken form tolerance") {
    SpaceDescriptor space = two_mode_space(8);
    CHECK_THROWS(make_pair(0.5, space, 1e-30));
}
