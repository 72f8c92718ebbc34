#include "qhopf/bogoliubov.hpp"

#include <cmath>
#include <stdexcept>

namespace qhopf {

namespace {

void require_two_factors(const SpaceDescriptor& space, const char* what) {
    if (space.factors.size() != 2 ||
        space.factors[0].cutoff != space.factors[1].cutoff)
        throw std::invalid_argument(std::string(what) +
                                    ": need a two-factor space with equal cutoffs");
}

double inv_sqrt_two_q(double theta) {
    double two_q = 2.0 * std::cosh(2.0 * theta);  // [2]_{q(theta)}, q = e^{2 theta}
    return 1.0 / std::sqrt(two_q);
}

}  // namespace

Operator alpha_q(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "alpha_q");
    Operator a1 = annihilator(space, space.factors[0].label);
    Operator a2 = annihilator(space, space.factors[1].label);
    return inv_sqrt_two_q(theta) * (std::exp(theta) * a1 + std::exp(-theta) * a2);
}

Operator beta_q(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "beta_q");
    Operator a1 = annihilator(space, space.factors[0].label);
    Operator a2 = annihilator(space, space.factors[1].label);
    return inv_sqrt_two_q(theta) * (std::exp(theta) * a1 - std::exp(-theta) * a2);
}

Operator alpha(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "alpha");
    // [2]_{q(theta)} = [2]_{q(-theta)}, so a single prefactor works for both legs.
    double pref = 1.0 / (inv_sqrt_two_q(theta) * 2.0 * std::sqrt(2.0));
    return pref * (alpha_q(theta, space) + alpha_q(-theta, space) -
                   twisted_adjoint(beta_q(theta, space)) +
                   twisted_adjoint(beta_q(-theta, space)));
}

Operator beta(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "beta");
    double pref = 1.0 / (inv_sqrt_two_q(theta) * 2.0 * std::sqrt(2.0));
    return pref * (beta_q(theta, space) + beta_q(-theta, space) -
                   twisted_adjoint(alpha_q(theta, space)) +
                   twisted_adjoint(alpha_q(-theta, space)));
}

Operator pair_generator(const SpaceDescriptor& space) {
    require_two_factors(space, "pair_generator");
    Operator A = annihilator(space, space.factors[0].label);
    Operator B = annihilator(space, space.factors[1].label);
    return Complex(0.0, -1.0) * (adjoint(A) * adjoint(B) - A * B);
}

Operator a_theta_closed(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "a_theta_closed");
    Operator A = annihilator(space, space.factors[0].label);
    Operator B = annihilator(space, space.factors[1].label);
    return std::cosh(theta) * A - std::sinh(theta) * adjoint(B);
}

Operator b_theta_closed(double theta, const SpaceDescriptor& space) {
    require_two_factors(space, "b_theta_closed");
    Operator A = annihilator(space, space.factors[0].label);
    Operator B = annihilator(space, space.factors[1].label);
    return std::cosh(theta) * B - std::sinh(theta) * adjoint(A);
}

BogoliubovPair make_pair(double theta, const SpaceDescriptor& space,
                         double form_tolerance) {
    Operator al = alpha(theta, space);
    Operator be = beta(theta, space);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Operator A_comb = inv_sqrt2 * (al + be);
    Operator B_comb = inv_sqrt2 * (al - be);

    double dev_a = max_abs((A_comb - a_theta_closed(theta, space)).matrix);
    double dev_b = max_abs((B_comb - b_theta_closed(theta, space)).matrix);
    if (dev_a > form_tolerance || dev_b > form_tolerance)
        throw std::runtime_error(
            "make_pair: combination and closed Bogoliubov forms disagree "
            "(twisted-adjoint implementation bug)");

    return {theta, A_comb, B_comb, pair_generator(space)};
}

BogoliubovPair translate(const BogoliubovPair& pair, double theta_bar) {
    const SpaceDescriptor& space = pair.generator_G.space;
    Operator U = matrix_exp(Complex(0.0, theta_bar) * pair.generator_G);
    Matrix Ud = U.matrix.adjoint();  // G Hermitian, so exp(i tb G) is unitary
    return {pair.theta + theta_bar,
            {space, U.matrix * pair.A_theta.matrix * Ud},
            {space, U.matrix * pair.B_theta.matrix * Ud},
            pair.generator_G};
}

double translation_residual(const BogoliubovPair& pair, double theta_bar, int max_occ) {
    BogoliubovPair moved = translate(pair, theta_bar);
    Operator target = a_theta_closed(pair.theta + theta_bar, pair.generator_G.space);
    return subblock_max_abs(moved.A_theta - target, max_occ);
}

double generator_fd_residual(double theta, const SpaceDescriptor& space,
                             double step, int max_occ) {
    Operator Ap = a_theta_closed(theta + step, space);
    Operator Am = a_theta_closed(theta - step, space);
    Operator fd = (Complex(0.0, -1.0) / (2.0 * step)) * (Ap - Am);
    Operator comm = commutator(pair_generator(space), a_theta_closed(theta, space));
    return subblock_max_abs(fd - comm, max_occ);
}

}  // namespace qhopf
