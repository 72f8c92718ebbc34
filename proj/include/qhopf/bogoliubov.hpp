#ifndef QHOPF_BOGOLIUBOV_HPP
#define QHOPF_BOGOLIUBOV_HPP

#include "qhopf/fock.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

// Canonical Bogoliubov pair on a two-factor space (A = a_1, B = a_2):
//   A(theta) = A cosh(theta) - B^dag sinh(theta)
//   B(theta) = B cosh(theta) - A^dag sinh(theta)
// together with the generator G = -i (A^dag B^dag - A B).
struct BogoliubovPair {
    double theta = 0.0;
    Operator A_theta, B_theta;
    Operator generator_G;
};

// alpha_q = Delta a_q / sqrt([2]_q) = (e^theta a_1 + e^{-theta} a_2) / sqrt([2]_q)
Operator alpha_q(double theta, const SpaceDescriptor& two_factor_space);
// beta_q = (1/sqrt([2]_q)) d/dtheta Delta a_q = (e^theta a_1 - e^{-theta} a_2) / sqrt([2]_q)
// (theta-derivative of the numerator, normalization applied afterwards)
Operator beta_q(double theta, const SpaceDescriptor& two_factor_space);

// Canonical pair built from the deformed-coproduct combinations, with the
// daggers taken as twisted adjoints (adjoint composed with factor swap).
Operator alpha(double theta, const SpaceDescriptor& two_factor_space);
Operator beta(double theta, const SpaceDescriptor& two_factor_space);

Operator pair_generator(const SpaceDescriptor& two_factor_space);

// Closed Bogoliubov forms, used as the cross-check target.
Operator a_theta_closed(double theta, const SpaceDescriptor& two_factor_space);
Operator b_theta_closed(double theta, const SpaceDescriptor& two_factor_space);

// Builds A(theta), B(theta) from the combination form and verifies it equals
// the closed cosh/sinh form within form_tolerance (throws on disagreement,
// which signals a twisted-adjoint bug).
BogoliubovPair make_pair(double theta, const SpaceDescriptor& two_factor_space,
                         double form_tolerance = 1e-12);

// exp(i theta_bar G) A(theta) exp(-i theta_bar G) -> A(theta + theta_bar).
BogoliubovPair translate(const BogoliubovPair& pair, double theta_bar);

// Max-abs deviation of the translated pair from make_pair(theta + theta_bar)
// on the sub-block with occupations <= max_occ.
double translation_residual(const BogoliubovPair& pair, double theta_bar, int max_occ);

// Max-abs of -i dA/dtheta (central difference, given step) minus [G, A(theta)]
// on the sub-block with occupations <= max_occ.
double generator_fd_residual(double theta, const SpaceDescriptor& two_factor_space,
                             double step, int max_occ);

}  // namespace qhopf

#endif
