#ifndef QHOPF_HOPF_HPP
#define QHOPF_HOPF_HPP

#include <string>

#include "qhopf/fock.hpp"

namespace qhopf {

// Deformation parameter q, either real positive (q = e^{2 theta}) or of
// unit modulus. theta is meaningful only in the real-positive case.
struct DeformationParameter {
    Complex q{1.0, 0.0};
    double theta = 0.0;

    static DeformationParameter from_theta(double theta);
    static DeformationParameter from_q(Complex q);
    bool is_real() const { return q.imag() == 0.0 && q.real() > 0.0; }
};

// [x]_q = (q^x - q^{-x}) / (q - q^{-1}), with the q -> 1 limit x.
Complex q_number(double x, const DeformationParameter& q);
double q_number_real(double x, const DeformationParameter& q);

// Generators {a, a^dag, N, H} realized on a Fock space, with the central
// value h of H in this representation.
struct AlgebraRealization {
    SpaceDescriptor space;
    Operator a, a_dag, N, H;
    double h = 0.5;
};

// Fundamental representation: h = 1/2, Casimir 0; the deformed and
// undeformed oscillators coincide here.
AlgebraRealization fundamental_realization(const SpaceDescriptor& space,
                                           const std::string& label);

// C = 2NH - a^dag a
Operator casimir(const AlgebraRealization& realization);
// C_q = N [2H]_q - a_q^dag a_q (H central, so [2H]_q is the scalar [2h]_q)
Operator casimir_deformed(const AlgebraRealization& realization,
                          const DeformationParameter& q);

enum class Generator { A, ADag, H, N };

// Two identical single-mode factors, labels "1" and "2".
SpaceDescriptor two_mode_space(int cutoff);

// Primitive coproduct O x 1 + 1 x O on a two-factor space.
Operator coproduct_primitive(Generator g, const SpaceDescriptor& two_factor_space);

// Deformed coproduct on the fundamental two-mode space:
//   a_1 q^{1/2} + q^{-1/2} a_2  (and the creation partner).
Operator coproduct_deformed_a(const DeformationParameter& q,
                              const SpaceDescriptor& two_factor_space);
Operator coproduct_deformed_a_dag(const DeformationParameter& q,
                                  const SpaceDescriptor& two_factor_space);

}  // namespace qhopf

#endif
