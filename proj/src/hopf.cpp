#include "qhopf/hopf.hpp"

#include <cmath>
#include <stdexcept>

namespace qhopf {

DeformationParameter DeformationParameter::from_theta(double theta) {
    return {Complex(std::exp(2.0 * theta), 0.0), theta};
}

DeformationParameter DeformationParameter::from_q(Complex q) {
    bool real_positive = q.imag() == 0.0 && q.real() > 0.0;
    bool unit_modulus = std::abs(std::abs(q) - 1.0) < 1e-12;
    if (!real_positive && !unit_modulus)
        throw std::invalid_argument("DeformationParameter: q must be real positive or of modulus one");
    double theta = real_positive ? 0.5 * std::log(q.real()) : 0.0;
    return {q, theta};
}

Complex q_number(double x, const DeformationParameter& q) {
    if (std::abs(q.q - Complex(1.0)) < 1e-12) return Complex(x, 0.0);
    Complex qx = std::pow(q.q, x);
    return (qx - 1.0 / qx) / (q.q - 1.0 / q.q);
}

double q_number_real(double x, const DeformationParameter& q) {
    if (!q.is_real())
        throw std::invalid_argument("q_number_real: q is not real positive");
    return q_number(x, q).real();
}

AlgebraRealization fundamental_realization(const SpaceDescriptor& space,
                                           const std::string& label) {
    AlgebraRealization r;
    r.space = space;
    r.a = annihilator(space, label);
    r.a_dag = adjoint(r.a);
    r.N = r.a_dag * r.a;
    r.H = 0.5 * identity_op(space);
    r.h = 0.5;
    return r;
}

Operator casimir(const AlgebraRealization& r) {
    return 2.0 * (r.N * r.H) - r.a_dag * r.a;
}

Operator casimir_deformed(const AlgebraRealization& r, const DeformationParameter& q) {
    // H is central: [2H]_q acts as the scalar [2h]_q.
    Complex two_h_q = q_number(2.0 * r.h, q);
    return two_h_q * r.N - r.a_dag * r.a;
}

SpaceDescriptor two_mode_space(int cutoff) {
    return make_space({{"1", cutoff}, {"2", cutoff}});
}

Operator coproduct_primitive(Generator g, const SpaceDescriptor& space) {
    if (space.factors.size() != 2)
        throw std::invalid_argument("coproduct_primitive: space must have two factors");
    auto leg = [&](int pos) -> Operator {
        const std::string& label = space.factors[pos].label;
        switch (g) {
            case Generator::A: return annihilator(space, label);
            case Generator::ADag: return creator(space, label);
            case Generator::N: return number_op(space, label);
            case Generator::H: return 0.5 * identity_op(space);
        }
        throw std::invalid_argument("coproduct_primitive: unknown generator");
    };
    if (g == Generator::H) return identity_op(space);  // (1/2 x 1) + (1 x 1/2) = 1
    return leg(0) + leg(1);
}

Operator coproduct_deformed_a(const DeformationParameter& q, const SpaceDescriptor& space) {
    if (space.factors.size() != 2)
        throw std::invalid_argument("coproduct_deformed_a: space must have two factors");
    Complex qh = std::pow(q.q, 0.5);
    Operator a1 = annihilator(space, space.factors[0].label);
    Operator a2 = annihilator(space, space.factors[1].label);
    return qh * a1 + (1.0 / qh) * a2;
}

Operator coproduct_deformed_a_dag(const DeformationParameter& q, const SpaceDescriptor& space) {
    if (space.factors.size() != 2)
        throw std::invalid_argument("coproduct_deformed_a_dag: space must have two factors");
    Complex qh = std::pow(q.q, 0.5);
    Operator c1 = creator(space, space.factors[0].label);
    Operator c2 = creator(space, space.factors[1].label);
    return qh * c1 + (1.0 / qh) * c2;
}

}  // namespace qhopf
