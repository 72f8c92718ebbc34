#ifndef QHOPF_FOCK_HPP
#define QHOPF_FOCK_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qhopf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Ordered list of bosonic modes with per-mode truncation cutoffs.
// Factor i with cutoff n_max holds states |0>..|n_max>, dimension n_max+1.
// Tensor indices are row-major over factors in declaration order: the flat
// index of occupations (n_0,...,n_{F-1}) is n_0*d_1*...*d_{F-1} + ... + n_{F-1}.
struct SpaceDescriptor {
    struct Factor {
        std::string label;
        int cutoff = 0;  // highest kept occupation, >= 1
    };

    std::vector<Factor> factors;
    long total_dim = 1;

    int factor_index(const std::string& label) const;
    int dim(int factor) const { return factors[factor].cutoff + 1; }

    long flat_index(const std::vector<int>& occupations) const;
    std::vector<int> occupations(long flat) const;

    bool operator==(const SpaceDescriptor& other) const;
    bool operator!=(const SpaceDescriptor& other) const { return !(*this == other); }
};

SpaceDescriptor make_space(const std::vector<std::pair<std::string, int>>& modes);

struct Operator {
    SpaceDescriptor space;
    Matrix matrix;
};

struct StateVector {
    SpaceDescriptor space;
    Vector amplitudes;
    bool normalized = false;
};

struct DensityMatrix {
    SpaceDescriptor space;
    Matrix matrix;
};

// Elementary operators ---------------------------------------------------

Operator identity_op(const SpaceDescriptor& space);
// a|n> = sqrt(n)|n-1> on the named factor, identity elsewhere.
Operator annihilator(const SpaceDescriptor& space, const std::string& label);
Operator creator(const SpaceDescriptor& space, const std::string& label);
Operator number_op(const SpaceDescriptor& space, const std::string& label);

Operator adjoint(const Operator& op);
// Swap . op^dagger . Swap on a two-factor space with equal cutoffs.
Operator twisted_adjoint(const Operator& op);

// Kronecker embedding of a single-factor operator at factor_position,
// identities on all other factors.
Operator embed(const Operator& op, const SpaceDescriptor& space, int factor_position);

// Algebra ----------------------------------------------------------------

Operator operator+(const Operator& x, const Operator& y);
Operator operator-(const Operator& x, const Operator& y);
Operator operator*(const Operator& x, const Operator& y);
Operator operator*(Complex c, const Operator& op);
Operator operator*(double c, const Operator& op);

Operator commutator(const Operator& x, const Operator& y);

// Scaling-and-squaring with an adaptive Taylor kernel.
Operator matrix_exp(const Operator& op);

StateVector apply(const Operator& op, const StateVector& state);
// exp(op)|state> by substepped Taylor summation on the vector; avoids
// forming the dense exponential.
StateVector apply_exp(const Operator& op, const StateVector& state);

Complex inner(const StateVector& x, const StateVector& y);  // conjugate-linear in x
Complex expectation(const StateVector& state, const Operator& op);
StateVector normalize(StateVector state);

// Density matrices and entropy -------------------------------------------

DensityMatrix density_matrix(const StateVector& state);
// Validates Hermiticity, unit trace and positive semidefiniteness.
DensityMatrix make_density_matrix(const SpaceDescriptor& space, Matrix m);

DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<int>& keep_factors);
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep_factors);

// -sum lambda ln lambda; eigenvalues below 1e-14 are clamped to 0.
double von_neumann_entropy(const DensityMatrix& dm);

// Diagnostics ------------------------------------------------------------

// Max |entry| over rows and columns whose occupations are all <= max_occ.
double subblock_max_abs(const Operator& op, int max_occ);
// Infinity norm (max row sum) of the same restriction.
double subblock_inf_norm(const Operator& op, int max_occ);
double max_abs(const Matrix& m);

// Discarded pair weight sum_{n>cutoff} tanh^{2n}(theta)/cosh^2(theta),
// equal to tanh^{2(cutoff+1)}(theta).
double truncation_tail(double theta, int cutoff);
// Smallest cutoff with truncation_tail < eps (clamped to [4, 200]).
int cutoff_for_tail(double theta, double eps);

}  // namespace qhopf

#endif
