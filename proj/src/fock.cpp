#include "qhopf/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qhopf {

namespace {

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": operands live on different spaces");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix single_mode_annihilator(int cutoff) {
    Matrix a = Matrix::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

}  // namespace

int SpaceDescriptor::factor_index(const std::string& label) const {
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label == label) return int(i);
    throw std::invalid_argument("unknown mode label '" + label + "'");
}

long SpaceDescriptor::flat_index(const std::vector<int>& occupations) const {
    if (occupations.size() != factors.size())
        throw std::invalid_argument("flat_index: occupation list length mismatch");
    long idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (occupations[i] < 0 || occupations[i] > factors[i].cutoff)
            throw std::invalid_argument("flat_index: occupation out of range");
        idx = idx * dim(int(i)) + occupations[i];
    }
    return idx;
}

std::vector<int> SpaceDescriptor::occupations(long flat) const {
    std::vector<int> occ(factors.size());
    for (int i = int(factors.size()) - 1; i >= 0; --i) {
        occ[i] = int(flat % dim(i));
        flat /= dim(i);
    }
    return occ;
}

bool SpaceDescriptor::operator==(const SpaceDescriptor& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label != other.factors[i].label ||
            factors[i].cutoff != other.factors[i].cutoff)
            return false;
    return true;
}

SpaceDescriptor make_space(const std::vector<std::pair<std::string, int>>& modes) {
    if (modes.empty()) throw std::invalid_argument("make_space: no modes given");
    SpaceDescriptor space;
    std::set<std::string> seen;
    for (const auto& [label, cutoff] : modes) {
        if (cutoff < 1)
            throw std::invalid_argument("make_space: cutoff must be >= 1 for mode '" + label + "'");
        if (!seen.insert(label).second)
            throw std::invalid_argument("make_space: duplicate mode label '" + label + "'");
        space.factors.push_back({label, cutoff});
        space.total_dim *= cutoff + 1;
    }
    return space;
}

Operator identity_op(const SpaceDescriptor& space) {
    return {space, Matrix::Identity(space.total_dim, space.total_dim)};
}

Operator annihilator(const SpaceDescriptor& space, const std::string& label) {
    int pos = space.factor_index(label);
    SpaceDescriptor single = make_space({{label, space.factors[pos].cutoff}});
    Operator a{single, single_mode_annihilator(space.factors[pos].cutoff)};
    return embed(a, space, pos);
}

Operator creator(const SpaceDescriptor& space, const std::string& label) {
    return adjoint(annihilator(space, label));
}

Operator number_op(const SpaceDescriptor& space, const std::string& label) {
    Operator a = annihilator(space, label);
    return adjoint(a) * a;
}

Operator adjoint(const Operator& op) {
    return {op.space, op.matrix.adjoint()};
}

Operator twisted_adjoint(const Operator& op) {
    if (op.space.factors.size() != 2)
        throw std::invalid_argument("twisted_adjoint: space must have exactly two factors");
    if (op.space.factors[0].cutoff != op.space.factors[1].cutoff)
        throw std::invalid_argument("twisted_adjoint: factor cutoffs must be equal");
    int d = op.space.dim(0);
    // Factor-exchange permutation |n,m> -> |m,n>.
    Matrix swapped(op.space.total_dim, op.space.total_dim);
    auto sw = [d](long idx) { return (idx % d) * d + idx / d; };
    for (long i = 0; i < op.space.total_dim; ++i)
        for (long j = 0; j < op.space.total_dim; ++j)
            swapped(i, j) = op.matrix(sw(i), sw(j));
    return {op.space, swapped.adjoint()};
}

Operator embed(const Operator& op, const SpaceDescriptor& space, int factor_position) {
    if (factor_position < 0 || factor_position >= int(space.factors.size()))
        throw std::invalid_argument("embed: factor position out of range");
    if (op.space.factors.size() != 1 ||
        op.space.factors[0].cutoff != space.factors[factor_position].cutoff)
        throw std::invalid_argument("embed: operator does not match the target factor");
    long before = 1, after = 1;
    for (int i = 0; i < factor_position; ++i) before *= space.dim(i);
    for (int i = factor_position + 1; i < int(space.factors.size()); ++i) after *= space.dim(i);
    Matrix m = kron(Matrix::Identity(before, before),
                    kron(op.matrix, Matrix::Identity(after, after)));
    return {space, std::move(m)};
}

Operator operator+(const Operator& x, const Operator& y) {
    require_same_space(x.space, y.space, "operator+");
    return {x.space, x.matrix + y.matrix};
}

Operator operator-(const Operator& x, const Operator& y) {
    require_same_space(x.space, y.space, "operator-");
    return {x.space, x.matrix - y.matrix};
}

Operator operator*(const Operator& x, const Operator& y) {
    require_same_space(x.space, y.space, "operator*");
    return {x.space, x.matrix * y.matrix};
}

Operator operator*(Complex c, const Operator& op) { return {op.space, c * op.matrix}; }
Operator operator*(double c, const Operator& op) { return {op.space, c * op.matrix}; }

Operator commutator(const Operator& x, const Operator& y) {
    require_same_space(x.space, y.space, "commutator");
    return {x.space, x.matrix * y.matrix - y.matrix * x.matrix};
}

Operator matrix_exp(const Operator& op) {
    const long n = op.matrix.rows();
    double norm = 0.0;
    for (long i = 0; i < n; ++i) norm = std::max(norm, op.matrix.row(i).cwiseAbs().sum());
    int squarings = 0;
    while (norm > 0.5 && squarings < 60) {
        norm /= 2.0;
        ++squarings;
    }
    Matrix scaled = op.matrix / std::pow(2.0, squarings);
    Matrix acc = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * scaled) / double(k);
        acc += term;
        double tn = term.cwiseAbs().maxCoeff();
        if (tn < 1e-18 * std::max(1.0, acc.cwiseAbs().maxCoeff())) break;
        if (k == 40)
            throw std::runtime_error("matrix_exp: Taylor kernel failed to converge");
    }
    for (int s = 0; s < squarings; ++s) acc = acc * acc;
    return {op.space, std::move(acc)};
}

StateVector apply(const Operator& op, const StateVector& state) {
    require_same_space(op.space, state.space, "apply");
    return {state.space, op.matrix * state.amplitudes, false};
}

StateVector apply_exp(const Operator& op, const StateVector& state) {
    require_same_space(op.space, state.space, "apply_exp");
    double norm = 0.0;
    for (long i = 0; i < op.matrix.rows(); ++i)
        norm = std::max(norm, op.matrix.row(i).cwiseAbs().sum());
    int substeps = std::max(1, int(std::ceil(norm)));
    Matrix scaled = op.matrix / double(substeps);
    Vector v = state.amplitudes;
    for (int s = 0; s < substeps; ++s) {
        Vector acc = v;
        Vector term = v;
        for (int k = 1; k <= 60; ++k) {
            term = (scaled * term) / double(k);
            acc += term;
            if (term.cwiseAbs().maxCoeff() <
                1e-18 * std::max(1.0, acc.cwiseAbs().maxCoeff()))
                break;
            if (k == 60)
                throw std::runtime_error("apply_exp: Taylor series failed to converge");
        }
        v = acc;
    }
    return {state.space, std::move(v), false};
}

Complex inner(const StateVector& x, const StateVector& y) {
    require_same_space(x.space, y.space, "inner");
    return x.amplitudes.dot(y.amplitudes);  // Eigen dot conjugates the first argument
}

Complex expectation(const StateVector& state, const Operator& op) {
    require_same_space(state.space, op.space, "expectation");
    return state.amplitudes.dot(op.matrix * state.amplitudes);
}

StateVector normalize(StateVector state) {
    double n = state.amplitudes.norm();
    if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
    state.amplitudes /= n;
    state.normalized = true;
    return state;
}

DensityMatrix density_matrix(const StateVector& state) {
    Vector v = state.amplitudes;
    double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("density_matrix: zero vector");
    v /= n;
    return {state.space, v * v.adjoint()};
}

DensityMatrix make_density_matrix(const SpaceDescriptor& space, Matrix m) {
    if (m.rows() != space.total_dim || m.cols() != space.total_dim)
        throw std::invalid_argument("make_density_matrix: dimension mismatch");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("make_density_matrix: not Hermitian");
    if (std::abs(m.trace() - Complex(1.0)) > 1e-10)
        throw std::invalid_argument("make_density_matrix: trace != 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("make_density_matrix: not positive semidefinite");
    return {space, std::move(m)};
}

namespace {

std::vector<int> complement_factors(const SpaceDescriptor& space,
                                    const std::vector<int>& keep) {
    if (keep.empty())
        throw std::invalid_argument("partial_trace: keep set must be nonempty");
    std::set<int> keep_set(keep.begin(), keep.end());
    if (keep_set.size() == space.factors.size())
        throw std::invalid_argument("partial_trace: keep set must be a proper subset");
    for (int k : keep)
        if (k < 0 || k >= int(space.factors.size()))
            throw std::invalid_argument("partial_trace: factor index out of range");
    std::vector<int> traced;
    for (int i = 0; i < int(space.factors.size()); ++i)
        if (!keep_set.count(i)) traced.push_back(i);
    return traced;
}

SpaceDescriptor reduced_space(const SpaceDescriptor& space, const std::vector<int>& keep) {
    std::vector<std::pair<std::string, int>> modes;
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (int k : sorted) modes.push_back({space.factors[k].label, space.factors[k].cutoff});
    return make_space(modes);
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<int>& keep_factors) {
    std::vector<int> traced = complement_factors(dm.space, keep_factors);
    std::vector<int> keep = keep_factors;
    std::sort(keep.begin(), keep.end());
    SpaceDescriptor red = reduced_space(dm.space, keep);

    long kd = red.total_dim, td = 1;
    for (int t : traced) td *= dm.space.dim(t);

    auto full_index = [&](long ki, long ti) {
        std::vector<int> occ(dm.space.factors.size());
        std::vector<int> ko = red.occupations(ki);
        for (size_t i = 0; i < keep.size(); ++i) occ[keep[i]] = ko[i];
        long rem = ti;
        for (int i = int(traced.size()) - 1; i >= 0; --i) {
            occ[traced[i]] = int(rem % dm.space.dim(traced[i]));
            rem /= dm.space.dim(traced[i]);
        }
        return dm.space.flat_index(occ);
    };

    Matrix out = Matrix::Zero(kd, kd);
    for (long i = 0; i < kd; ++i)
        for (long j = 0; j < kd; ++j)
            for (long t = 0; t < td; ++t)
                out(i, j) += dm.matrix(full_index(i, t), full_index(j, t));
    return {red, std::move(out)};
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep_factors) {
    const SpaceDescriptor& space = state.space;
    std::vector<int> traced = complement_factors(space, keep_factors);
    std::vector<int> keep = keep_factors;
    std::sort(keep.begin(), keep.end());
    SpaceDescriptor red = reduced_space(space, keep);

    long kd = red.total_dim, td = 1;
    for (int t : traced) td *= space.dim(t);

    auto full_index = [&](long ki, long ti) {
        std::vector<int> occ(space.factors.size());
        std::vector<int> ko = red.occupations(ki);
        for (size_t i = 0; i < keep.size(); ++i) occ[keep[i]] = ko[i];
        long rem = ti;
        for (int i = int(traced.size()) - 1; i >= 0; --i) {
            occ[traced[i]] = int(rem % space.dim(traced[i]));
            rem /= space.dim(traced[i]);
        }
        return space.flat_index(occ);
    };

    // rho_keep = sum_t |psi_t><psi_t| without forming the full density matrix
    Matrix out = Matrix::Zero(kd, kd);
    Vector col(kd);
    for (long t = 0; t < td; ++t) {
        for (long i = 0; i < kd; ++i) col(i) = state.amplitudes(full_index(i, t));
        out.noalias() += col * col.adjoint();
    }
    return {red, std::move(out)};
}

double von_neumann_entropy(const DensityMatrix& dm) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(dm.matrix, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        double lambda = es.eigenvalues()(i);
        if (lambda < -1e-10)
            throw std::invalid_argument("von_neumann_entropy: input not positive semidefinite");
        if (lambda < 1e-14) continue;  // numerical PSD noise
        entropy -= lambda * std::log(lambda);
    }
    return std::max(entropy, 0.0);
}

namespace {

std::vector<long> subblock_indices(const SpaceDescriptor& space, int max_occ) {
    std::vector<long> idx;
    for (long i = 0; i < space.total_dim; ++i) {
        std::vector<int> occ = space.occupations(i);
        bool low = true;
        for (int n : occ)
            if (n > max_occ) { low = false; break; }
        if (low) idx.push_back(i);
    }
    return idx;
}

}  // namespace

double subblock_max_abs(const Operator& op, int max_occ) {
    std::vector<long> idx = subblock_indices(op.space, max_occ);
    double m = 0.0;
    for (long i : idx)
        for (long j : idx) m = std::max(m, std::abs(op.matrix(i, j)));
    return m;
}

double subblock_inf_norm(const Operator& op, int max_occ) {
    std::vector<long> idx = subblock_indices(op.space, max_occ);
    double m = 0.0;
    for (long i : idx) {
        double row = 0.0;
        for (long j : idx) row += std::abs(op.matrix(i, j));
        m = std::max(m, row);
    }
    return m;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double truncation_tail(double theta, int cutoff) {
    double t2 = std::tanh(theta) * std::tanh(theta);
    // geometric tail: sum_{n>cutoff} t2^n * (1 - t2) = t2^(cutoff+1)
    return std::pow(t2, cutoff + 1);
}

int cutoff_for_tail(double theta, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("cutoff_for_tail: eps must be positive");
    for (int n = 4; n <= 200; ++n)
        if (truncation_tail(theta, n) < eps) return n;
    return 200;
}

}  // namespace qhopf
