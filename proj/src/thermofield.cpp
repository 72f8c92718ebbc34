#include "qhopf/thermofield.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace qhopf {

namespace {

SpaceDescriptor pair_space(const std::string& mode_label, int cutoff) {
    return make_space({{mode_label + ":A", cutoff}, {mode_label + ":B", cutoff}});
}

StateVector fock_vacuum(const SpaceDescriptor& space) {
    Vector v = Vector::Zero(space.total_dim);
    v(0) = 1.0;
    return {space, v, true};
}

void require_mode_match(const ThetaVacuum& a, const ThetaVacuum& b) {
    if (a.mode_states.size() != b.mode_states.size())
        throw std::invalid_argument("overlap: vacua have different mode counts");
    for (size_t k = 0; k < a.mode_states.size(); ++k)
        if (a.mode_states[k].space != b.mode_states[k].space)
            throw std::invalid_argument("overlap: per-mode space layouts differ");
}

}  // namespace

ThetaVacuum vacuum_exponential(const std::vector<ModeSpec>& modes,
                               const std::vector<int>& cutoffs) {
    if (modes.size() != cutoffs.size())
        throw std::invalid_argument("vacuum_exponential: one cutoff per mode required");
    ThetaVacuum vac;
    vac.modes = modes;
    vac.construction = VacuumConstruction::ExponentialMap;
    for (size_t k = 0; k < modes.size(); ++k) {
        SpaceDescriptor space = pair_space(modes[k].label, cutoffs[k]);
        // i theta G = theta (A^dag B^dag - A B)
        Operator G = pair_generator(space);
        Operator K = Complex(0.0, modes[k].theta) * G;
        vac.mode_states.push_back(normalize(apply_exp(K, fock_vacuum(space))));
    }
    return vac;
}

ThetaVacuum vacuum_exponential(double theta, int cutoff) {
    return vacuum_exponential({{"k", 1.0, theta}}, {cutoff});
}

ThetaVacuum vacuum_closed_pair(const std::vector<ModeSpec>& modes,
                               const std::vector<int>& cutoffs) {
    if (modes.size() != cutoffs.size())
        throw std::invalid_argument("vacuum_closed_pair: one cutoff per mode required");
    ThetaVacuum vac;
    vac.modes = modes;
    vac.construction = VacuumConstruction::ClosedForm;
    for (size_t k = 0; k < modes.size(); ++k) {
        SpaceDescriptor space = pair_space(modes[k].label, cutoffs[k]);
        double t = std::tanh(modes[k].theta);
        double c = std::cosh(modes[k].theta);
        Vector v = Vector::Zero(space.total_dim);
        for (int n = 0; n <= cutoffs[k]; ++n)
            v(space.flat_index({n, n})) = std::pow(t, n) / c;
        vac.mode_states.push_back(normalize({space, std::move(v), false}));
    }
    return vac;
}

ThetaVacuum vacuum_closed_pair(double theta, int cutoff) {
    return vacuum_closed_pair({{"k", 1.0, theta}}, {cutoff});
}

ThetaVacuum vacuum_four_mode(double theta, int cutoff) {
    SpaceDescriptor space = make_space(
        {{"A+", cutoff}, {"Abar+", cutoff}, {"A-", cutoff}, {"Abar-", cutoff}});
    double t = std::tanh(theta);
    double c2 = std::cosh(theta) * std::cosh(theta);
    Vector v = Vector::Zero(space.total_dim);
    // Channels (A+, Abar-) and (A-, Abar+): occupations (j, l, l, j).
    for (int j = 0; j <= cutoff; ++j)
        for (int l = 0; l <= cutoff; ++l)
            v(space.flat_index({j, l, l, j})) = std::pow(t, j + l) / c2;
    ThetaVacuum vac;
    vac.modes = {{"k", 1.0, theta}};
    vac.construction = VacuumConstruction::ClosedForm;
    vac.mode_states.push_back(normalize({space, std::move(v), false}));
    return vac;
}

Complex overlap(const ThetaVacuum& a, const ThetaVacuum& b) {
    require_mode_match(a, b);
    Complex result(1.0, 0.0);
    for (size_t k = 0; k < a.mode_states.size(); ++k)
        result *= inner(a.mode_states[k], b.mode_states[k]);
    return result;
}

double per_mode_overlap(double theta, double theta_prime, int cutoff) {
    ThetaVacuum va = vacuum_closed_pair(theta, cutoff);
    ThetaVacuum vb = vacuum_closed_pair(theta_prime, cutoff);
    return std::abs(overlap(va, vb));
}

std::vector<OverlapPoint> overlap_scan(double theta, double theta_prime, int K_max,
                                       int cutoff) {
    double per_mode = per_mode_overlap(theta, theta_prime, cutoff);
    std::vector<OverlapPoint> points;
    points.reserve(K_max);
    for (int K = 1; K <= K_max; ++K)
        points.push_back({K, std::pow(per_mode, K)});
    return points;
}

Operator entropy_operator(double theta, const SpaceDescriptor& space, Sector sector) {
    if (space.factors.size() != 2)
        throw std::invalid_argument("entropy_operator: space must have two factors");
    if (theta == 0.0)
        throw std::invalid_argument(
            "entropy_operator: theta = 0 is degenerate (ln sinh^2 diverges); "
            "use the closed-form limit instead");
    const std::string& label =
        sector == Sector::A ? space.factors[0].label : space.factors[1].label;
    Operator a = annihilator(space, label);
    Operator ad = adjoint(a);
    double s2 = std::sinh(theta) * std::sinh(theta);
    double c2 = std::cosh(theta) * std::cosh(theta);
    return -1.0 * (std::log(s2) * (ad * a) - std::log(c2) * (a * ad));
}

double entropy_expectation(const ThetaVacuum& vacuum, Sector sector) {
    double total = 0.0;
    for (size_t k = 0; k < vacuum.mode_states.size(); ++k) {
        const StateVector& state = vacuum.mode_states[k];
        if (state.space.factors.size() != 2)
            throw std::invalid_argument(
                "entropy_expectation: only pair-structure vacua are supported");
        Operator S = entropy_operator(vacuum.modes[k].theta, state.space, sector);
        total += expectation(state, S).real();
    }
    return total;
}

double entropy_closed_form(double theta) {
    double s2 = std::sinh(theta) * std::sinh(theta);
    double c2 = std::cosh(theta) * std::cosh(theta);
    double term_s = s2 > 0.0 ? s2 * std::log(s2) : 0.0;  // x ln x -> 0
    return c2 * std::log(c2) - term_s;
}

EntropyGradientResult entropy_gradient_relation(double theta, int cutoff, double step) {
    if (theta == 0.0)
        throw std::invalid_argument("entropy_gradient_relation: theta = 0 rejected");
    StateVector vp = vacuum_closed_pair(theta + step, cutoff).mode_states[0];
    StateVector vm = vacuum_closed_pair(theta - step, cutoff).mode_states[0];
    StateVector v0 = vacuum_closed_pair(theta, cutoff).mode_states[0];
    Vector dv = (vp.amplitudes - vm.amplitudes) / (2.0 * step);

    const SpaceDescriptor& space = v0.space;
    // ladder actions on the vector directly; the dense operators would be
    // (cutoff+1)^2-dimensional and the products prohibitively large
    auto ladder = [&](int factor, bool dagger, const Vector& v) {
        long stride = 1;
        for (size_t f = factor + 1; f < space.factors.size(); ++f) stride *= space.dim(f);
        int top = space.factors[factor].cutoff;
        Vector out = Vector::Zero(v.size());
        for (long i = 0; i < v.size(); ++i) {
            int n = space.occupations(i)[factor];
            if (dagger) {
                if (n < top) out(i + stride) += std::sqrt(double(n + 1)) * v(i);
            } else {
                if (n > 0) out(i - stride) += std::sqrt(double(n)) * v(i);
            }
        }
        return out;
    };

    const Vector& v = v0.amplitudes;
    // -(1/2) dS_A/dtheta = A^dag A coth(theta) - A A^dag tanh(theta)
    Vector rhs = (1.0 / std::tanh(theta)) * ladder(0, true, ladder(0, false, v)) -
                 std::tanh(theta) * ladder(0, false, ladder(0, true, v));
    // i G = A^dag B^dag - A B
    Vector gen = ladder(0, true, ladder(1, true, v)) -
                 ladder(0, false, ladder(1, false, v));

    return {(dv - rhs).norm(), (dv - gen).norm()};
}

double free_energy(double theta, double omega, double beta) {
    if (beta <= 0.0 || omega <= 0.0)
        throw std::invalid_argument("free_energy: beta and omega must be positive");
    double s2 = std::sinh(theta) * std::sinh(theta);
    return omega * s2 - entropy_closed_form(theta) / beta;
}

double free_energy(const std::vector<ModeSpec>& modes, double beta) {
    double total = 0.0;
    for (const ModeSpec& m : modes) total += free_energy(m.theta, m.omega, beta);
    return total;
}

double free_energy_gradient(double theta, double omega, double beta) {
    if (beta <= 0.0 || omega <= 0.0)
        throw std::invalid_argument("free_energy_gradient: beta and omega must be positive");
    // dF/dtheta = sinh(2 theta) (omega - (1/beta) ln coth^2 theta)
    double sh2 = std::sinh(2.0 * theta);
    double ln_coth2 = 2.0 * std::log(1.0 / std::tanh(theta));
    return sh2 * (omega - ln_coth2 / beta);
}

double stationary_theta(double beta, double omega) {
    if (beta <= 0.0 || omega <= 0.0)
        throw std::invalid_argument("stationary_theta: beta and omega must be positive");
    double lo = 1e-8, hi = 20.0;
    if (free_energy_gradient(lo, omega, beta) > 0.0) return lo;  // deep zero-T limit
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        (free_energy_gradient(mid, omega, beta) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double bose_occupancy(double beta, double omega) {
    return 1.0 / std::expm1(beta * omega);
}

double WeightDistribution::weight(const std::vector<int>& multi_index) const {
    if (multi_index.size() != per_mode.size())
        throw std::invalid_argument("WeightDistribution: multi-index length mismatch");
    double w = 1.0;
    for (size_t k = 0; k < multi_index.size(); ++k) {
        if (multi_index[k] < 0 || multi_index[k] > n_max)
            throw std::invalid_argument("WeightDistribution: index out of range");
        w *= per_mode[k][multi_index[k]];
    }
    return w;
}

double WeightDistribution::weight(int n) const {
    if (per_mode.size() != 1)
        throw std::invalid_argument("WeightDistribution: scalar accessor needs one mode");
    return weight(std::vector<int>{n});
}

double WeightDistribution::partial_sum() const {
    if (per_mode.size() != 1)
        throw std::invalid_argument("WeightDistribution: scalar accessor needs one mode");
    double s = 0.0;
    for (double w : per_mode[0]) s += w;
    return s;
}

double WeightDistribution::tail() const { return 1.0 - partial_sum(); }

WeightDistribution weights(const std::vector<double>& theta_spectrum, int n_max) {
    if (theta_spectrum.empty() || n_max < 0)
        throw std::invalid_argument("weights: need at least one mode and n_max >= 0");
    WeightDistribution dist;
    dist.thetas = theta_spectrum;
    dist.n_max = n_max;
    for (double theta : theta_spectrum) {
        std::vector<double> row(n_max + 1, 0.0);
        if (theta == 0.0) {
            row[0] = 1.0;  // degenerate limit W_0 = 1
        } else {
            double s2 = std::sinh(theta) * std::sinh(theta);
            double c2 = std::cosh(theta) * std::cosh(theta);
            for (int n = 0; n <= n_max; ++n)
                row[n] = std::pow(s2, n) / std::pow(c2, n + 1);
        }
        dist.per_mode.push_back(std::move(row));
    }
    return dist;
}

namespace {

EntanglementReport report_pair(const StateVector& state, double theta, int n_report) {
    const SpaceDescriptor& space = state.space;
    int cutoff = space.factors[0].cutoff;
    WeightDistribution dist = weights({theta}, cutoff);
    EntanglementReport report;
    for (int n = 0; n <= std::min(n_report, cutoff); ++n) {
        double amp = std::abs(state.amplitudes(space.flat_index({n, n})));
        // each sector is the single product state |n,n>: rank 1, entropy 0
        report.sectors.push_back({n, amp * amp, dist.weight(n), 1, 0.0});
    }
    report.total_reduced_entropy = von_neumann_entropy(partial_trace(state, {0}));
    return report;
}

EntanglementReport report_four_mode(const StateVector& state, double theta,
                                    int n_report) {
    const SpaceDescriptor& space = state.space;
    int cutoff = space.factors[0].cutoff;
    double t2 = std::tanh(theta) * std::tanh(theta);
    double c2 = std::cosh(theta) * std::cosh(theta);
    EntanglementReport report;
    for (int n = 0; n <= std::min(n_report, cutoff); ++n) {
        // sector basis: channel occupations (j, l) with j + l = n; the state
        // component is amplitude(j,l) |j,l> x |l,j> across the (+)/(-) split
        int rows = n + 1;
        Matrix coeff = Matrix::Zero(rows, rows);
        for (int j = 0; j <= n; ++j) {
            int l = n - j;
            coeff(j, l) = state.amplitudes(space.flat_index({j, l, l, j}));
        }
        Eigen::JacobiSVD<Matrix> svd(coeff);
        double smax = svd.singularValues().maxCoeff();
        int rank = 0;
        double weight = 0.0, entropy = 0.0;
        for (int i = 0; i < svd.singularValues().size(); ++i) {
            double s = svd.singularValues()(i);
            if (s > 1e-12 * smax) ++rank;
            weight += s * s;
        }
        for (int i = 0; i < svd.singularValues().size(); ++i) {
            double p = svd.singularValues()(i) * svd.singularValues()(i) / weight;
            if (p > 1e-15) entropy -= p * std::log(p);
        }
        double expected = (n + 1) * std::pow(t2, n) / (c2 * c2);
        report.sectors.push_back({n, weight, expected, rank, entropy});
    }
    report.total_reduced_entropy = von_neumann_entropy(partial_trace(state, {0, 1}));
    return report;
}

}  // namespace

EntanglementReport entanglement_report(const ThetaVacuum& vacuum, int n_report) {
    if (vacuum.mode_states.size() != 1)
        throw std::invalid_argument("entanglement_report: single-mode vacua only");
    const StateVector& state = vacuum.mode_states[0];
    double theta = vacuum.modes[0].theta;
    if (state.space.factors.size() == 2) return report_pair(state, theta, n_report);
    if (state.space.factors.size() == 4) return report_four_mode(state, theta, n_report);
    throw std::invalid_argument("entanglement_report: expected a two- or four-factor state");
}

}  // namespace qhopf
