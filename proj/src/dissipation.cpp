#include "qhopf/dissipation.hpp"

#include <cmath>
#include <stdexcept>

namespace qhopf {

double ThetaSchedule::theta_dot_at(int step) const {
    double t = time_at(step);
    if (theta_dot) return theta_dot(t);
    if (step == 0) return (thetas.at(1) - thetas.at(0)) / dt;
    if (step == steps()) return (thetas.at(step) - thetas.at(step - 1)) / dt;
    return (thetas.at(step + 1) - thetas.at(step - 1)) / (2.0 * dt);
}

namespace {

ThetaSchedule sampled(double t0, double dt, int steps,
                      const std::function<double(double)>& theta_of_t,
                      std::function<double(double)> theta_dot) {
    if (dt <= 0.0 || steps < 1)
        throw std::invalid_argument("ThetaSchedule: need dt > 0 and steps >= 1");
    ThetaSchedule s;
    s.t0 = t0;
    s.dt = dt;
    s.theta_dot = std::move(theta_dot);
    for (int i = 0; i <= steps; ++i) s.thetas.push_back(theta_of_t(t0 + i * dt));
    return s;
}

}  // namespace

ThetaSchedule ThetaSchedule::constant(double theta, double t0, double dt, int steps) {
    return sampled(t0, dt, steps, [theta](double) { return theta; },
                   [](double) { return 0.0; });
}

ThetaSchedule ThetaSchedule::linear(double theta0, double gamma, double t0, double dt,
                                    int steps) {
    return sampled(t0, dt, steps,
                   [theta0, gamma, t0](double t) { return theta0 + gamma * (t - t0); },
                   [gamma](double) { return gamma; });
}

ThetaSchedule ThetaSchedule::bose_quasistatic(double omega, double beta_start,
                                              double beta_end, double t0, double dt,
                                              int steps) {
    if (beta_start <= 0.0 || beta_end <= 0.0)
        throw std::invalid_argument("bose_quasistatic: beta must stay positive");
    double rate = (beta_end - beta_start) / (steps * dt);
    auto theta_of_t = [=](double t) {
        return stationary_theta(beta_start + rate * (t - t0), omega);
    };
    return sampled(t0, dt, steps, theta_of_t, nullptr);
}

Operator heat_term(double theta_dot, const Operator& generator_G) {
    if (!std::isfinite(theta_dot))
        throw std::invalid_argument("heat_term: theta_dot must be finite");
    return theta_dot * generator_G;
}

namespace {

// e^{iHt} M e^{-iHt} with H diagonal (phases per basis state)
Matrix conjugate_by_phases(const Matrix& m, const Eigen::VectorXd& energies, double t) {
    Vector phases(energies.size());
    for (long i = 0; i < energies.size(); ++i)
        phases(i) = std::exp(Complex(0.0, energies(i) * t));
    return phases.asDiagonal() * m * phases.conjugate().asDiagonal();
}

}  // namespace

double heisenberg_residual(const ThetaSchedule& schedule, int step_index, double omega,
                           int cutoff, double dt_fd, int max_occ) {
    if (step_index <= 0 || step_index >= schedule.steps())
        throw std::invalid_argument("heisenberg_residual: step must be interior to the grid");
    if (max_occ < 0) max_occ = cutoff - 2;

    SpaceDescriptor space = two_mode_space(cutoff);
    Operator Na = number_op(space, "1");
    Operator Nb = number_op(space, "2");
    Operator H = omega * (Na + Nb);
    Eigen::VectorXd energies = H.matrix.diagonal().real();
    Operator G = pair_generator(space);

    double t = schedule.time_at(step_index);
    double theta = schedule.theta_at(step_index);
    double theta_dot = schedule.theta_dot_at(step_index);

    auto A_full = [&](double tt, double th) {
        return conjugate_by_phases(a_theta_closed(th, space).matrix, energies, tt);
    };

    // theta at t +/- dt_fd, interpolated linearly through theta_dot
    Matrix fd = (A_full(t + dt_fd, theta + theta_dot * dt_fd) -
                 A_full(t - dt_fd, theta - theta_dot * dt_fd)) /
                (2.0 * dt_fd);
    Matrix lhs = Complex(0.0, -1.0) * fd;

    Matrix A_now = A_full(t, theta);
    Matrix HQ = H.matrix + theta_dot * conjugate_by_phases(G.matrix, energies, t);
    Matrix rhs = HQ * A_now - A_now * HQ;

    return subblock_max_abs({space, lhs - rhs}, max_occ);
}

EvolutionTrace evolve(const ThetaSchedule& schedule, const std::vector<ModeSpec>& modes,
                      const std::vector<double>& betas) {
    if (int(betas.size()) != schedule.steps() + 1)
        throw std::invalid_argument("evolve: one beta sample per grid point required");
    for (double b : betas)
        if (b <= 0.0) throw std::invalid_argument("evolve: beta must be positive");
    if (modes.empty()) throw std::invalid_argument("evolve: need at least one mode");
    for (double theta : schedule.thetas)
        if (theta <= 0.0)
            throw std::invalid_argument(
                "evolve: theta(t) must stay positive (entropy operator undefined at 0)");

    EvolutionTrace trace;
    trace.beta = betas.front();
    double prev_S = 0.0, prev_E = 0.0;
    for (int i = 0; i <= schedule.steps(); ++i) {
        double theta = schedule.theta_at(i);
        double S = 0.0, E = 0.0;
        for (const ModeSpec& m : modes) {
            S += entropy_closed_form(theta);
            E += m.omega * std::sinh(theta) * std::sinh(theta);
        }
        TraceRecord rec;
        rec.t = schedule.time_at(i);
        rec.theta = theta;
        rec.S_A = S;
        rec.S_B = S;                 // A <-> B symmetry of the vacuum
        rec.S_A_minus_S_B = S - S;
        rec.E_A = E;
        rec.F_A = E - S / betas[i];
        double beta_mid = i == 0 ? betas[0] : 0.5 * (betas[i] + betas[i - 1]);
        rec.dQ_entropy = i == 0 ? 0.0 : (S - prev_S) / beta_mid;
        rec.dQ_energy = i == 0 ? 0.0 : E - prev_E;
        trace.records.push_back(rec);
        prev_S = S;
        prev_E = E;
    }
    return trace;
}

EvolutionTrace evolve(const ThetaSchedule& schedule, const std::vector<ModeSpec>& modes,
                      double beta) {
    return evolve(schedule, modes,
                  std::vector<double>(schedule.steps() + 1, beta));
}

ConservationResult check_sA_minus_sB(double theta, int cutoff) {
    if (theta == 0.0)
        throw std::invalid_argument("check_sA_minus_sB: theta = 0 rejected");
    SpaceDescriptor space = two_mode_space(cutoff);
    Operator SA = entropy_operator(theta, space, Sector::A);
    Operator SB = entropy_operator(theta, space, Sector::B);
    Operator G = pair_generator(space);
    Operator Nd = number_op(space, "1") - number_op(space, "2");

    // Per-mode theta vacuum on the canonical "1"/"2" labels.
    double t = std::tanh(theta), c = std::cosh(theta);
    Vector v = Vector::Zero(space.total_dim);
    for (int n = 0; n <= cutoff; ++n) v(space.flat_index({n, n})) = std::pow(t, n) / c;
    StateVector vac = normalize({space, std::move(v), false});

    ConservationResult r;
    r.comm_S_norm = subblock_inf_norm(commutator(SA - SB, G), cutoff - 2);
    r.comm_N_norm = subblock_inf_norm(commutator(Nd, G), cutoff - 2);
    r.expectation = expectation(vac, SA - SB).real();
    return r;
}

}  // namespace qhopf
