#ifndef QHOPF_DISSIPATION_HPP
#define QHOPF_DISSIPATION_HPP

#include <functional>
#include <vector>

#include "qhopf/thermofield.hpp"

namespace qhopf {

// Time-dependent deformation theta(t) sampled on a uniform grid.
struct ThetaSchedule {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> thetas;  // steps + 1 samples
    std::function<double(double)> theta_dot;  // analytic when available

    double theta_at(int step) const { return thetas.at(step); }
    double time_at(int step) const { return t0 + step * dt; }
    int steps() const { return int(thetas.size()) - 1; }
    // analytic theta_dot when set, central difference otherwise
    double theta_dot_at(int step) const;

    static ThetaSchedule constant(double theta, double t0, double dt, int steps);
    static ThetaSchedule linear(double theta0, double gamma, double t0, double dt,
                                int steps);
    // quasi-static Bose path theta*(beta(t), omega) with beta ramped linearly
    static ThetaSchedule bose_quasistatic(double omega, double beta_start,
                                          double beta_end, double t0, double dt,
                                          int steps);
};

struct TraceRecord {
    double t, theta;
    double S_A, S_B, S_A_minus_S_B;
    double E_A, F_A;
    double dQ_entropy;  // (1/beta) * Delta<S_A> since the previous step
    double dQ_energy;   // Delta<E_A> since the previous step
};

struct EvolutionTrace {
    std::vector<TraceRecord> records;
    double beta = 0.0;
};

// Q = theta_dot * G; Hermitian since G is.
Operator heat_term(double theta_dot, const Operator& generator_G);

// || -i dA(t, theta(t))/dt - [H + Q, A(t, theta(t))] || on the sub-block with
// occupations <= max_occ, with A(t, theta) = e^{iHt} A(theta) e^{-iHt},
// H = omega (N_A + N_B), dA/dt by central difference with the given step.
// The heat term is evaluated in the same picture, Q(t) = theta_dot e^{iHt} G e^{-iHt}.
double heisenberg_residual(const ThetaSchedule& schedule, int step_index, double omega,
                           int cutoff, double dt_fd = 1e-4, int max_occ = -1);

// Closed-form per-mode trace along the schedule; every mode follows the
// common deformation history theta(t).
EvolutionTrace evolve(const ThetaSchedule& schedule, const std::vector<ModeSpec>& modes,
                      double beta);

// Same trace with a time-dependent inverse temperature (one sample per grid
// point); heat increments use the midpoint beta of each step.
EvolutionTrace evolve(const ThetaSchedule& schedule, const std::vector<ModeSpec>& modes,
                      const std::vector<double>& betas);

struct ConservationResult {
    double comm_S_norm;   // ||[S_A - S_B, G]||_inf on the low sub-block
    double comm_N_norm;   // ||[N_A - N_B, G]||_inf on the low sub-block
    double expectation;   // <0(theta)|(S_A - S_B)|0(theta)>
};
ConservationResult check_sA_minus_sB(double theta, int cutoff);

}  // namespace qhopf

#endif
