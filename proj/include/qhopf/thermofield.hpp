#ifndef QHOPF_THERMOFIELD_HPP
#define QHOPF_THERMOFIELD_HPP

#include <string>
#include <vector>

#include "qhopf/bogoliubov.hpp"
#include "qhopf/fock.hpp"

namespace qhopf {

struct ModeSpec {
    std::string label;
    double omega = 1.0;  // mode frequency, > 0 (hbar = 1)
    double theta = 0.0;  // deformation angle
};

enum class Sector { A, B };
enum class VacuumConstruction { ExponentialMap, ClosedForm };

// theta-vacuum kept in per-mode factors: the pair structure is an exact
// product over modes, so each mode stores its own two-factor (or, in the
// charged construction, four-factor) state.
struct ThetaVacuum {
    std::vector<ModeSpec> modes;
    std::vector<StateVector> mode_states;
    VacuumConstruction construction = VacuumConstruction::ClosedForm;
};

// |0(theta)> = exp(i theta G)|0> per mode, by the exponential map.
ThetaVacuum vacuum_exponential(const std::vector<ModeSpec>& modes,
                               const std::vector<int>& cutoffs);
ThetaVacuum vacuum_exponential(double theta, int cutoff);

// Closed pair form (1/cosh theta) exp(tanh theta A^dag B^dag)|0>.
ThetaVacuum vacuum_closed_pair(const std::vector<ModeSpec>& modes,
                               const std::vector<int>& cutoffs);
ThetaVacuum vacuum_closed_pair(double theta, int cutoff);

// Charged (four-factor) construction: two Cooper-pair channels
// (A+, Abar-) and (A-, Abar+), factors ordered A+, Abar+, A-, Abar-.
ThetaVacuum vacuum_four_mode(double theta, int cutoff);

// Product over modes of the per-mode inner products.
Complex overlap(const ThetaVacuum& a, const ThetaVacuum& b);

struct OverlapPoint {
    int K;
    double overlap_abs;
};
// |<0(theta)|0(theta')>| for K identical modes; per_mode is computed once on
// the truncated space and raised to the K-th power.
std::vector<OverlapPoint> overlap_scan(double theta, double theta_prime, int K_max,
                                       int cutoff);
double per_mode_overlap(double theta, double theta_prime, int cutoff);

// Entropy -----------------------------------------------------------------

// S = -(N ln sinh^2 theta - a a^dag ln cosh^2 theta) for the chosen sector,
// on the two-factor space of one mode. Rejects theta = 0 (ln sinh^2
// diverges).
Operator entropy_operator(double theta, const SpaceDescriptor& two_factor_space,
                          Sector sector);
// Sum over modes of the per-mode expectations.
double entropy_expectation(const ThetaVacuum& vacuum, Sector sector);
// cosh^2 ln cosh^2 - sinh^2 ln sinh^2
double entropy_closed_form(double theta);

struct EntropyGradientResult {
    double residual_fd;         // ||d_theta|0(theta)> + (1/2)(dS_A/dtheta)|0(theta)>||
    double residual_generator;  // ||d_theta|0(theta)> - (A^dag B^dag - A B)|0(theta)>||
};
EntropyGradientResult entropy_gradient_relation(double theta, int cutoff,
                                                double step = 1e-5);

// Thermodynamics ----------------------------------------------------------

// F(theta) = omega sinh^2 theta - (1/beta) <S_A>(theta) for one mode.
double free_energy(double theta, double omega, double beta);
double free_energy(const std::vector<ModeSpec>& modes, double beta);
double free_energy_gradient(double theta, double omega, double beta);
// Minimizer of F by bisection on dF/dtheta over [1e-8, 20]; satisfies
// sinh^2 theta* = 1/(e^{beta omega} - 1).
double stationary_theta(double beta, double omega);
double bose_occupancy(double beta, double omega);

// Weights -----------------------------------------------------------------

struct WeightDistribution {
    std::vector<double> thetas;
    int n_max = 0;
    // per_mode[k][n] = sinh^{2n}(theta_k) / cosh^{2(n+1)}(theta_k)
    std::vector<std::vector<double>> per_mode;

    double weight(const std::vector<int>& multi_index) const;
    // single-mode accessors
    double weight(int n) const;
    double partial_sum() const;  // single-mode partial sum to n_max
    double tail() const;
};

WeightDistribution weights(const std::vector<double>& theta_spectrum, int n_max);

// Entanglement report ------------------------------------------------------

struct SectorReport {
    int n;
    double sector_weight;    // squared norm of the n-pair sector
    double expected_weight;  // Eq-form weight for the same sector
    int schmidt_rank;        // across the (+)/(-) split
    double reduced_entropy;  // von Neumann entropy of the sector's reduced state
};

struct EntanglementReport {
    std::vector<SectorReport> sectors;
    double total_reduced_entropy;  // of the full vacuum across the split
};

// For a single-mode vacuum: two-factor states split A|B, four-factor states
// split (+)-sector | (-)-sector.
EntanglementReport entanglement_report(const ThetaVacuum& vacuum, int n_report);

}  // namespace qhopf

#endif
