#include "qhopf/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhopf/bogoliubov.hpp"
#include "qhopf/dissipation.hpp"
#include "qhopf/fock.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/thermofield.hpp"

namespace qhopf {

namespace {

const double kThetaGrid[] = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0};

CriterionResult finish(int index, const std::string& name, double residual,
                       double tolerance, const std::string& detail = "") {
    return {index, name, residual, tolerance, residual < tolerance, detail};
}

CriterionResult deformed_ccr_closure() {
    const int cutoff = 20;
    SpaceDescriptor space = two_mode_space(cutoff);
    double worst = 0.0;
    for (double theta : kThetaGrid) {
        DeformationParameter q = DeformationParameter::from_theta(theta);
        Operator da = coproduct_deformed_a(q, space);
        Operator dad = coproduct_deformed_a_dag(q, space);
        Operator target = q_number_real(2.0, q) * identity_op(space);
        worst = std::max(worst,
                         subblock_inf_norm(commutator(da, dad) - target, cutoff - 2));
    }
    return finish(1, "deformed ccr closure", worst, 1e-10);
}

CriterionResult bogoliubov_theorem() {
    const int cutoff = 20;
    SpaceDescriptor space = two_mode_space(cutoff);
    double worst = 0.0;
    for (double theta : kThetaGrid) {
        Operator al = alpha(theta, space);
        Operator be = beta(theta, space);
        double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        Operator A_comb = inv_sqrt2 * (al + be);
        Operator B_comb = inv_sqrt2 * (al - be);
        worst = std::max(worst, max_abs((A_comb - a_theta_closed(theta, space)).matrix));
        worst = std::max(worst, max_abs((B_comb - b_theta_closed(theta, space)).matrix));
    }
    return finish(2, "Bogoliubov combination equals closed form", worst, 1e-12);
}

CriterionResult generator_and_translation() {
    double fd = generator_fd_residual(0.5, two_mode_space(20), 1e-5, 18);

    const int cutoff = 30;
    SpaceDescriptor space = two_mode_space(cutoff);
    BogoliubovPair pair = make_pair(0.2, space);
    double tr = translation_residual(pair, 0.3, cutoff / 3);

    std::ostringstream detail;
    detail << "fd residual " << fd << " (tol 1e-8), translation residual " << tr
           << " (tol 1e-6)";
    CriterionResult r = finish(3, "generator and theta-translation",
                               std::max(fd, tr), 1e-6, detail.str());
    r.pass = fd < 1e-8 && tr < 1e-6;
    return r;
}

CriterionResult vacuum_equivalence() {
    const double theta = 0.5;
    const int cutoff = cutoff_for_tail(theta, 1e-12);
    ThetaVacuum vexp = vacuum_exponential(theta, cutoff);
    ThetaVacuum vcl = vacuum_closed_pair(theta, cutoff);
    double overlap_dev = std::abs(1.0 - std::abs(overlap(vexp, vcl)));

    const StateVector& state = vcl.mode_states[0];
    const SpaceDescriptor& space = state.space;
    Operator A_theta = a_theta_closed(theta, space);
    double ann = apply(A_theta, state).amplitudes.norm();

    std::ostringstream detail;
    detail << "cutoff " << cutoff << ", overlap dev " << overlap_dev
           << " (tol 1e-10), annihilation norm " << ann << " (tol 1e-10)";
    CriterionResult r = finish(4, "vacuum equivalence and annihilation",
                               std::max(overlap_dev, ann), 1e-10, detail.str());
    return r;
}

CriterionResult inequivalence_curve() {
    const int cutoff = 30;
    double measured = per_mode_overlap(0.3, 0.8, cutoff);
    double closed = 1.0 / std::cosh(0.5);
    double dev = std::abs(measured - closed);

    // vacua displaced to +/- 0.5; the 64-mode product drops below 1e-12
    double per_mode = per_mode_overlap(0.5, -0.5, cutoff);
    double product64 = std::pow(per_mode, 64);

    std::ostringstream detail;
    detail << "per-mode dev " << dev << " (tol 1e-10), 64-mode product "
           << product64 << " (must be < 1e-12)";
    CriterionResult r = finish(5, "inequivalence curve", dev, 1e-10, detail.str());
    r.pass = dev < 1e-10 && product64 < 1e-12;
    return r;
}

CriterionResult entropy_relations() {
    const double theta = 0.5;
    ThetaVacuum vac = vacuum_closed_pair(theta, 25);
    double S = entropy_expectation(vac, Sector::A);
    double closed_dev = std::abs(S - entropy_closed_form(theta));

    EntropyGradientResult grad = entropy_gradient_relation(theta, 40);

    double vn = von_neumann_entropy(partial_trace(vac.mode_states[0], {0}));
    double vn_dev = std::abs(S - vn);

    std::ostringstream detail;
    detail << "closed-form dev " << closed_dev << " (tol 1e-10), gradient residual "
           << grad.residual_fd << " (tol 1e-6), entanglement-entropy dev " << vn_dev
           << " (tol 1e-8)";
    CriterionResult r = finish(6, "entropy operator relations",
                               std::max({closed_dev, grad.residual_fd, vn_dev}), 1e-6,
                               detail.str());
    r.pass = closed_dev < 1e-10 && grad.residual_fd < 1e-6 && vn_dev < 1e-8;
    return r;
}

CriterionResult thermodynamics() {
    double worst = 0.0;
    const double grid[][2] = {{1.0, 1.0}, {0.5, 2.0}, {2.0, 0.3}};
    for (const auto& bo : grid) {
        double theta_star = stationary_theta(bo[0], bo[1]);
        double s2 = std::sinh(theta_star) * std::sinh(theta_star);
        worst = std::max(worst, std::abs(s2 - bose_occupancy(bo[0], bo[1])));
    }

    // quasi-static Bose path: per-step first-principle balance
    const int steps = 10000;
    const double omega = 1.0, beta0 = 1.0, beta1 = 1.01, dt = 1e-4;
    ThetaSchedule sched = ThetaSchedule::bose_quasistatic(omega, beta0, beta1, 0.0, dt, steps);
    std::vector<double> betas;
    for (int i = 0; i <= steps; ++i)
        betas.push_back(beta0 + (beta1 - beta0) * i / steps);
    EvolutionTrace trace = evolve(sched, {{"k", omega, 0.0}}, betas);
    double worst_balance = 0.0;
    for (size_t i = 1; i < trace.records.size(); ++i) {
        const TraceRecord& rec = trace.records[i];
        double dF = rec.dQ_energy - rec.dQ_entropy;
        if (std::abs(rec.dQ_energy) > 0.0)
            worst_balance = std::max(worst_balance, std::abs(dF) / std::abs(rec.dQ_energy));
    }

    std::ostringstream detail;
    detail << "Bose occupancy dev " << worst << " (tol 1e-10), balance ratio "
           << worst_balance << " (tol 1e-6)";
    CriterionResult r = finish(7, "free-energy stationarity", worst, 1e-10, detail.str());
    r.pass = worst < 1e-10 && worst_balance < 1e-6;
    return r;
}

CriterionResult entanglement_weights() {
    const double theta = 0.5;
    const int cutoff = 30;
    ThetaVacuum vac = vacuum_closed_pair(theta, cutoff);
    const StateVector& state = vac.mode_states[0];
    WeightDistribution dist = weights({theta}, 50);

    double worst_sector = 0.0;
    for (int n = 0; n <= 8; ++n) {
        double amp = std::abs(state.amplitudes(state.space.flat_index({n, n})));
        worst_sector = std::max(worst_sector, std::abs(amp * amp - dist.weight(n)));
    }

    double sum_dev = std::abs(1.0 - dist.partial_sum());

    double t2 = std::tanh(theta) * std::tanh(theta);
    double worst_ratio = 0.0;
    for (int n = 0; n < 50; ++n)
        worst_ratio = std::max(worst_ratio,
                               std::abs(dist.weight(n + 1) / dist.weight(n) - t2));

    std::ostringstream detail;
    detail << "sector dev " << worst_sector << " (tol 1e-10), partial-sum dev "
           << sum_dev << " (tol 1e-12), ratio dev " << worst_ratio << " (tol 1e-12)";
    CriterionResult r = finish(8, "entanglement weights", worst_sector, 1e-10, detail.str());
    r.pass = worst_sector < 1e-10 && sum_dev < 1e-12 && worst_ratio < 1e-12;
    return r;
}

CriterionResult conservation() {
    ConservationResult c = check_sA_minus_sB(0.5, 30);

    ThetaSchedule sched = ThetaSchedule::linear(0.1, 0.05, 0.0, 0.01, 200);
    EvolutionTrace trace = evolve(sched, {{"k", 1.0, 0.0}}, 1.0);
    double worst_trace = 0.0;
    for (const TraceRecord& rec : trace.records)
        worst_trace = std::max(worst_trace, std::abs(rec.S_A_minus_S_B));

    std::ostringstream detail;
    detail << "[S_A-S_B,G] " << c.comm_S_norm << " (tol 1e-9), [N_A-N_B,G] "
           << c.comm_N_norm << " (tol 1e-12), trace column " << worst_trace
           << " (tol 1e-9)";
    CriterionResult r = finish(9, "S_A - S_B conservation",
                               std::max({c.comm_S_norm, c.comm_N_norm, worst_trace}),
                               1e-9, detail.str());
    r.pass = c.comm_S_norm < 1e-9 && c.comm_N_norm < 1e-12 && worst_trace < 1e-9;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
    return {
        deformed_ccr_closure(),
        bogoliubov_theorem(),
        generator_and_translation(),
        vacuum_equivalence(),
        inequivalence_curve(),
        entropy_relations(),
        thermodynamics(),
        entanglement_weights(),
        conservation(),
    };
}

}  // namespace qhopf
