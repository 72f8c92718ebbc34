// Experiment runner: every demonstration is a subcommand emitting a
// ResultTable as CSV or JSON. Output formatting is fixed so identical
// configs produce byte-identical files; exit code 0 means all residual
// checks passed, otherwise the 1-based index of the first failing check.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qhopf/acceptance.hpp"
#include "qhopf/bogoliubov.hpp"
#include "qhopf/dissipation.hpp"
#include "qhopf/fock.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/result_table.hpp"
#include "qhopf/thermofield.hpp"

using namespace qhopf;
using nlohmann::json;

namespace {

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

Check check_below(const std::string& name, double value, double tol) {
    return {name, value, tol, value < tol};
}

// Binds CLI flags one-to-one to config-file keys; flags override the file.
class OptionSet {
  public:
    explicit OptionSet(CLI::App* app) : app_(app) {}

    template <typename T>
    void add(const std::string& key, T& var, const std::string& desc, bool echo = true) {
        CLI::Option* opt = app_->add_option("--" + key, var, desc)->capture_default_str();
        appliers_.push_back([&var, opt, key](const json& j) {
            if (opt->count() == 0 && j.contains(key)) var = j.at(key).get<T>();
        });
        if (echo) echoers_.emplace_back(key, [&var]() { return echo_value(var); });
    }

    void apply_config(const std::string& path) const {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("config", "cannot open config file " + path);
        json j = json::parse(in);
        for (const auto& f : appliers_) f(j);
    }

    void echo_into(ResultTable& table) const {
        for (const auto& [key, getter] : echoers_)
            table.add_meta("config." + key, getter());
    }

  private:
    static std::string echo_value(double v) { return format_double(v); }
    static std::string echo_value(int v) { return std::to_string(v); }
    static std::string echo_value(long v) { return std::to_string(v); }
    static std::string echo_value(const std::string& v) { return v; }
    static std::string echo_value(const std::vector<double>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i)
            out += (i ? ";" : "") + format_double(v[i]);
        return out;
    }

    CLI::App* app_;
    std::vector<std::function<void(const json&)>> appliers_;
    std::vector<std::pair<std::string, std::function<std::string()>>> echoers_;
};

struct CommonOptions {
    std::string config;
    std::string output;
    std::string format = "csv";
    long seed = 0;

    void bind(CLI::App* sub, OptionSet& opts) {
        sub->add_option("--config", config, "flat JSON config file; flags override it");
        // not echoed: the destination must not change the bytes written
        opts.add("output", output, "output path (default stdout)", false);
        opts.add("format", format, "csv or json");
        opts.add("seed", seed, "echoed into metadata (no randomness exists)");
    }
};

void write_table(const ResultTable& table, const CommonOptions& common) {
    if (common.format != "csv" && common.format != "json")
        throw CLI::ValidationError("format", "format must be csv or json");
    if (common.output.empty()) {
        if (common.format == "csv")
            table.write_csv(std::cout);
        else
            table.write_json(std::cout);
        return;
    }
    std::string path = common.output;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("QHOPF_OUTPUT_DIR"))
            path = std::string(dir) + "/" + path;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("output", "cannot open output file " + path);
    if (common.format == "csv")
        table.write_csv(out);
    else
        table.write_json(out);
}

int report_checks(const std::vector<Check>& checks) {
    for (size_t i = 0; i < checks.size(); ++i)
        std::cerr << (checks[i].pass ? "[pass] " : "[FAIL] ") << checks[i].name << " = "
                  << format_double(checks[i].value) << " (tol "
                  << format_double(checks[i].tolerance) << ")\n";
    for (size_t i = 0; i < checks.size(); ++i)
        if (!checks[i].pass) return int(i) + 1;
    return 0;
}

// ------------------------------------------------------------------ runs

int run_algebra_check(const CommonOptions& common, const OptionSet& opts, int cutoff,
                      const std::vector<double>& thetas, double tol) {
    SpaceDescriptor space = two_mode_space(cutoff);
    ResultTable table;
    table.columns = {"theta", "ccr_residual", "grading_residual",
                     "primitive_ccr_residual", "casimir_residual"};
    std::vector<Check> checks;
    for (double theta : thetas) {
        DeformationParameter q = DeformationParameter::from_theta(theta);
        Operator da = coproduct_deformed_a(q, space);
        Operator dad = coproduct_deformed_a_dag(q, space);
        Operator dn = coproduct_primitive(Generator::N, space);

        double ccr = subblock_inf_norm(
            commutator(da, dad) - q_number_real(2.0, q) * identity_op(space), cutoff - 2);
        double grading = subblock_inf_norm(commutator(dn, da) + da, cutoff - 2);
        double prim = subblock_inf_norm(
            commutator(coproduct_primitive(Generator::A, space),
                       coproduct_primitive(Generator::ADag, space)) -
                2.0 * coproduct_primitive(Generator::H, space),
            cutoff - 2);
        SpaceDescriptor single = make_space({{"k", cutoff}});
        AlgebraRealization rep = fundamental_realization(single, "k");
        double cas = subblock_inf_norm(casimir_deformed(rep, q), cutoff - 1);

        table.add_row({theta, ccr, grading, prim, cas});
        std::string tag = " @theta=" + format_double(theta);
        checks.push_back(check_below("deformed ccr" + tag, ccr, tol));
        checks.push_back(check_below("N-grading" + tag, grading, tol));
        checks.push_back(check_below("primitive ccr" + tag, prim, tol));
        checks.push_back(check_below("deformed Casimir" + tag, cas, tol));
    }
    opts.echo_into(table);
    write_table(table, common);
    return report_checks(checks);
}

int run_bogoliubov_demo(const CommonOptions& common, const OptionSet& opts, int cutoff,
                        const std::vector<double>& thetas) {
    SpaceDescriptor space = two_mode_space(cutoff);
    ResultTable table;
    table.columns = {"theta", "form_dev_A", "form_dev_B", "ccr_A", "ccr_B",
                     "cross_comm", "generator_fd_residual"};
    std::vector<Check> checks;
    Operator G = pair_generator(space);
    double g_herm = max_abs((G - adjoint(G)).matrix);
    checks.push_back(check_below("generator Hermiticity", g_herm, 1e-12));
    for (double theta : thetas) {
        Operator al = alpha(theta, space);
        Operator be = beta(theta, space);
        double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        Operator A_comb = inv_sqrt2 * (al + be);
        Operator B_comb = inv_sqrt2 * (al - be);
        double dev_a = max_abs((A_comb - a_theta_closed(theta, space)).matrix);
        double dev_b = max_abs((B_comb - b_theta_closed(theta, space)).matrix);
        double ccr_a = subblock_inf_norm(
            commutator(A_comb, adjoint(A_comb)) - identity_op(space), cutoff - 2);
        double ccr_b = subblock_inf_norm(
            commutator(B_comb, adjoint(B_comb)) - identity_op(space), cutoff - 2);
        double cross = subblock_inf_norm(commutator(A_comb, B_comb), cutoff - 2);
        double fd = generator_fd_residual(theta, space, 1e-5, cutoff - 2);

        table.add_row({theta, dev_a, dev_b, ccr_a, ccr_b, cross, fd});
        std::string tag = " @theta=" + format_double(theta);
        checks.push_back(check_below("twisted-adjoint form A" + tag, dev_a, 1e-12));
        checks.push_back(check_below("twisted-adjoint form B" + tag, dev_b, 1e-12));
        checks.push_back(check_below("canonical ccr A" + tag, ccr_a, 1e-10));
        checks.push_back(check_below("canonical ccr B" + tag, ccr_b, 1e-10));
        checks.push_back(check_below("cross commutator" + tag, cross, 1e-10));
        checks.push_back(check_below("generator derivative" + tag, fd, 1e-8));
    }
    opts.echo_into(table);
    write_table(table, common);
    return report_checks(checks);
}

int run_vacuum(const CommonOptions& common, const OptionSet& opts, double theta,
               int cutoff, double tol) {
    if (cutoff < 4)
        throw CLI::ValidationError("cutoff", "cutoff must be >= 4 for vacuum experiments");
    ThetaVacuum vcl = vacuum_closed_pair(theta, cutoff);
    ThetaVacuum vexp = vacuum_exponential(theta, cutoff);
    const StateVector& state = vcl.mode_states[0];
    WeightDistribution dist = weights({theta}, cutoff);

    ResultTable table;
    table.columns = {"n", "amplitude", "weight"};
    for (int n = 0; n <= cutoff; ++n) {
        double amp = std::abs(state.amplitudes(state.space.flat_index({n, n})));
        table.add_row({double(n), amp, dist.weight(n)});
    }

    double n_a = expectation(state, number_op(state.space, state.space.factors[0].label)).real();
    double overlap_dev = std::abs(1.0 - std::abs(overlap(vexp, vcl)));
    double ann = apply(a_theta_closed(theta, state.space), state).amplitudes.norm();

    table.add_meta("N_A", n_a);
    table.add_meta("N_A_closed_form", std::sinh(theta) * std::sinh(theta));
    if (theta == 0.0) {
        table.add_meta("S_A_note",
                       "entropy operator undefined at theta=0; closed-form limit 0");
        table.add_meta("S_A_limit", 0.0);
    } else {
        table.add_meta("S_A", entropy_expectation(vcl, Sector::A));
        table.add_meta("S_A_closed_form", entropy_closed_form(theta));
    }
    table.add_meta("truncation_tail", truncation_tail(theta, cutoff));
    table.add_meta("overlap_exp_vs_closed_dev", overlap_dev);
    table.add_meta("annihilation_norm", ann);
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    checks.push_back(check_below("construction equivalence", overlap_dev, tol));
    checks.push_back(check_below("annihilation", ann, tol));
    checks.push_back(
        check_below("N_A closed form", std::abs(n_a - std::sinh(theta) * std::sinh(theta)),
                    std::max(tol, 10.0 * truncation_tail(theta, cutoff))));
    return report_checks(checks);
}

int run_overlap_scan(const CommonOptions& common, const OptionSet& opts, double theta,
                     double theta_prime, int kmax, int cutoff, double tol) {
    double per_mode = per_mode_overlap(theta, theta_prime, cutoff);
    double closed = 1.0 / std::cosh(theta - theta_prime);

    ResultTable table;
    table.columns = {"K", "overlap_abs"};
    for (const OverlapPoint& p : overlap_scan(theta, theta_prime, kmax, cutoff))
        table.add_row({double(p.K), p.overlap_abs});
    table.add_meta("per_mode_overlap", per_mode);
    table.add_meta("per_mode_closed_form", closed);
    table.add_meta("truncation_tail",
                   std::max(truncation_tail(theta, cutoff),
                            truncation_tail(theta_prime, cutoff)));
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    checks.push_back(
        check_below("per-mode overlap vs 1/cosh", std::abs(per_mode - closed), tol));
    return report_checks(checks);
}

int run_weights(const CommonOptions& common, const OptionSet& opts, double theta,
                int nmax) {
    WeightDistribution dist = weights({theta}, nmax);
    ResultTable table;
    table.columns = {"n", "W_n", "partial_sum"};
    double sum = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        sum += dist.weight(n);
        table.add_row({double(n), dist.weight(n), sum});
    }
    table.add_meta("truncation_tail", dist.tail());
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    double t2 = std::tanh(theta) * std::tanh(theta);
    double worst_ratio = 0.0;
    if (theta != 0.0)
        for (int n = 0; n < nmax; ++n)
            worst_ratio = std::max(worst_ratio,
                                   std::abs(dist.weight(n + 1) / dist.weight(n) - t2));
    checks.push_back(check_below("geometric ratio", worst_ratio, 1e-12));
    double range = 0.0;
    for (int n = 0; n <= nmax; ++n)
        if (dist.weight(n) <= 0.0 || dist.weight(n) >= 1.0) range = 1.0;
    if (theta == 0.0) range = 0.0;  // degenerate limit: W_0 = 1
    checks.push_back(check_below("weights in (0,1)", range, 0.5));
    double expected_tail = theta == 0.0 ? 0.0 : std::pow(t2, nmax + 1);
    checks.push_back(check_below("partial sum consistency",
                                 std::abs(1.0 - sum - expected_tail), 1e-12));
    return report_checks(checks);
}

int run_free_energy(const CommonOptions& common, const OptionSet& opts, double beta,
                    double omega, double theta_max, int steps, double tol) {
    if (beta <= 0.0 || omega <= 0.0)
        throw CLI::ValidationError("beta/omega", "beta and omega must be positive");
    ResultTable table;
    table.columns = {"theta", "F_A"};
    for (int i = 0; i <= steps; ++i) {
        double theta = theta_max * i / steps;
        table.add_row({theta, free_energy(theta, omega, beta)});
    }
    double theta_star = stationary_theta(beta, omega);
    double s2 = std::sinh(theta_star) * std::sinh(theta_star);
    double occupancy = bose_occupancy(beta, omega);
    double h = 1e-4;
    double d2 = (free_energy(theta_star + h, omega, beta) -
                 2.0 * free_energy(theta_star, omega, beta) +
                 free_energy(theta_star - h, omega, beta)) / (h * h);
    table.add_meta("theta_star", theta_star);
    table.add_meta("sinh2_theta_star", s2);
    table.add_meta("bose_occupancy", occupancy);
    table.add_meta("second_derivative", d2);
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    checks.push_back(check_below("Bose-Einstein form", std::abs(s2 - occupancy), tol));
    checks.push_back(check_below("genuine minimum", -d2, 0.0 + 1e-12));
    return report_checks(checks);
}

int run_entangle(const CommonOptions& common, const OptionSet& opts, double theta,
                 int cutoff, int nmax, double tol) {
    if (cutoff < 4)
        throw CLI::ValidationError("cutoff", "cutoff must be >= 4 for vacuum experiments");
    ThetaVacuum vac = vacuum_four_mode(theta, cutoff);
    EntanglementReport report = entanglement_report(vac, nmax);

    ResultTable table;
    table.columns = {"n", "sector_weight", "expected_weight", "schmidt_rank",
                     "reduced_entropy"};
    for (const SectorReport& s : report.sectors)
        table.add_row({double(s.n), s.sector_weight, s.expected_weight,
                       double(s.schmidt_rank), s.reduced_entropy});
    table.add_meta("total_reduced_entropy", report.total_reduced_entropy);
    table.add_meta("per_pair_closed_form", entropy_closed_form(theta));
    table.add_meta("truncation_tail", truncation_tail(theta, cutoff));
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    double worst = 0.0;
    for (const SectorReport& s : report.sectors)
        worst = std::max(worst, std::abs(s.sector_weight - s.expected_weight));
    checks.push_back(check_below("sector weights", worst, tol));
    checks.push_back(check_below(
        "total reduced entropy vs 2x per-pair closed form",
        std::abs(report.total_reduced_entropy - 2.0 * entropy_closed_form(theta)),
        1e-6));
    return report_checks(checks);
}

int run_dissipate(const CommonOptions& common, const OptionSet& opts,
                  const std::string& schedule_name, double theta0, double gamma,
                  double t0, double dt, int steps, double beta, double beta_end,
                  double omega) {
    ThetaSchedule schedule;
    std::vector<double> betas(steps + 1, beta);
    if (schedule_name == "constant") {
        schedule = ThetaSchedule::constant(theta0, t0, dt, steps);
    } else if (schedule_name == "linear") {
        schedule = ThetaSchedule::linear(theta0, gamma, t0, dt, steps);
    } else if (schedule_name == "bose") {
        schedule = ThetaSchedule::bose_quasistatic(omega, beta, beta_end, t0, dt, steps);
        for (int i = 0; i <= steps; ++i)
            betas[i] = beta + (beta_end - beta) * i / steps;
    } else {
        throw CLI::ValidationError("schedule", "schedule must be constant, linear or bose");
    }
    EvolutionTrace trace = evolve(schedule, {{"k", omega, 0.0}}, betas);

    ResultTable table;
    table.columns = {"t", "theta", "S_A", "S_B", "S_A_minus_S_B",
                     "E_A", "F_A", "dQ_entropy", "dQ_energy"};
    for (const TraceRecord& rec : trace.records)
        table.add_row({rec.t, rec.theta, rec.S_A, rec.S_B, rec.S_A_minus_S_B, rec.E_A,
                       rec.F_A, rec.dQ_entropy, rec.dQ_energy});
    opts.echo_into(table);
    write_table(table, common);

    std::vector<Check> checks;
    double worst_diff = 0.0;
    for (const TraceRecord& rec : trace.records)
        worst_diff = std::max(worst_diff, std::abs(rec.S_A_minus_S_B));
    checks.push_back(check_below("S_A - S_B constant", worst_diff, 1e-9));
    if (schedule_name == "bose") {
        double worst_balance = 0.0;
        for (size_t i = 1; i < trace.records.size(); ++i) {
            const TraceRecord& rec = trace.records[i];
            if (std::abs(rec.dQ_energy) > 0.0)
                worst_balance = std::max(worst_balance,
                                         std::abs(rec.dQ_energy - rec.dQ_entropy) /
                                             std::abs(rec.dQ_energy));
        }
        checks.push_back(check_below("first-principle balance", worst_balance, 1e-6));
    }
    if (schedule_name == "linear" && gamma > 0.0) {
        double monotone = 0.0;
        for (size_t i = 1; i < trace.records.size(); ++i)
            if (trace.records[i].S_A <= trace.records[i - 1].S_A) monotone = 1.0;
        checks.push_back(check_below("entropy arrow (S_A increasing)", monotone, 0.5));
    }
    return report_checks(checks);
}

int run_acceptance(const CommonOptions& common, const OptionSet& opts) {
    std::vector<CriterionResult> results = run_acceptance_criteria();
    ResultTable table;
    table.columns = {"criterion", "residual", "tolerance", "pass"};
    for (const CriterionResult& r : results)
        table.add_row({double(r.index), r.residual, r.tolerance, r.pass ? 1.0 : 0.0});
    for (const CriterionResult& r : results)
        table.add_meta("criterion_" + std::to_string(r.index), r.name + ": " + r.detail);
    opts.echo_into(table);
    write_table(table, common);

    for (const CriterionResult& r : results)
        std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << "criterion " << r.index << ": "
                  << r.name << "\n";
    for (const CriterionResult& r : results)
        if (!r.pass) return r.index;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed mode-pair numerics: Bogoliubov pipeline, theta-vacua, "
                 "entropy, free energy and entanglement weights"};
    app.require_subcommand(1);
    int exit_code = 0;
    auto started = std::chrono::steady_clock::now();

    // algebra-check
    auto* sub_alg = app.add_subcommand("algebra-check", "deformed-algebra invariants on a theta grid");
    auto opts_alg = std::make_shared<OptionSet>(sub_alg);
    auto common_alg = std::make_shared<CommonOptions>();
    common_alg->bind(sub_alg, *opts_alg);
    auto alg_cutoff = std::make_shared<int>(12);
    auto alg_thetas = std::make_shared<std::vector<double>>(
        std::vector<double>{0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0});
    auto alg_tol = std::make_shared<double>(1e-10);
    opts_alg->add("cutoff", *alg_cutoff, "per-mode truncation cutoff");
    opts_alg->add("thetas", *alg_thetas, "deformation angles");
    opts_alg->add("tol", *alg_tol, "residual tolerance");
    sub_alg->callback([=, &exit_code]() {
        opts_alg->apply_config(common_alg->config);
        exit_code = run_algebra_check(*common_alg, *opts_alg, *alg_cutoff, *alg_thetas,
                                      *alg_tol);
    });

    // bogoliubov-demo
    auto* sub_bog = app.add_subcommand("bogoliubov-demo", "coproduct-to-Bogoliubov pipeline residuals");
    auto opts_bog = std::make_shared<OptionSet>(sub_bog);
    auto common_bog = std::make_shared<CommonOptions>();
    common_bog->bind(sub_bog, *opts_bog);
    auto bog_cutoff = std::make_shared<int>(20);
    auto bog_thetas = std::make_shared<std::vector<double>>(
        std::vector<double>{0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0});
    opts_bog->add("cutoff", *bog_cutoff, "per-mode truncation cutoff");
    opts_bog->add("thetas", *bog_thetas, "deformation angles");
    sub_bog->callback([=, &exit_code]() {
        opts_bog->apply_config(common_bog->config);
        exit_code = run_bogoliubov_demo(*common_bog, *opts_bog, *bog_cutoff, *bog_thetas);
    });

    // vacuum
    auto* sub_vac = app.add_subcommand("vacuum", "theta-vacuum amplitudes, occupation and entropy");
    auto opts_vac = std::make_shared<OptionSet>(sub_vac);
    auto common_vac = std::make_shared<CommonOptions>();
    common_vac->bind(sub_vac, *opts_vac);
    auto vac_theta = std::make_shared<double>(0.5);
    auto vac_cutoff = std::make_shared<int>(20);
    auto vac_tol = std::make_shared<double>(1e-8);
    opts_vac->add("theta", *vac_theta, "deformation angle");
    opts_vac->add("cutoff", *vac_cutoff, "per-mode truncation cutoff (>= 4)");
    opts_vac->add("tol", *vac_tol, "residual tolerance");
    sub_vac->callback([=, &exit_code]() {
        opts_vac->apply_config(common_vac->config);
        exit_code = run_vacuum(*common_vac, *opts_vac, *vac_theta, *vac_cutoff, *vac_tol);
    });

    // overlap-scan
    auto* sub_ovl = app.add_subcommand("overlap-scan", "inequivalence curve |<0(theta)|0(theta')>| vs mode count");
    auto opts_ovl = std::make_shared<OptionSet>(sub_ovl);
    auto common_ovl = std::make_shared<CommonOptions>();
    common_ovl->bind(sub_ovl, *opts_ovl);
    auto ovl_theta = std::make_shared<double>(0.5);
    auto ovl_theta_prime = std::make_shared<double>(0.0);
    auto ovl_kmax = std::make_shared<int>(200);
    auto ovl_cutoff = std::make_shared<int>(30);
    auto ovl_tol = std::make_shared<double>(1e-10);
    opts_ovl->add("theta", *ovl_theta, "first vacuum angle");
    opts_ovl->add("theta-prime", *ovl_theta_prime, "second vacuum angle");
    opts_ovl->add("kmax", *ovl_kmax, "largest mode count K");
    opts_ovl->add("cutoff", *ovl_cutoff, "per-mode truncation cutoff");
    opts_ovl->add("tol", *ovl_tol, "per-mode closed-form tolerance");
    sub_ovl->callback([=, &exit_code]() {
        opts_ovl->apply_config(common_ovl->config);
        exit_code = run_overlap_scan(*common_ovl, *opts_ovl, *ovl_theta, *ovl_theta_prime,
                                     *ovl_kmax, *ovl_cutoff, *ovl_tol);
    });

    // weights
    auto* sub_w = app.add_subcommand("weights", "entanglement weight distribution W_n");
    auto opts_w = std::make_shared<OptionSet>(sub_w);
    auto common_w = std::make_shared<CommonOptions>();
    common_w->bind(sub_w, *opts_w);
    auto w_theta = std::make_shared<double>(0.5);
    auto w_nmax = std::make_shared<int>(50);
    opts_w->add("theta", *w_theta, "deformation angle");
    opts_w->add("nmax", *w_nmax, "largest pair number");
    sub_w->callback([=, &exit_code]() {
        opts_w->apply_config(common_w->config);
        exit_code = run_weights(*common_w, *opts_w, *w_theta, *w_nmax);
    });

    // free-energy
    auto* sub_fe = app.add_subcommand("free-energy", "F_A(theta) curve, stationary angle and Bose check");
    auto opts_fe = std::make_shared<OptionSet>(sub_fe);
    auto common_fe = std::make_shared<CommonOptions>();
    common_fe->bind(sub_fe, *opts_fe);
    auto fe_beta = std::make_shared<double>(1.0);
    auto fe_omega = std::make_shared<double>(1.0);
    auto fe_theta_max = std::make_shared<double>(1.5);
    auto fe_steps = std::make_shared<int>(150);
    auto fe_tol = std::make_shared<double>(1e-10);
    opts_fe->add("beta", *fe_beta, "inverse temperature");
    opts_fe->add("omega", *fe_omega, "mode frequency");
    opts_fe->add("theta-max", *fe_theta_max, "curve endpoint");
    opts_fe->add("steps", *fe_steps, "curve samples");
    opts_fe->add("tol", *fe_tol, "Bose-form tolerance");
    sub_fe->callback([=, &exit_code]() {
        opts_fe->apply_config(common_fe->config);
        exit_code = run_free_energy(*common_fe, *opts_fe, *fe_beta, *fe_omega,
                                    *fe_theta_max, *fe_steps, *fe_tol);
    });

    // entangle
    auto* sub_ent = app.add_subcommand("entangle", "sector weights, Schmidt ranks and reduced entropies");
    auto opts_ent = std::make_shared<OptionSet>(sub_ent);
    auto common_ent = std::make_shared<CommonOptions>();
    common_ent->bind(sub_ent, *opts_ent);
    auto ent_theta = std::make_shared<double>(0.5);
    auto ent_cutoff = std::make_shared<int>(16);
    auto ent_nmax = std::make_shared<int>(8);
    auto ent_tol = std::make_shared<double>(1e-8);
    opts_ent->add("theta", *ent_theta, "deformation angle");
    opts_ent->add("cutoff", *ent_cutoff, "per-factor truncation cutoff (>= 4)");
    opts_ent->add("nmax", *ent_nmax, "largest reported sector");
    opts_ent->add("tol", *ent_tol, "sector-weight tolerance");
    sub_ent->callback([=, &exit_code]() {
        opts_ent->apply_config(common_ent->config);
        exit_code = run_entangle(*common_ent, *opts_ent, *ent_theta, *ent_cutoff,
                                 *ent_nmax, *ent_tol);
    });

    // dissipate
    auto* sub_dis = app.add_subcommand("dissipate", "evolution trace for a named theta(t) schedule");
    auto opts_dis = std::make_shared<OptionSet>(sub_dis);
    auto common_dis = std::make_shared<CommonOptions>();
    common_dis->bind(sub_dis, *opts_dis);
    auto dis_schedule = std::make_shared<std::string>("linear");
    auto dis_theta0 = std::make_shared<double>(0.3);
    auto dis_gamma = std::make_shared<double>(0.05);
    auto dis_t0 = std::make_shared<double>(0.0);
    auto dis_dt = std::make_shared<double>(0.01);
    auto dis_steps = std::make_shared<int>(200);
    auto dis_beta = std::make_shared<double>(1.0);
    auto dis_beta_end = std::make_shared<double>(1.01);
    auto dis_omega = std::make_shared<double>(1.0);
    opts_dis->add("schedule", *dis_schedule, "constant, linear or bose");
    opts_dis->add("theta0", *dis_theta0, "initial angle (constant/linear)");
    opts_dis->add("gamma", *dis_gamma, "linear rate dtheta/dt");
    opts_dis->add("t0", *dis_t0, "grid start time");
    opts_dis->add("dt", *dis_dt, "grid spacing");
    opts_dis->add("steps", *dis_steps, "grid steps");
    opts_dis->add("beta", *dis_beta, "inverse temperature (start value for bose)");
    opts_dis->add("beta-end", *dis_beta_end, "final inverse temperature (bose)");
    opts_dis->add("omega", *dis_omega, "mode frequency");
    sub_dis->callback([=, &exit_code]() {
        opts_dis->apply_config(common_dis->config);
        exit_code = run_dissipate(*common_dis, *opts_dis, *dis_schedule, *dis_theta0,
                                  *dis_gamma, *dis_t0, *dis_dt, *dis_steps, *dis_beta,
                                  *dis_beta_end, *dis_omega);
    });

    // acceptance
    auto* sub_acc = app.add_subcommand("acceptance", "run the full verification battery");
    auto opts_acc = std::make_shared<OptionSet>(sub_acc);
    auto common_acc = std::make_shared<CommonOptions>();
    common_acc->bind(sub_acc, *opts_acc);
    sub_acc->callback([=, &exit_code]() {
        opts_acc->apply_config(common_acc->config);
        exit_code = run_acceptance(*common_acc, *opts_acc);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << "wall time: " << elapsed.count() << " s\n";
    return exit_code;
}
