// Verification battery runner: one line per criterion, nonzero exit on any
// failure. Criterion 10 exercises the installed CLI (path in QHOPF_CLI):
// identical configs must give byte-identical output and `acceptance` must
// exit 0.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qhopf/acceptance.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

struct CliCheck {
    bool pass;
    double residual;
    std::string detail;
};

CliCheck cli_determinism() {
    const char* cli = std::getenv("QHOPF_CLI");
    if (!cli) return {false, 1.0, "QHOPF_CLI not set"};

    std::string tmp = "acceptance_cli_tmp";
    std::string config = tmp + "/config.json";
    if (std::system(("rm -rf " + tmp + " && mkdir -p " + tmp).c_str()) != 0)
        return {false, 1.0, "could not create scratch directory"};
    {
        std::ofstream out(config);
        out << "{\"theta\": 0.4, \"cutoff\": 16, \"format\": \"csv\"}\n";
    }

    int rc1 = run_cli(cli, "vacuum --config " + config + " --output " + tmp + "/run1.csv");
    int rc2 = run_cli(cli, "vacuum --config " + config + " --output " + tmp + "/run2.csv");
    if (rc1 != 0 || rc2 != 0)
        return {false, 1.0, "vacuum run exited " + std::to_string(rc1) + "/" + std::to_string(rc2)};

    std::string run1 = read_file(tmp + "/run1.csv");
    std::string run2 = read_file(tmp + "/run2.csv");
    if (run1.empty() || run1 != run2)
        return {false, 1.0, "repeated vacuum runs are not byte-identical"};

    // flags must override the config file
    int rc3 = run_cli(cli, "vacuum --config " + config + " --theta 0.5 --output " + tmp + "/run3.csv");
    std::string run3 = read_file(tmp + "/run3.csv");
    if (rc3 != 0 || run3.empty() || run3 == run1)
        return {false, 1.0, "flag override did not change the output"};

    int rc_acc = run_cli(cli, "acceptance --output " + tmp + "/criteria.csv");
    if (rc_acc != 0)
        return {false, double(rc_acc), "acceptance subcommand exited " + std::to_string(rc_acc)};

    (void)std::system(("rm -rf " + tmp).c_str());
    return {true, 0.0, "byte-identical reruns, flag override, acceptance exit 0"};
}

}  // namespace

int main() {
    int failures = 0;

    for (const qhopf::CriterionResult& r : qhopf::run_acceptance_criteria()) {
        std::printf("[%s] criterion %d: %s (residual %.3e, tol %.0e)%s%s\n",
                    r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.residual,
                    r.tolerance, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.pass) ++failures;
    }

    CliCheck cli = cli_determinism();
    std::printf("[%s] criterion 10: cli determinism and config handling -- %s\n",
                cli.pass ? "PASS" : "FAIL", cli.detail.c_str());
    if (!cli.pass) ++failures;

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
