#ifndef QHOPF_ACCEPTANCE_HPP
#define QHOPF_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace qhopf {

struct CriterionResult {
    int index;
    std::string name;
    double residual;   // worst measured deviation
    double tolerance;
    bool pass;
    std::string detail;
};

// The numerical verification battery (deformed ccr closure, Bogoliubov
// theorem check, generator/translation, vacuum equivalence, inequivalence
// curve, entropy relations, thermodynamics, entanglement weights,
// conservation). Deterministic; every tolerance is pinned here.
std::vector<CriterionResult> run_acceptance_criteria();

}  // namespace qhopf

#endif
