#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhopf/bogoliubov.hpp"
#include "qhopf/dissipation.hpp"
#include "qhopf/fock.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/thermofield.hpp"

namespace py = pybind11;
using namespace qhopf;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truncated-Fock-space numerics for q-deformed mode pairs, "
              "Bogoliubov-transformed vacua, entropy and free energy";

    py::class_<SpaceDescriptor>(m, "SpaceDescriptor")
        .def_readonly("total_dim", &SpaceDescriptor::total_dim)
        .def("factor_index", &SpaceDescriptor::factor_index)
        .def("flat_index", &SpaceDescriptor::flat_index)
        .def("occupations", &SpaceDescriptor::occupations)
        .def("__eq__", [](const SpaceDescriptor& a, const SpaceDescriptor& b) { return a == b; })
        .def("labels", [](const SpaceDescriptor& s) {
            std::vector<std::string> out;
            for (const auto& f : s.factors) out.push_back(f.label);
            return out;
        })
        .def("cutoffs", [](const SpaceDescriptor& s) {
            std::vector<int> out;
            for (const auto& f : s.factors) out.push_back(f.cutoff);
            return out;
        });

    py::class_<Operator>(m, "Operator")
        .def_readonly("space", &Operator::space)
        .def_readonly("matrix", &Operator::matrix)
        .def("__add__", [](const Operator& a, const Operator& b) { return a + b; })
        .def("__sub__", [](const Operator& a, const Operator& b) { return a - b; })
        .def("__matmul__", [](const Operator& a, const Operator& b) { return a * b; })
        .def("__mul__", [](const Operator& a, Complex c) { return c * a; })
        .def("__rmul__", [](const Operator& a, Complex c) { return c * a; });

    py::class_<StateVector>(m, "StateVector")
        .def_readonly("space", &StateVector::space)
        .def_readonly("amplitudes", &StateVector::amplitudes)
        .def_readonly("normalized", &StateVector::normalized);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_readonly("space", &DensityMatrix::space)
        .def_readonly("matrix", &DensityMatrix::matrix);

    m.def("make_space", &make_space, py::arg("modes"));
    m.def("identity_op", &identity_op);
    m.def("annihilator", &annihilator, py::arg("space"), py::arg("label"));
    m.def("creator", &creator, py::arg("space"), py::arg("label"));
    m.def("number_op", &number_op, py::arg("space"), py::arg("label"));
    m.def("adjoint", &adjoint);
    m.def("twisted_adjoint", &twisted_adjoint);
    m.def("embed", &embed, py::arg("op"), py::arg("space"), py::arg("factor_position"));
    m.def("commutator", &commutator);
    m.def("matrix_exp", &matrix_exp);
    m.def("apply", &apply);
    m.def("apply_exp", &apply_exp);
    m.def("inner", &inner);
    m.def("expectation", &expectation);
    m.def("partial_trace",
          py::overload_cast<const StateVector&, const std::vector<int>&>(&partial_trace),
          py::arg("state"), py::arg("keep_factors"));
    m.def("partial_trace_dm",
          py::overload_cast<const DensityMatrix&, const std::vector<int>&>(&partial_trace),
          py::arg("dm"), py::arg("keep_factors"));
    m.def("von_neumann_entropy", &von_neumann_entropy);
    m.def("truncation_tail", &truncation_tail);
    m.def("cutoff_for_tail", &cutoff_for_tail);

    py::class_<DeformationParameter>(m, "DeformationParameter")
        .def_static("from_theta", &DeformationParameter::from_theta)
        .def_static("from_q", &DeformationParameter::from_q)
        .def_readonly("q", &DeformationParameter::q)
        .def_readonly("theta", &DeformationParameter::theta);

    m.def("q_number", &q_number, py::arg("x"), py::arg("q"));
    m.def("two_mode_space", &two_mode_space, py::arg("cutoff"));
    m.def("coproduct_deformed_a", &coproduct_deformed_a);
    m.def("coproduct_deformed_a_dag", &coproduct_deformed_a_dag);

    py::enum_<Generator>(m, "Generator")
        .value("A", Generator::A)
        .value("ADag", Generator::ADag)
        .value("H", Generator::H)
        .value("N", Generator::N);
    m.def("coproduct_primitive", &coproduct_primitive);

    py::class_<BogoliubovPair>(m, "BogoliubovPair")
        .def_readonly("theta", &BogoliubovPair::theta)
        .def_readonly("A_theta", &BogoliubovPair::A_theta)
        .def_readonly("B_theta", &BogoliubovPair::B_theta)
        .def_readonly("generator_G", &BogoliubovPair::generator_G);

    m.def("make_pair", &make_pair, py::arg("theta"), py::arg("two_factor_space"),
          py::arg("form_tolerance") = 1e-12);
    m.def("translate", &translate);
    m.def("translation_residual", &translation_residual);
    m.def("pair_generator", &pair_generator);

    py::class_<ModeSpec>(m, "ModeSpec")
        .def(py::init([](const std::string& label, double omega, double theta) {
                 return ModeSpec{label, omega, theta};
             }),
             py::arg("label"), py::arg("omega"), py::arg("theta"))
        .def_readonly("label", &ModeSpec::label)
        .def_readonly("omega", &ModeSpec::omega)
        .def_readonly("theta", &ModeSpec::theta);

    py::enum_<Sector>(m, "Sector").value("A", Sector::A).value("B", Sector::B);

    py::class_<ThetaVacuum>(m, "ThetaVacuum")
        .def_readonly("modes", &ThetaVacuum::modes)
        .def_readonly("mode_states", &ThetaVacuum::mode_states);

    m.def("vacuum_exponential",
          py::overload_cast<double, int>(&vacuum_exponential),
          py::arg("theta"), py::arg("cutoff"));
    m.def("vacuum_closed_pair",
          py::overload_cast<double, int>(&vacuum_closed_pair),
          py::arg("theta"), py::arg("cutoff"));
    m.def("vacuum_four_mode", &vacuum_four_mode, py::arg("theta"), py::arg("cutoff"));
    m.def("overlap", &overlap);
    m.def("per_mode_overlap", &per_mode_overlap);
    m.def("entropy_operator", &entropy_operator);
    m.def("entropy_expectation", &entropy_expectation);
    m.def("entropy_closed_form", &entropy_closed_form);
    m.def("free_energy",
          py::overload_cast<double, double, double>(&free_energy),
          py::arg("theta"), py::arg("omega"), py::arg("beta"));
    m.def("stationary_theta", &stationary_theta, py::arg("beta"), py::arg("omega"));
    m.def("bose_occupancy", &bose_occupancy);

    py::class_<WeightDistribution>(m, "WeightDistribution")
        .def_readonly("n_max", &WeightDistribution::n_max)
        .def("weight", py::overload_cast<int>(&WeightDistribution::weight, py::const_))
        .def("weight_multi",
             py::overload_cast<const std::vector<int>&>(&WeightDistribution::weight,
                                                        py::const_))
        .def("partial_sum", &WeightDistribution::partial_sum)
        .def("tail", &WeightDistribution::tail);
    m.def("weights", &weights, py::arg("theta_spectrum"), py::arg("n_max"));

    py::class_<SectorReport>(m, "SectorReport")
        .def_readonly("n", &SectorReport::n)
        .def_readonly("sector_weight", &SectorReport::sector_weight)
        .def_readonly("expected_weight", &SectorReport::expected_weight)
        .def_readonly("schmidt_rank", &SectorReport::schmidt_rank)
        .def_readonly("reduced_entropy", &SectorReport::reduced_entropy);
    py::class_<EntanglementReport>(m, "EntanglementReport")
        .def_readonly("sectors", &EntanglementReport::sectors)
        .def_readonly("total_reduced_entropy", &EntanglementReport::total_reduced_entropy);
    m.def("entanglement_report", &entanglement_report, py::arg("vacuum"),
          py::arg("n_report"));

    py::class_<ThetaSchedule>(m, "ThetaSchedule")
        .def_static("constant", &ThetaSchedule::constant)
        .def_static("linear", &ThetaSchedule::linear)
        .def_static("bose_quasistatic", &ThetaSchedule::bose_quasistatic)
        .def_readonly("thetas", &ThetaSchedule::thetas);

    py::class_<TraceRecord>(m, "TraceRecord")
        .def_readonly("t", &TraceRecord::t)
        .def_readonly("theta", &TraceRecord::theta)
        .def_readonly("S_A", &TraceRecord::S_A)
        .def_readonly("S_B", &TraceRecord::S_B)
        .def_readonly("S_A_minus_S_B", &TraceRecord::S_A_minus_S_B)
        .def_readonly("E_A", &TraceRecord::E_A)
        .def_readonly("F_A", &TraceRecord::F_A)
        .def_readonly("dQ_entropy", &TraceRecord::dQ_entropy)
        .def_readonly("dQ_energy", &TraceRecord::dQ_energy);
    py::class_<EvolutionTrace>(m, "EvolutionTrace")
        .def_readonly("records", &EvolutionTrace::records)
        .def_readonly("beta", &EvolutionTrace::beta);

    m.def("heat_term", &heat_term);
    m.def("heisenberg_residual", &heisenberg_residual, py::arg("schedule"),
          py::arg("step_index"), py::arg("omega"), py::arg("cutoff"),
          py::arg("dt_fd") = 1e-4, py::arg("max_occ") = -1);
    m.def("evolve",
          py::overload_cast<const ThetaSchedule&, const std::vector<ModeSpec>&, double>(
              &evolve),
          py::arg("schedule"), py::arg("modes"), py::arg("beta"));
    m.def("evolve_varying_beta",
          py::overload_cast<const ThetaSchedule&, const std::vector<ModeSpec>&,
                            const std::vector<double>&>(&evolve),
          py::arg("schedule"), py::arg("modes"), py::arg("betas"));

    py::class_<ConservationResult>(m, "ConservationResult")
        .def_readonly("comm_S_norm", &ConservationResult::comm_S_norm)
        .def_readonly("comm_N_norm", &ConservationResult::comm_N_norm)
        .def_readonly("expectation", &ConservationResult::expectation);
    m.def("check_sA_minus_sB", &check_sA_minus_sB, py::arg("theta"), py::arg("cutoff"));
}
