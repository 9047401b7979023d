#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agsim/analog_search.hpp"
#include "agsim/coherence.hpp"
#include "agsim/entanglement.hpp"
#include "agsim/grover_discrete.hpp"
#include "agsim/monogamy.hpp"
#include "agsim/qmath.hpp"
#include "agsim/sweep.hpp"
#include "agsim/types.hpp"

namespace py = pybind11;
using namespace agsim;

namespace {

Bipartition make_part(int n_qubits, const std::vector<int>& kept) {
  return Bipartition{n_qubits, kept};
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuous-time quantum search with coherence and entanglement diagnostics";
  m.attr("__version__") = "0.1.0";

  py::class_<SearchParams>(m, "SearchParams")
      .def_static("uniform_overlap", &SearchParams::uniform_overlap, py::arg("n_qubits"),
                  py::arg("energy"), py::arg("marked") = 0)
      .def_static("with_overlap", &SearchParams::with_overlap, py::arg("n_qubits"),
                  py::arg("energy"), py::arg("overlap"), py::arg("marked") = 0)
      .def_readonly("n_qubits", &SearchParams::n_qubits)
      .def_readonly("dim", &SearchParams::dim)
      .def_readonly("energy", &SearchParams::energy)
      .def_readonly("overlap", &SearchParams::overlap)
      .def_readonly("overlap_sq", &SearchParams::overlap_sq)
      .def_readonly("marked", &SearchParams::marked)
      .def_readonly("uniform", &SearchParams::uniform)
      .def("__repr__", [](const SearchParams& p) {
        return "SearchParams(n_qubits=" + std::to_string(p.n_qubits) +
               ", energy=" + std::to_string(p.energy) +
               ", overlap=" + std::to_string(p.overlap) + ")";
      });

  py::class_<TwoLevelState>(m, "TwoLevelState")
      .def_readonly("alpha", &TwoLevelState::alpha)
      .def_readonly("beta", &TwoLevelState::beta);

  m.def("hamiltonian_full", &hamiltonian_full, py::arg("params"));
  m.def("hamiltonian_2d", &hamiltonian_2d, py::arg("params"));
  m.def("evolve_closed_form", &evolve_closed_form, py::arg("params"), py::arg("t"));
  m.def("success_probability", &success_probability, py::arg("params"), py::arg("t"));
  m.def("peak_time", &peak_time, py::arg("params"));
  m.def("start_state", &start_state, py::arg("params"));
  m.def("embed_full", &embed_full, py::arg("state"), py::arg("params"));
  m.def("apply_hamiltonian", &apply_hamiltonian, py::arg("params"), py::arg("psi"));
  m.def(
      "evolve_numeric",
      [](const SearchParams& p, double t, double dt, double error_injection) {
        IntegratorOptions opts;
        opts.dt = dt;
        opts.error_injection = error_injection;
        return evolve_numeric(p, t, opts);
      },
      py::arg("params"), py::arg("t"), py::arg("dt") = 0.0,
      py::arg("error_injection") = 0.0);

  m.def("outer", &outer, py::arg("psi"));
  m.def(
      "reduced_density_matrix",
      [](const StateVector& psi, int n_qubits, const std::vector<int>& kept) {
        return reduced_density_matrix(psi, make_part(n_qubits, kept));
      },
      py::arg("psi"), py::arg("n_qubits"), py::arg("kept"));
  m.def("hermitian_eigvals", &hermitian_eigvals, py::arg("matrix"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"),
        py::arg("log_base") = 2.0);
  m.def("binary_entropy", &binary_entropy, py::arg("p"), py::arg("log_base") = 2.0);
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));
  m.def("trace_distance_pure", &trace_distance_pure, py::arg("a"), py::arg("b"));

  m.def("l1_coherence", &l1_coherence, py::arg("rho"));
  m.def("rel_ent_coherence", &rel_ent_coherence, py::arg("rho"), py::arg("log_base") = 2.0);
  m.def("l1_from_probability", &l1_from_probability, py::arg("p"));
  m.def("rel_ent_from_probability", &rel_ent_from_probability, py::arg("p"),
        py::arg("log_base") = 2.0);
  m.def(
      "coherence_closed_form",
      [](const SearchParams& p, double t, double log_base) {
        const CoherencePair c = coherence_closed_form(p, t, log_base);
        return py::make_tuple(c.l1, c.rel_ent);
      },
      py::arg("params"), py::arg("t"), py::arg("log_base") = 2.0);
  m.def("l1_full_basis_closed", &l1_full_basis_closed, py::arg("params"), py::arg("t"));

  m.def("single_qubit_rdm_closed", &single_qubit_rdm_closed, py::arg("params"),
        py::arg("t"));
  m.def(
      "rdm_eigvals_closed",
      [](const SearchParams& p, double t) {
        const auto eig = rdm_eigvals_closed(p, t);
        return py::make_tuple(eig[0], eig[1]);
      },
      py::arg("params"), py::arg("t"));
  m.def(
      "entanglement_entropy",
      [](const StateVector& psi, int n_qubits, const std::vector<int>& kept,
         double log_base) {
        return entanglement_entropy(psi, make_part(n_qubits, kept), log_base);
      },
      py::arg("psi"), py::arg("n_qubits"), py::arg("kept"), py::arg("log_base") = 2.0);
  m.def(
      "tangle",
      [](const StateVector& psi, int n_qubits, const std::vector<int>& kept) {
        return tangle(psi, make_part(n_qubits, kept));
      },
      py::arg("psi"), py::arg("n_qubits"), py::arg("kept"));
  m.def("concurrence_one_vs_rest", &concurrence_one_vs_rest, py::arg("psi"),
        py::arg("n_qubits"));
  m.def("concurrence_one_vs_rest_closed", &concurrence_one_vs_rest_closed,
        py::arg("params"), py::arg("t"));
  m.def("concurrence_rate_closed", &concurrence_rate_closed, py::arg("params"),
        py::arg("t"));
  m.def("wootters_concurrence", &wootters_concurrence, py::arg("rho"));
  m.def("pair_concurrence_closed", &pair_concurrence_closed, py::arg("params"),
        py::arg("t"));
  m.def("eof_from_concurrence", &eof_from_concurrence, py::arg("c"),
        py::arg("log_base") = 2.0);

  py::class_<MonogamyReport>(m, "MonogamyReport")
      .def_readonly("t", &MonogamyReport::t)
      .def_readonly("c_sq_one_vs_rest", &MonogamyReport::c_sq_one_vs_rest)
      .def_readonly("sum_pair_c_sq", &MonogamyReport::sum_pair_c_sq)
      .def_readonly("delta_c", &MonogamyReport::delta_c)
      .def_readonly("delta_eof_sq", &MonogamyReport::delta_eof_sq);
  m.def("ckw_check", &ckw_check, py::arg("psi"), py::arg("n_qubits"),
        py::arg("log_base") = 2.0);
  m.def("monogamy_score_closed", &monogamy_score_closed, py::arg("params"), py::arg("t"));
  m.def("monogamy_score_eof_sq", &monogamy_score_eof_sq, py::arg("psi"),
        py::arg("n_qubits"), py::arg("log_base") = 2.0);
  m.def("monogamy_delta_unsquared", &monogamy_delta_unsquared, py::arg("psi"),
        py::arg("n_qubits"));

  py::class_<GroverRow>(m, "GroverRow")
      .def_readonly("k", &GroverRow::k)
      .def_readonly("success_prob", &GroverRow::success_prob)
      .def_readonly("concurrence", &GroverRow::concurrence);
  py::class_<GroverTrace>(m, "GroverTrace")
      .def_readonly("rows", &GroverTrace::rows)
      .def("delta_c", &GroverTrace::delta_c);
  m.def("grover_step", &grover_step, py::arg("psi"), py::arg("marked"));
  m.def("grover_trace", &grover_trace, py::arg("params"), py::arg("k_max"));
  m.def("optimal_iterations", &optimal_iterations, py::arg("dim"));

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("t", &SweepRecord::t)
      .def_readonly("P", &SweepRecord::P)
      .def_readonly("C_l1", &SweepRecord::C_l1)
      .def_readonly("C_r", &SweepRecord::C_r)
      .def_readonly("S_ent", &SweepRecord::S_ent)
      .def_readonly("C_1_rest", &SweepRecord::C_1_rest)
      .def_readonly("dC_dt", &SweepRecord::dC_dt)
      .def_readonly("C_pair", &SweepRecord::C_pair)
      .def_readonly("delta_C", &SweepRecord::delta_C)
      .def_readonly("delta_EoF2", &SweepRecord::delta_EoF2);
  m.def("time_grid", &time_grid, py::arg("t_max"), py::arg("steps"));
  m.def("compute_sweep", &compute_sweep, py::arg("params"), py::arg("t_max"),
        py::arg("steps"), py::arg("log_base") = 2.0);
}
