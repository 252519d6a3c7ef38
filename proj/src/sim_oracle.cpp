#include "dicke/sim_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dicke/optimal_transform.hpp"
#include "dicke/schmidt.hpp"

namespace dicke {

namespace {

int qubits_for_dimension(std::int64_t dimension, const char* what) {
  int bits = 0;
  while ((std::int64_t{1} << bits) < dimension) {
    ++bits;
  }
  if ((std::int64_t{1} << bits) != dimension) {
    throw std::invalid_argument(std::string(what) + " dimension is not a power of two");
  }
  return bits;
}

}  // namespace

StateVector apply_on_subsystem(const StateVector& state, const DenseMatrix& full_op,
                               int input_qubits) {
  const int k_in = input_qubits;
  if (k_in < 0 || k_in > state.qubit_count) {
    throw std::invalid_argument("operator input block exceeds the state");
  }
  if (full_op.cols != (std::int64_t{1} << k_in)) {
    throw std::invalid_argument("operator columns do not match the input block");
  }
  const int k_out = qubits_for_dimension(full_op.rows, "operator row");
  const int out_qubits = state.qubit_count - k_in + k_out;
  ensure_vector_fits(out_qubits);

  StateVector out;
  out.qubit_count = out_qubits;
  out.amplitudes.assign(std::size_t{1} << out_qubits, 0.0);
  const std::uint64_t remote_count = std::uint64_t{1} << (state.qubit_count - k_in);
  for (std::uint64_t x = 0; x < remote_count; ++x) {
    for (std::int64_t a_out = 0; a_out < full_op.rows; ++a_out) {
      double amplitude = 0.0;
      for (std::int64_t a_in = 0; a_in < full_op.cols; ++a_in) {
        amplitude += full_op.at(a_out, a_in) *
                     state.amplitudes[(x << k_in) | static_cast<std::uint64_t>(a_in)];
      }
      out.amplitudes[(x << k_out) | static_cast<std::uint64_t>(a_out)] = amplitude;
    }
  }
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.qubit_count != b.qubit_count) {
    throw std::invalid_argument("fidelity of states on different qubit counts");
  }
  double overlap = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    overlap += a.amplitudes[i] * b.amplitudes[i];
  }
  return overlap * overlap;
}

DenseMatrix reduced_density_accessible(const StateVector& state, int cut) {
  if (cut < 0 || cut > state.qubit_count) {
    throw std::invalid_argument("cut outside [0, qubit_count]");
  }
  ensure_matrix_fits(cut, cut);
  const std::int64_t dim = std::int64_t{1} << cut;
  const std::uint64_t remote_count = std::uint64_t{1} << (state.qubit_count - cut);
  DenseMatrix rho(dim, dim);
  for (std::uint64_t x = 0; x < remote_count; ++x) {
    const std::uint64_t base = x << cut;
    for (std::int64_t a = 0; a < dim; ++a) {
      const double left = state.amplitudes[base | static_cast<std::uint64_t>(a)];
      if (left == 0.0) {
        continue;
      }
      for (std::int64_t b = 0; b < dim; ++b) {
        rho.at(a, b) += left * state.amplitudes[base | static_cast<std::uint64_t>(b)];
      }
    }
  }
  return rho;
}

DenseMatrix reduced_density_remote(const StateVector& state, int cut) {
  if (cut < 0 || cut > state.qubit_count) {
    throw std::invalid_argument("cut outside [0, qubit_count]");
  }
  const int remote = state.qubit_count - cut;
  ensure_matrix_fits(remote, remote);
  const std::int64_t dim = std::int64_t{1} << remote;
  const std::uint64_t block = std::uint64_t{1} << cut;
  DenseMatrix rho(dim, dim);
  for (std::uint64_t a = 0; a < block; ++a) {
    for (std::int64_t x = 0; x < dim; ++x) {
      const double left = state.amplitudes[(static_cast<std::uint64_t>(x) << cut) | a];
      if (left == 0.0) {
        continue;
      }
      for (std::int64_t y = 0; y < dim; ++y) {
        rho.at(x, y) += left * state.amplitudes[(static_cast<std::uint64_t>(y) << cut) | a];
      }
    }
  }
  return rho;
}

std::vector<double> numeric_schmidt(const StateVector& state, int cut, double threshold) {
  if (cut < 1 || cut > state.qubit_count - 1) {
    throw std::invalid_argument("cut must leave at least one qubit on each side");
  }
  const DenseMatrix rho = reduced_density_accessible(state, cut);
  Eigen::MatrixXd matrix(rho.rows, rho.cols);
  for (std::int64_t r = 0; r < rho.rows; ++r) {
    for (std::int64_t c = 0; c < rho.cols; ++c) {
      matrix(r, c) = rho.at(r, c);
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed on the reduced density matrix");
  }
  std::vector<double> eigenvalues;
  for (Eigen::Index i = solver.eigenvalues().size(); i-- > 0;) {
    const double value = solver.eigenvalues()[i];
    if (value < threshold) {
      break;
    }
    eigenvalues.push_back(value);
  }
  return eigenvalues;
}

namespace {

double spectrum_deviation(const StateVector& input, const TransformTask& task) {
  if (task.access_count < 1 || task.access_count > task.initial_qubits - 1) {
    return 0.0;
  }
  const std::vector<double> numeric = numeric_schmidt(input, task.access_count);
  const SchmidtSpectrum exact =
      schmidt_spectrum(task.initial_qubits, task.initial_excitations, task.access_count);
  std::vector<double> expected;
  for (const Rational& lambda : exact.lambdas) {
    expected.push_back(to_double(lambda));
  }
  std::sort(expected.begin(), expected.end(), std::greater<double>());
  if (numeric.size() != expected.size()) {
    return 1.0;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    worst = std::max(worst, std::abs(numeric[i] - expected[i]));
  }
  return worst;
}

}  // namespace

VerificationReport verify_task(const TransformTask& task, const VerificationTolerances& tol) {
  VerificationReport report;
  report.subject = "task";
  report.task = task;
  report.tolerances = tol;

  const PmaxResult bound = pmax(task);
  report.expected_feasible = feasible(task).feasible;
  report.expected_probability = to_double(bound.value);

  const StateVector input = dicke_vector({task.initial_qubits, task.initial_excitations});
  report.spectrum_error = spectrum_deviation(input, task);

  if (!report.expected_feasible) {
    bool refused = false;
    try {
      if (task.final_access() == 0) {
        synthesize_deletion_measurement(task);
      } else {
        synthesize_optimal_gate(task);
      }
    } catch (const InfeasibleError&) {
      refused = true;
    }
    report.passed = refused && bound.value == 0;
    return report;
  }

  const GateOperator gate = task.final_access() == 0 ? synthesize_deletion_measurement(task)
                                                     : synthesize_optimal_gate(task);
  const StateVector out = apply_on_subsystem(input, embed_full(gate), task.access_count);
  report.success_probability = out.norm_squared();
  const StateVector target = dicke_vector({task.final_qubits(), task.final_excitations()});
  report.fidelity = fidelity(out.normalized(), target);
  report.passed =
      std::abs(report.success_probability - report.expected_probability) <= tol.probability &&
      report.fidelity >= 1.0 - tol.fidelity;
  return report;
}

VerificationReport verify_gate_on(const GateOperator& gate, int qubit_count, int excitations,
                                  const Rational& expected_probability,
                                  const VerificationTolerances& tol) {
  VerificationReport report;
  report.subject = "gate";
  report.tolerances = tol;
  report.expected_feasible = true;
  report.expected_probability = to_double(expected_probability);

  if (gate.input_qubits > qubit_count) {
    throw std::invalid_argument("gate accesses more qubits than the state has");
  }
  const int final_qubits = qubit_count - gate.input_qubits + gate.output_qubits;
  const int final_excitations = excitations + gate.excitation_shift;
  if (final_qubits < 1 || final_excitations < 0 || final_excitations > final_qubits) {
    throw std::invalid_argument("gate shape does not lead to a valid target state");
  }

  const StateVector input = dicke_vector({qubit_count, excitations});
  const StateVector out = apply_on_subsystem(input, embed_full(gate), gate.input_qubits);
  report.success_probability = out.norm_squared();
  if (report.success_probability > 0.0) {
    const StateVector target = dicke_vector({final_qubits, final_excitations});
    report.fidelity = fidelity(out.normalized(), target);
  }
  report.passed =
      std::abs(report.success_probability - report.expected_probability) <= tol.probability &&
      report.fidelity >= 1.0 - tol.fidelity;
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j{
      {"subject", report.subject},
      {"expected_feasible", report.expected_feasible},
      {"expected_probability", report.expected_probability},
      {"success_probability", report.success_probability},
      {"fidelity", report.fidelity},
      {"spectrum_error", report.spectrum_error},
      {"passed", report.passed},
      {"tolerances",
       {{"probability", report.tolerances.probability}, {"fidelity", report.tolerances.fidelity}}},
  };
  if (report.task.has_value()) {
    j["task"] = task_to_json(*report.task);
  }
  return j;
}

}  // namespace dicke
