#include "dicke/optimal_transform.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dicke/combinatorics.hpp"
#include "dicke/state_vector.hpp"

namespace dicke {

namespace {

TransformTask require_valid(const TransformTask& task) {
  const TaskValidation validation =
      validate_task(task.initial_qubits, task.initial_excitations, task.access_count,
                    task.qubit_change, task.excitation_change);
  if (!validation.ok()) {
    throw std::invalid_argument("invalid task: " + validation.message);
  }
  return *validation.task;
}

void require_feasible(const TransformTask& task) {
  if (!feasible(task).feasible) {
    throw InfeasibleError("task admits no exact success branch");
  }
}

}  // namespace

PmaxResult pmax(const TransformTask& raw) {
  const TransformTask task = require_valid(raw);
  PmaxResult result;
  result.initial_spectrum =
      schmidt_spectrum(task.initial_qubits, task.initial_excitations, task.access_count);
  result.final_spectrum =
      schmidt_spectrum(task.final_qubits(), task.final_excitations(), task.final_access());
  result.value = 0;
  if (!support_inclusion(task)) {
    return result;
  }
  for (int j = result.final_spectrum.alpha; j <= result.final_spectrum.beta; ++j) {
    const Rational ratio = result.initial_spectrum.lambda(j) / result.final_spectrum.lambda(j);
    if (!result.argmin_j.has_value() || ratio < result.value) {
      result.value = ratio;
      result.argmin_j = j;
    }
  }
  return result;
}

GateOperator synthesize_optimal_gate(const TransformTask& raw) {
  const TransformTask task = require_valid(raw);
  if (task.final_access() < 1) {
    throw std::invalid_argument("accessible block is fully deleted; use the measurement form");
  }
  require_feasible(task);
  const PmaxResult bound = pmax(task);
  GateOperator gate = GateOperator::zero(task.access_count, task.final_access(),
                                         task.excitation_change);
  for (int j = bound.final_spectrum.alpha; j <= bound.final_spectrum.beta; ++j) {
    const int u = task.initial_excitations - j;
    gate.radicand(u + task.excitation_change, u) =
        bound.value * bound.final_spectrum.lambda(j) / bound.initial_spectrum.lambda(j);
  }
  gate.normalization_weight = task.initial_excitations - *bound.argmin_j;
  return gate;
}

GateOperator synthesize_deletion_measurement(const TransformTask& raw) {
  const TransformTask task = require_valid(raw);
  if (task.final_access() != 0) {
    throw std::invalid_argument("measurement form requires the whole accessible block deleted");
  }
  require_feasible(task);
  const int deleted_ups = -task.excitation_change;
  GateOperator gate = GateOperator::zero(task.access_count, 0, task.excitation_change);
  gate.radicand(0, deleted_ups) = 1;
  gate.normalization_weight = deleted_ups;
  return gate;
}

DenseMatrix embed_full(const GateOperator& gate) {
  ensure_matrix_fits(gate.output_qubits, gate.input_qubits);
  std::vector<double> row_scale(gate.rows());
  std::vector<double> col_scale(gate.cols());
  for (int v = 0; v < gate.rows(); ++v) {
    row_scale[v] = 1.0 / std::sqrt(to_double(Rational(binomial(gate.output_qubits, v))));
  }
  for (int u = 0; u < gate.cols(); ++u) {
    col_scale[u] = 1.0 / std::sqrt(to_double(Rational(binomial(gate.input_qubits, u))));
  }
  std::vector<double> entries(gate.radicands.size());
  for (int v = 0; v < gate.rows(); ++v) {
    for (int u = 0; u < gate.cols(); ++u) {
      entries[static_cast<std::size_t>(v) * gate.cols() + u] =
          gate.entry(v, u) * row_scale[v] * col_scale[u];
    }
  }
  DenseMatrix full(std::int64_t{1} << gate.output_qubits, std::int64_t{1} << gate.input_qubits);
  for (std::int64_t r = 0; r < full.rows; ++r) {
    const int v = weight_of_bitstring(static_cast<std::uint64_t>(r));
    for (std::int64_t c = 0; c < full.cols; ++c) {
      const int u = weight_of_bitstring(static_cast<std::uint64_t>(c));
      full.at(r, c) = entries[static_cast<std::size_t>(v) * gate.cols() + u];
    }
  }
  return full;
}

}  // namespace dicke
