#include "dicke/universal_gates.hpp"

#include <stdexcept>
#include <vector>

#include "dicke/combinatorics.hpp"
#include "dicke/feasibility.hpp"
#include "dicke/optimal_transform.hpp"
#include "dicke/schmidt.hpp"

namespace dicke {

namespace {

bool admissible(const UniversalGateSpec& spec, int u) {
  const int v = u + spec.excitation_change;
  return u >= 0 && u <= spec.access_count && v >= 0 &&
         v <= spec.access_count + spec.qubit_change;
}

Rational weight_ratio(const UniversalGateSpec& spec, int u) {
  return Rational(binomial(spec.access_count + spec.qubit_change, u + spec.excitation_change)) /
         Rational(binomial(spec.access_count, u));
}

}  // namespace

GateOperator universal_gate(const UniversalGateSpec& spec) {
  if (spec.access_count < 0 || spec.access_count + spec.qubit_change < 1) {
    throw std::invalid_argument("universal gate needs k >= 0 and k + n >= 1");
  }
  std::vector<int> admissible_weights;
  Rational best_ratio = 0;
  int best_weight = -1;
  for (int u = 0; u <= spec.access_count; ++u) {
    if (!admissible(spec, u)) {
      continue;
    }
    admissible_weights.push_back(u);
    const Rational ratio = weight_ratio(spec, u);
    if (best_weight < 0 || ratio > best_ratio) {
      best_ratio = ratio;
      best_weight = u;
    }
  }
  if (admissible_weights.empty()) {
    throw std::invalid_argument("no admissible input weight for this shape");
  }
  if (spec.normalization_weight.has_value()) {
    const int u = *spec.normalization_weight;
    if (!admissible(spec, u)) {
      throw std::invalid_argument("normalization weight is not admissible");
    }
    if (weight_ratio(spec, u) != best_ratio) {
      throw std::invalid_argument("normalization weight would break the contraction property");
    }
    best_weight = u;
  }
  GateOperator gate = GateOperator::zero(spec.access_count,
                                         spec.access_count + spec.qubit_change,
                                         spec.excitation_change);
  for (const int u : admissible_weights) {
    gate.radicand(u + spec.excitation_change, u) = weight_ratio(spec, u) / best_ratio;
  }
  gate.universal = true;
  gate.normalization_weight = best_weight;
  return gate;
}

Rational universal_success_probability(const UniversalGateSpec& spec, int qubit_count,
                                       int excitations) {
  if (qubit_count < 1 || excitations < 0 || excitations > qubit_count ||
      spec.access_count > qubit_count) {
    throw std::invalid_argument("state does not fit the gate's access block");
  }
  const GateOperator gate = universal_gate(spec);
  const SchmidtSpectrum spectrum = schmidt_spectrum(qubit_count, excitations, spec.access_count);
  Rational probability = 0;
  for (int j = spectrum.alpha; j <= spectrum.beta; ++j) {
    const int u = excitations - j;
    if (!admissible(spec, u)) {
      continue;
    }
    probability += spectrum.lambda(j) * gate.radicand(u + spec.excitation_change, u);
  }
  return probability;
}

Rational optimality_gap(const UniversalGateSpec& spec, int qubit_count, int excitations) {
  const TaskValidation validation =
      validate_task(qubit_count, excitations, spec.access_count, spec.qubit_change,
                    spec.excitation_change);
  if (!validation.ok()) {
    throw std::invalid_argument("invalid task: " + validation.message);
  }
  if (!feasible(*validation.task).feasible) {
    throw InfeasibleError("optimality gap is defined for feasible tasks only");
  }
  return pmax(*validation.task).value -
         universal_success_probability(spec, qubit_count, excitations);
}

GateOperator spin_flip_conjugate(const GateOperator& gate) {
  GateOperator flipped = GateOperator::zero(
      gate.input_qubits, gate.output_qubits,
      gate.output_qubits - gate.input_qubits - gate.excitation_shift);
  for (int v = 0; v < gate.rows(); ++v) {
    for (int u = 0; u < gate.cols(); ++u) {
      flipped.radicand(gate.output_qubits - v, gate.input_qubits - u) = gate.radicand(v, u);
    }
  }
  flipped.universal = gate.universal;
  if (gate.normalization_weight.has_value()) {
    flipped.normalization_weight = gate.input_qubits - *gate.normalization_weight;
  }
  return flipped;
}

}  // namespace dicke
