#include "dicke/feasibility.hpp"

#include <stdexcept>

#include "dicke/schmidt.hpp"

namespace dicke {

std::string to_string(TaskError error) {
  switch (error) {
    case TaskError::None:
      return "OK";
    case TaskError::TrivialCase:
      return "TRIVIAL_CASE";
    case TaskError::Range:
      return "RANGE";
    case TaskError::Malformed:
      return "MALFORMED";
  }
  return "UNKNOWN";
}

std::string to_string(FeasibilityReason reason) {
  switch (reason) {
    case FeasibilityReason::Ok:
      return "OK";
    case FeasibilityReason::NeedsKGeM1:
      return "NEEDS_K_GE_M1";
    case FeasibilityReason::NeedsKGeM0:
      return "NEEDS_K_GE_M0";
    case FeasibilityReason::NeedsKGeMinusN:
      return "NEEDS_K_GE_MINUS_N";
    case FeasibilityReason::SupportMismatch:
      return "SUPPORT_MISMATCH";
  }
  return "UNKNOWN";
}

TaskValidation validate_task(int initial_qubits, int initial_excitations, int access_count,
                             int qubit_change, int excitation_change) {
  TransformTask task;
  task.initial_qubits = initial_qubits;
  task.initial_excitations = initial_excitations;
  task.access_count = access_count;
  task.qubit_change = qubit_change;
  task.excitation_change = excitation_change;

  TaskValidation result;
  if (initial_qubits < 1 || task.final_qubits() < 1) {
    result.error = TaskError::Malformed;
    result.message = "qubit counts must stay positive";
    return result;
  }
  if (initial_excitations < 0 || initial_excitations > initial_qubits) {
    result.error = TaskError::Malformed;
    result.message = "initial excitation count outside [0, N]";
    return result;
  }
  if (task.final_excitations() < 0 || task.final_excitations() > task.final_qubits()) {
    result.error = TaskError::Malformed;
    result.message = "final excitation count outside [0, N+n]";
    return result;
  }
  if (access_count < 0 || access_count > initial_qubits || access_count < -qubit_change) {
    result.error = TaskError::Range;
    result.message = "access count outside N >= k >= -n";
    return result;
  }
  if (task.initial_excitations == 0 || task.initial_spin_downs() == 0) {
    result.error = TaskError::TrivialCase;
    result.message = "initial state is an all-up or all-down product state";
    return result;
  }
  result.task = task;
  return result;
}

FeasibilityDecision necessary_conditions(const TransformTask& task) {
  const int m0 = task.spin_down_change();
  const int m1 = task.excitation_change;
  FeasibilityDecision decision;
  if (m0 > 0 && task.access_count < task.initial_excitations) {
    decision.reasons.push_back(FeasibilityReason::NeedsKGeM1);
  }
  if (m1 > 0 && task.access_count < task.initial_spin_downs()) {
    decision.reasons.push_back(FeasibilityReason::NeedsKGeM0);
  }
  if (m0 <= 0 && m1 <= 0 && task.access_count < -task.qubit_change) {
    decision.reasons.push_back(FeasibilityReason::NeedsKGeMinusN);
  }
  decision.feasible = decision.reasons.empty();
  if (decision.feasible) {
    decision.reasons.push_back(FeasibilityReason::Ok);
  }
  return decision;
}

bool support_inclusion(const TransformTask& task) {
  const auto [alpha, beta] =
      j_range(task.initial_qubits, task.initial_excitations, task.access_count);
  const auto [alpha_final, beta_final] =
      j_range(task.final_qubits(), task.final_excitations(), task.final_access());
  return alpha <= alpha_final && beta_final <= beta;
}

FeasibilityDecision feasible(const TransformTask& task) {
  FeasibilityDecision decision = necessary_conditions(task);
  const bool support = support_inclusion(task);
  if (decision.feasible != support) {
    throw std::logic_error("CONSISTENCY: access-count conditions and support inclusion disagree");
  }
  if (!support) {
    decision.reasons.push_back(FeasibilityReason::SupportMismatch);
  }
  return decision;
}

nlohmann::json decision_to_json(const FeasibilityDecision& decision) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const FeasibilityReason reason : decision.reasons) {
    reasons.push_back(to_string(reason));
  }
  return nlohmann::json{{"feasible", decision.feasible}, {"reasons", std::move(reasons)}};
}

nlohmann::json task_to_json(const TransformTask& task) {
  return nlohmann::json{
      {"n", task.initial_qubits},      {"m1", task.initial_excitations},
      {"k", task.access_count},        {"add_up", task.excitation_change},
      {"add_down", task.spin_down_change()},
  };
}

}  // namespace dicke
