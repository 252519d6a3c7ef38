#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dicke {

/// A transformation request: turn |D_N^M1> into |D_{N+n}^{M1+m1}> while
/// touching only the lowest `access_count` qubits. The remote block of
/// N - access_count qubits is never acted on.
struct TransformTask {
  int initial_qubits = 0;       // N
  int initial_excitations = 0;  // M1
  int access_count = 0;         // k
  int qubit_change = 0;         // n, signed: >0 adds qubits, <0 deletes
  int excitation_change = 0;    // m1, signed

  int initial_spin_downs() const { return initial_qubits - initial_excitations; }
  int spin_down_change() const { return qubit_change - excitation_change; }  // m0
  int final_qubits() const { return initial_qubits + qubit_change; }
  int final_excitations() const { return initial_excitations + excitation_change; }
  int final_access() const { return access_count + qubit_change; }
  int remote_qubits() const { return initial_qubits - access_count; }
};

enum class TaskError { None, TrivialCase, Range, Malformed };
std::string to_string(TaskError error);

struct TaskValidation {
  std::optional<TransformTask> task;
  TaskError error = TaskError::None;
  std::string message;

  bool ok() const { return task.has_value(); }
};

/// Normalizes raw fields into a TransformTask or reports the violated guard:
///   Malformed   - counts out of range (M1 or M1+m1 outside its register)
///   Range       - access count outside N >= k >= -n (or k < 0)
///   TrivialCase - the initial state is an all-up or all-down product state
/// A product-state *final* is allowed: deletions legitimately end there.
TaskValidation validate_task(int initial_qubits, int initial_excitations, int access_count,
                             int qubit_change, int excitation_change);

enum class FeasibilityReason { Ok, NeedsKGeM1, NeedsKGeM0, NeedsKGeMinusN, SupportMismatch };
std::string to_string(FeasibilityReason reason);

struct FeasibilityDecision {
  bool feasible = false;
  std::vector<FeasibilityReason> reasons;  // == {Ok} iff feasible
};

/// Access-count conditions: adding spin-downs needs k >= M1, adding spin-ups
/// needs k >= M0, and pure deletions need k >= -n.
FeasibilityDecision necessary_conditions(const TransformTask& task);

/// True iff the final state's remote-side support [alpha', beta'] lies inside
/// the initial one [alpha, beta]. A filter on the accessible block cannot
/// populate remote weights that start empty.
bool support_inclusion(const TransformTask& task);

/// Combined decision. The two criteria agree on every validated task;
/// a disagreement indicates a bug and throws std::logic_error.
FeasibilityDecision feasible(const TransformTask& task);

/// {"feasible": bool, "reasons": [string]}
nlohmann::json decision_to_json(const FeasibilityDecision& decision);

nlohmann::json task_to_json(const TransformTask& task);

}  // namespace dicke
