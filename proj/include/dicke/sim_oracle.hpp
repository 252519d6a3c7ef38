#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicke/dense_matrix.hpp"
#include "dicke/feasibility.hpp"
#include "dicke/gate_operator.hpp"
#include "dicke/rational.hpp"
#include "dicke/state_vector.hpp"

namespace dicke {

// Brute-force ground truth: dense matrices, partial traces and an
// eigensolver, sharing nothing with the exact modules beyond StateVector
// construction. Everything the exact side claims is re-measured here.

struct VerificationTolerances {
  double probability = 1e-10;
  double fidelity = 1e-10;
};

struct VerificationReport {
  std::string subject;
  std::optional<TransformTask> task;
  bool expected_feasible = false;
  double expected_probability = 0.0;
  double success_probability = 0.0;
  /// Squared overlap of the normalized success branch with the target Dicke
  /// state; meaningful only when a success branch exists.
  double fidelity = 0.0;
  double spectrum_error = 0.0;  // max |numeric lambda - exact lambda| on the initial cut
  bool passed = false;
  VerificationTolerances tolerances;
};

/// Applies a full-space operator to the accessible block (the lowest
/// `input_qubits` qubits); the remote block rides along untouched. The output
/// is unnormalized: its squared norm is the success probability of the branch.
StateVector apply_on_subsystem(const StateVector& state, const DenseMatrix& full_op,
                               int input_qubits);

/// Squared overlap of two normalized real state vectors.
double fidelity(const StateVector& a, const StateVector& b);

DenseMatrix reduced_density_accessible(const StateVector& state, int cut);
DenseMatrix reduced_density_remote(const StateVector& state, int cut);

/// Eigenvalues of the reduced density matrix over the accessible block,
/// descending, with values below `threshold` dropped.
std::vector<double> numeric_schmidt(const StateVector& state, int cut, double threshold = 1e-12);

/// End-to-end check of one task: synthesize the optimal gate (or deletion
/// measurement), embed, apply, and compare the measured branch probability
/// and output fidelity with the exact prediction. For infeasible tasks,
/// checks that pmax is exactly zero and that synthesis refuses.
VerificationReport verify_task(const TransformTask& task, const VerificationTolerances& tol = {});

/// Checks a concrete gate against |D_N^M1>: measured branch probability vs
/// `expected_probability`, and fidelity of the normalized output with the
/// Dicke state implied by the gate's shape and shift.
VerificationReport verify_gate_on(const GateOperator& gate, int qubit_count, int excitations,
                                  const Rational& expected_probability,
                                  const VerificationTolerances& tol = {});

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace dicke
