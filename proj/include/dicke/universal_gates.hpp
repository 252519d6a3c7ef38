#pragma once

#include <optional>

#include "dicke/gate_operator.hpp"
#include "dicke/rational.hpp"

namespace dicke {

/// A size-independent gate request: add `qubit_change` qubits of which
/// `excitation_change` are spin-up (negative values delete), touching
/// `access_count` qubits of whatever Dicke state it is handed.
struct UniversalGateSpec {
  int access_count = 0;       // k
  int qubit_change = 0;       // n
  int excitation_change = 0;  // m1
  /// Input weight whose column norm is set to 1. Defaults to the admissible
  /// weight maximizing r_u; any other choice would break the contraction
  /// property and is rejected.
  std::optional<int> normalization_weight;
};

/// One gate for every input size. Weight u is admissible when 0 <= u <= k and
/// 0 <= u + m1 <= k + n; the column law is
///   c_u^2 = r_u / r_{u0},  r_u = C(k+n, u+m1) / C(k, u),
/// with c_u = 0 on inadmissible weights. The remote-side binomial cancels
/// from lambda'_j / lambda_j, leaving N out of the picture entirely, which is
/// why a fixed gate serves every initial size.
GateOperator universal_gate(const UniversalGateSpec& spec);

/// Exact success probability of the universal gate on |D_N^M1>:
/// sum_j lambda_j * c_{M1-j}^2.
Rational universal_success_probability(const UniversalGateSpec& spec, int qubit_count,
                                       int excitations);

/// pmax(task) - universal_success_probability for the induced task.
/// Nonnegative; exactly zero at minimal access. Requires a feasible task.
Rational optimality_gap(const UniversalGateSpec& spec, int qubit_count, int excitations);

/// Conjugation by the global spin flip: entry (v, u) -> (k_out-v, k_in-u).
/// Turns a spin-down adder into the matching spin-up adder. An involution.
GateOperator spin_flip_conjugate(const GateOperator& gate);

}  // namespace dicke
