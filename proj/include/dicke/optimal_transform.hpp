#pragma once

#include <optional>
#include <stdexcept>

#include "dicke/dense_matrix.hpp"
#include "dicke/feasibility.hpp"
#include "dicke/gate_operator.hpp"
#include "dicke/schmidt.hpp"

namespace dicke {

/// Thrown when a gate is requested for a task that cannot succeed.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PmaxResult {
  Rational value;               // exact maximum success probability; 0 iff infeasible
  std::optional<int> argmin_j;  // remote weight where the bound is tight; empty iff infeasible
  SchmidtSpectrum initial_spectrum;
  SchmidtSpectrum final_spectrum;  // over the same remote block
};

/// p_max = min over the final support of lambda_j / lambda'_j. The remote
/// block is untouched, so a single filter on the accessible block must scale
/// every remote Schmidt weight from lambda_j to p * lambda'_j at once, and no
/// weight can be amplified. Returns 0 when the support inclusion fails.
PmaxResult pmax(const TransformTask& task);

/// Optimal filter for a feasible task with final_access >= 1:
///   K |D_k^u> = c_u |D_{k+n}^{u+m1}>,  c_u^2 = p_max * lambda'_j / lambda_j
/// for u = M1 - j over the final support; every other column is zero.
/// The column at argmin_j has norm exactly 1.
GateOperator synthesize_optimal_gate(const TransformTask& task);

/// k = -n case: the accessible block is measured away entirely. Projects it
/// onto the deleted pattern |D_k^{-m1}> and leaves |D_{N+n}^{M1+m1}> on the
/// remote block, succeeding with probability lambda_{M1+m1} = p_max.
GateOperator synthesize_deletion_measurement(const TransformTask& task);

/// Expands a compact gate to its full 2^{k_out} x 2^{k_in} matrix:
/// sum_{v,u} entry(v,u) |D_{k_out}^v><D_{k_in}^u|.
DenseMatrix embed_full(const GateOperator& gate);

}  // namespace dicke
