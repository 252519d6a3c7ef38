#pragma once

#include <optional>
#include <vector>

#include "dicke/rational.hpp"

namespace dicke {

/// The success branch of a filtering operation, stored compactly on the
/// symmetric bases: entry (v, u) is <D_{k_out}^v| K |D_{k_in}^u>.
///
/// Entries are square roots of rationals; the signed radicand is kept exact
/// (entry value = sign(radicand) * sqrt(|radicand|)), so probability
/// accounting never touches floating point. output_qubits == 0 encodes a
/// measurement whose success branch leaves only the remote block.
struct GateOperator {
  int input_qubits = 0;      // k_in
  int output_qubits = 0;     // k_out
  int excitation_shift = 0;  // v - u on the populated entries
  std::vector<Rational> radicands;  // (k_out+1) x (k_in+1), row-major
  bool universal = false;
  std::optional<int> normalization_weight;  // input weight whose column norm is 1

  static GateOperator zero(int input_qubits, int output_qubits, int excitation_shift);

  int rows() const { return output_qubits + 1; }
  int cols() const { return input_qubits + 1; }
  const Rational& radicand(int v, int u) const;
  Rational& radicand(int v, int u);
  double entry(int v, int u) const;

  /// Exact column norm of K^dagger K: sum_v |radicand(v, u)|.
  Rational column_norm_squared(int u) const;
  Rational max_column_norm_squared() const;
};

bool operator==(const GateOperator& a, const GateOperator& b);

/// {"k_in": int, "k_out": int, "basis": "symmetric-dicke", "m1_shift": int,
///  "columns": [{"u": int, "v": int, "c_squared": {"num": str, "den": str}}]}
/// plus {"universal": true, "normalization_u": int} for universal gates.
/// Round-trips bit-exactly. Requires at most one nonzero entry per column.
nlohmann::json gate_to_json(const GateOperator& gate);
GateOperator gate_from_json(const nlohmann::json& j);

}  // namespace dicke
