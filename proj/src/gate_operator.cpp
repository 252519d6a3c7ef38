#include "dicke/gate_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

GateOperator GateOperator::zero(int input_qubits, int output_qubits, int excitation_shift) {
  if (input_qubits < 0 || output_qubits < 0) {
    throw std::invalid_argument("gate qubit counts must be nonnegative");
  }
  GateOperator gate;
  gate.input_qubits = input_qubits;
  gate.output_qubits = output_qubits;
  gate.excitation_shift = excitation_shift;
  gate.radicands.assign(static_cast<std::size_t>(gate.rows()) * gate.cols(), Rational(0));
  return gate;
}

namespace {
std::size_t radicand_index(const GateOperator& gate, int v, int u) {
  if (v < 0 || v >= gate.rows() || u < 0 || u >= gate.cols()) {
    throw std::out_of_range("gate entry outside the symmetric basis");
  }
  return static_cast<std::size_t>(v) * gate.cols() + u;
}
}  // namespace

const Rational& GateOperator::radicand(int v, int u) const {
  return radicands[radicand_index(*this, v, u)];
}

Rational& GateOperator::radicand(int v, int u) { return radicands[radicand_index(*this, v, u)]; }

double GateOperator::entry(int v, int u) const {
  const Rational& r = radicand(v, u);
  const double magnitude = std::sqrt(std::abs(to_double(r)));
  return r < 0 ? -magnitude : magnitude;
}

Rational GateOperator::column_norm_squared(int u) const {
  Rational total = 0;
  for (int v = 0; v < rows(); ++v) {
    const Rational& r = radicand(v, u);
    total += r < 0 ? -r : r;
  }
  return total;
}

Rational GateOperator::max_column_norm_squared() const {
  Rational best = 0;
  for (int u = 0; u < cols(); ++u) {
    best = std::max(best, column_norm_squared(u));
  }
  return best;
}

bool operator==(const GateOperator& a, const GateOperator& b) {
  return a.input_qubits == b.input_qubits && a.output_qubits == b.output_qubits &&
         a.excitation_shift == b.excitation_shift && a.radicands == b.radicands &&
         a.universal == b.universal && a.normalization_weight == b.normalization_weight;
}

nlohmann::json gate_to_json(const GateOperator& gate) {
  nlohmann::json columns = nlohmann::json::array();
  for (int u = 0; u < gate.cols(); ++u) {
    int nonzero_row = -1;
    for (int v = 0; v < gate.rows(); ++v) {
      if (gate.radicand(v, u) != 0) {
        if (nonzero_row >= 0) {
          throw std::invalid_argument("gate column has more than one nonzero entry");
        }
        nonzero_row = v;
      }
    }
    if (nonzero_row < 0) {
      continue;
    }
    nlohmann::json column{{"u", u}, {"v", nonzero_row}};
    column["c_squared"] = rational_to_json(gate.radicand(nonzero_row, u));
    columns.push_back(std::move(column));
  }
  nlohmann::json j{
      {"k_in", gate.input_qubits},
      {"k_out", gate.output_qubits},
      {"basis", "symmetric-dicke"},
      {"m1_shift", gate.excitation_shift},
      {"columns", std::move(columns)},
  };
  if (gate.universal) {
    j["universal"] = true;
  }
  if (gate.normalization_weight.has_value()) {
    j["normalization_u"] = *gate.normalization_weight;
  }
  return j;
}

GateOperator gate_from_json(const nlohmann::json& j) {
  if (j.value("basis", "") != std::string("symmetric-dicke")) {
    throw std::invalid_argument("unsupported gate basis");
  }
  GateOperator gate = GateOperator::zero(j.at("k_in").get<int>(), j.at("k_out").get<int>(),
                                         j.at("m1_shift").get<int>());
  for (const nlohmann::json& column : j.at("columns")) {
    gate.radicand(column.at("v").get<int>(), column.at("u").get<int>()) =
        rational_from_json(column.at("c_squared"));
  }
  gate.universal = j.value("universal", false);
  if (j.contains("normalization_u")) {
    gate.normalization_weight = j.at("normalization_u").get<int>();
  }
  return gate;
}

}  // namespace dicke
