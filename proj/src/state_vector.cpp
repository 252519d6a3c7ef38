#include "dicke/state_vector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dicke/combinatorics.hpp"
#include "dicke/rational.hpp"

namespace dicke {

namespace {
constexpr int kDefaultMaxDenseQubits = 20;
}

int max_dense_qubits() {
  const char* env = std::getenv("DICKE_MAX_QUBITS");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxDenseQubits;
  }
  char* end = nullptr;
  const long parsed = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || parsed < 1 || parsed > 30) {
    return kDefaultMaxDenseQubits;
  }
  return static_cast<int>(parsed);
}

void ensure_vector_fits(int qubit_count) {
  const int ceiling = max_dense_qubits();
  if (qubit_count > ceiling) {
    throw ResourceError("dense vector on " + std::to_string(qubit_count) +
                        " qubits exceeds the ceiling of " + std::to_string(ceiling));
  }
}

void ensure_matrix_fits(int row_qubits, int col_qubits) {
  const int ceiling = max_dense_qubits() + 4;
  if (row_qubits + col_qubits > ceiling) {
    throw ResourceError("dense matrix on " + std::to_string(row_qubits) + "+" +
                        std::to_string(col_qubits) +
                        " index qubits exceeds the ceiling of " + std::to_string(ceiling));
  }
}

int weight_of_bitstring(std::uint64_t bits) { return std::popcount(bits); }

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const double a : amplitudes) {
    total += a * a;
  }
  return total;
}

StateVector StateVector::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  StateVector out = *this;
  for (double& a : out.amplitudes) {
    a /= norm;
  }
  return out;
}

StateVector dicke_vector(const DickeSpec& spec) {
  if (spec.qubit_count < 1) {
    throw std::invalid_argument("Dicke state needs at least one qubit");
  }
  if (spec.excitations < 0 || spec.excitations > spec.qubit_count) {
    throw std::invalid_argument("excitation count outside [0, qubit_count]");
  }
  ensure_vector_fits(spec.qubit_count);
  StateVector state;
  state.qubit_count = spec.qubit_count;
  state.amplitudes.assign(std::size_t{1} << spec.qubit_count, 0.0);
  const double amplitude =
      1.0 / std::sqrt(to_double(Rational(binomial(spec.qubit_count, spec.excitations))));
  for (std::uint64_t index = 0; index < state.amplitudes.size(); ++index) {
    if (weight_of_bitstring(index) == spec.excitations) {
      state.amplitudes[index] = amplitude;
    }
  }
  return state;
}

double symmetric_component(const StateVector& state, int k, int u) {
  if (state.qubit_count != k) {
    throw std::invalid_argument("state is not on the requested qubit count");
  }
  if (u < 0 || u > k) {
    return 0.0;
  }
  const double amplitude = 1.0 / std::sqrt(to_double(Rational(binomial(k, u))));
  double overlap = 0.0;
  for (std::uint64_t index = 0; index < state.amplitudes.size(); ++index) {
    if (weight_of_bitstring(index) == u) {
      overlap += amplitude * state.amplitudes[index];
    }
  }
  return overlap;
}

}  // namespace dicke
