#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dicke {

/// Thrown when a dense register or matrix would exceed the memory ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense-register ceiling in qubits. Defaults to 20; the DICKE_MAX_QUBITS
/// environment variable overrides it. Matrices get a 16x budget on top
/// (up to 2^(ceiling+4) entries), enough for the operators that act on
/// ceiling-sized registers.
int max_dense_qubits();
void ensure_vector_fits(int qubit_count);
void ensure_matrix_fits(int row_qubits, int col_qubits);

/// |D_N^M>: N qubits, M of them spin-up, equally weighted over all placements.
struct DickeSpec {
  int qubit_count = 0;
  int excitations = 0;

  int spin_downs() const { return qubit_count - excitations; }
};

/// Dense real amplitude vector. Bit i of an index is the state of qubit i,
/// bit value 1 = spin-up. The accessible block always occupies the lowest bits.
struct StateVector {
  int qubit_count = 0;
  std::vector<double> amplitudes;

  std::uint64_t dimension() const { return amplitudes.size(); }
  double norm_squared() const;
  StateVector normalized() const;
};

int weight_of_bitstring(std::uint64_t bits);

StateVector dicke_vector(const DickeSpec& spec);
inline StateVector dicke_vector(int qubit_count, int excitations) {
  return dicke_vector(DickeSpec{qubit_count, excitations});
}

/// <D_k^u | state> for a k-qubit state (an accessible-subsystem factor).
double symmetric_component(const StateVector& state, int k, int u);

}  // namespace dicke
