#pragma once

#include <utility>
#include <vector>

#include "dicke/rational.hpp"

namespace dicke {

/// Range of j, the spin-up count on the remote side of the cut, over which
/// the bipartite decomposition of |D_N^M1> runs:
///   alpha = max(M1 - cut, 0), beta = min(N - cut, M1).
std::pair<int, int> j_range(int qubit_count, int excitations, int cut);

/// Exact Schmidt spectrum of |D_N^M1> across the cut A = lowest `cut` qubits,
/// B = the remaining N-cut qubits:
///   lambda_j = C(cut, M1-j) * C(N-cut, j) / C(N, M1),  j in [alpha, beta].
/// cut = 0 and cut = N degenerate to the single term lambda = 1.
struct SchmidtSpectrum {
  int qubit_count = 0;
  int excitations = 0;
  int cut = 0;
  int alpha = 0;  // fewest spin-ups the remote side can hold
  int beta = 0;   // most spin-ups the remote side can hold
  std::vector<Rational> lambdas;  // indexed by j - alpha, all strictly positive

  int size() const { return beta - alpha + 1; }
  bool contains(int j) const { return j >= alpha && j <= beta; }
  const Rational& lambda(int j) const;
  Rational sum() const;
};

SchmidtSpectrum schmidt_spectrum(int qubit_count, int excitations, int cut);

/// {"alpha": int, "beta": int, "coefficients": [{"j": int, "num": str, "den": str}]}
nlohmann::json spectrum_to_json(const SchmidtSpectrum& spectrum);

}  // namespace dicke
