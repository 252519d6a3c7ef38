#include "dicke/schmidt.hpp"

#include <algorithm>
#include <stdexcept>

#include "dicke/combinatorics.hpp"

namespace dicke {

std::pair<int, int> j_range(int qubit_count, int excitations, int cut) {
  const int alpha = std::max(excitations - cut, 0);
  const int beta = std::min(qubit_count - cut, excitations);
  return {alpha, beta};
}

const Rational& SchmidtSpectrum::lambda(int j) const {
  if (!contains(j)) {
    throw std::out_of_range("Schmidt index outside [alpha, beta]");
  }
  return lambdas[j - alpha];
}

Rational SchmidtSpectrum::sum() const {
  Rational total = 0;
  for (const Rational& value : lambdas) {
    total += value;
  }
  return total;
}

SchmidtSpectrum schmidt_spectrum(int qubit_count, int excitations, int cut) {
  if (qubit_count < 1) {
    throw std::invalid_argument("Schmidt spectrum needs at least one qubit");
  }
  if (excitations < 0 || excitations > qubit_count) {
    throw std::invalid_argument("excitation count outside [0, qubit_count]");
  }
  if (cut < 0 || cut > qubit_count) {
    throw std::invalid_argument("cut outside [0, qubit_count]");
  }
  SchmidtSpectrum spectrum;
  spectrum.qubit_count = qubit_count;
  spectrum.excitations = excitations;
  spectrum.cut = cut;
  std::tie(spectrum.alpha, spectrum.beta) = j_range(qubit_count, excitations, cut);
  const Rational total(binomial(qubit_count, excitations));
  for (int j = spectrum.alpha; j <= spectrum.beta; ++j) {
    spectrum.lambdas.push_back(
        Rational(binomial(cut, excitations - j) * binomial(qubit_count - cut, j)) / total);
  }
  return spectrum;
}

nlohmann::json spectrum_to_json(const SchmidtSpectrum& spectrum) {
  nlohmann::json coefficients = nlohmann::json::array();
  for (int j = spectrum.alpha; j <= spectrum.beta; ++j) {
    nlohmann::json entry = rational_to_json(spectrum.lambda(j));
    entry["j"] = j;
    coefficients.push_back(std::move(entry));
  }
  return nlohmann::json{
      {"alpha", spectrum.alpha},
      {"beta", spectrum.beta},
      {"coefficients", std::move(coefficients)},
  };
}

}  // namespace dicke
