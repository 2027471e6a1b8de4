#include "loccgate/random.hpp"

#include <Eigen/QR>
#include <cmath>

namespace loccgate {

Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw InputError("haar_unitary: dimension must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Amplitude{re, im};
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Amplitude rj = r(j, j);
    const double mag = std::abs(rj);
    const Amplitude phase = (mag > 0.0) ? rj / mag : Amplitude{1.0, 0.0};
    q.col(j) *= phase;
  }
  return q;
}

PureState random_state(std::vector<int> dims, std::mt19937_64& rng) {
  const std::size_t total = checked_total_dim(dims);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(total);
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Amplitude{re, im};
  }
  return normalized_state(std::move(dims), std::move(amps));
}

}  // namespace loccgate
