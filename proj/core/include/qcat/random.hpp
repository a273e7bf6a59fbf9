#pragma once

// Seeded random states and unitaries (Haar-distributed via QR of a complex
// Ginibre matrix).

#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "qcat/quantum.hpp"

namespace qcat {

inline DenseVector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  DenseVector v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = Complex(normal(rng), normal(rng));
  return v;
}

inline PureState random_state(std::vector<std::size_t> dims, std::mt19937_64& rng) {
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  return PureState::normalized(std::move(dims), random_vector(total, rng));
}

inline DenseMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  DenseMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c) g.col(c) = random_vector(dim, rng);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(d, d);
  const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = std::abs(r(k, k));
    if (m > 0.0) q.col(k) *= r(k, k) / m;
  }
  return q;
}

}  // namespace qcat
