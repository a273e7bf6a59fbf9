#pragma once

// Reference computations that do not go through the library's numerics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qcat/numerics.hpp"
#include "qcat/process.hpp"
#include "qcat/random.hpp"

namespace qcat_test {

using cd = std::complex<double>;

// Eigenvalues of a complex Hermitian matrix via cyclic Jacobi on the real
// symmetric embedding [[Re, -Im], [Im, Re]]. Every eigenvalue appears twice
// in the embedding; one copy of each is returned, ascending.
inline std::vector<double> jacobi_eigenvalues(const qcat::DenseMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  const std::size_t r = 2 * n;
  std::vector<double> a(r * r);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * r + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cd z = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      at(i, j) = z.real();
      at(i + n, j + n) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = p + 1; q < r; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < r; ++p) {
      for (std::size_t q = p + 1; q < r; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < r; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < r; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = at(i, i);
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < r; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

// Two-qubit concurrence straight from amplitudes.
inline double concurrence4(cd a, cd b, cd c, cd d) { return 2.0 * std::abs(a * d - b * c); }

// Output of the generalized deletion process on the (|0>+i|1>)(|0>+i|1>)/2
// input, written out by hand from the expansion coefficients
// ((1-i)/2, -(1+i)/2, i) over |00>, |11>, |++>.
inline std::vector<cd> deletion_family_output(double u, double v) {
  const cd i(0.0, 1.0);
  auto residue = [&](double w) {
    const cd e = std::exp(i * w);
    return std::vector<cd>{(1.0 + e) / 2.0, (1.0 - e) / 2.0};
  };
  const auto r1 = residue(u);
  const auto r2 = residue(v);
  const double h = 1.0 / std::numbers::sqrt2;
  const cd c1 = (1.0 - i) / 2.0;
  const cd c2 = -(1.0 + i) / 2.0;
  const cd c3 = i;
  // |0>r1, |1>r2, |+>|+>
  return {c1 * r1[0] + c3 * h * h, c1 * r1[1] + c3 * h * h, c2 * r2[0] + c3 * h * h,
          c2 * r2[1] + c3 * h * h};
}

// Pseudo-random process specs on (dimA, dimB) with dimA, dimB <= 3 and at
// most 4 independent inputs. Kinds:
//   0: outputs are a fixed unitary applied to the inputs
//   1: inputs built to match outputs entangled with random environments
//   2: unrelated random inputs and outputs
//   3: orthonormal inputs, outputs leaving up to 3 entries free
enum class SpecKind { unitary = 0, dilation = 1, unrelated = 2, orthogonal = 3 };

inline qcat::ProcessSpec random_spec(SpecKind kind, std::mt19937_64& rng) {
  using namespace qcat;
  const std::size_t da = 1 + rng() % 3;
  std::size_t db = 1 + rng() % 3;
  if (da * db < 2) db = 2;
  const std::size_t d = da * db;
  const std::size_t n = 1 + rng() % std::min<std::size_t>(4, d);
  const std::vector<std::size_t> dims{da, db};
  std::vector<DenseVector> in, out;
  switch (kind) {
    case SpecKind::unitary: {
      const DenseMatrix u = random_unitary(d, rng);
      for (std::size_t i = 0; i < n; ++i) {
        in.push_back(random_state(dims, rng).vector());
        out.push_back(u * in.back());
      }
      break;
    }
    case SpecKind::dilation: {
      const std::size_t de = 1 + rng() % 3;
      DenseMatrix w(static_cast<Eigen::Index>(d * de), static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(random_state(dims, rng).vector());
        w.col(static_cast<Eigen::Index>(i)) = tensor(out.back(), random_state({de}, rng).vector());
      }
      // Any vectors with the same Gram matrix as {b_i (x) S_i} will do.
      Eigen::HouseholderQR<DenseMatrix> qr(w);
      const DenseMatrix r = qr.matrixQR().topRows(static_cast<Eigen::Index>(n))
                                .triangularView<Eigen::Upper>();
      const DenseMatrix u = random_unitary(d, rng);
      for (std::size_t i = 0; i < n; ++i) {
        DenseVector a = DenseVector::Zero(static_cast<Eigen::Index>(d));
        a.head(static_cast<Eigen::Index>(n)) = r.col(static_cast<Eigen::Index>(i));
        in.push_back(u * a);
      }
      break;
    }
    case SpecKind::unrelated: {
      for (std::size_t i = 0; i < n; ++i) {
        in.push_back(random_state(dims, rng).vector());
        out.push_back(random_state(dims, rng).vector());
      }
      break;
    }
    case SpecKind::orthogonal: {
      const DenseMatrix u = random_unitary(d, rng);
      const DenseMatrix v = random_unitary(d, rng);
      for (std::size_t i = 0; i < n; ++i) {
        in.push_back(u.col(static_cast<Eigen::Index>(i)));
        out.push_back(i < 3 ? DenseVector(v.col(static_cast<Eigen::Index>(i)))
                            : random_state(dims, rng).vector());
      }
      break;
    }
  }
  std::vector<ProcessPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({PureState::normalized(dims, in[i]), PureState::normalized(dims, out[i])});
  }
  return ProcessSpec(da, db, std::move(pairs));
}

}  // namespace qcat_test
