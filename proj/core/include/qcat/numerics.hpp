#pragma once

// Dense complex vector/matrix kernel for small Hilbert spaces.
//
// Vectors and matrices are Eigen dynamic-size complex types. Every entry
// point validates dimensions against kMaxDimension and rejects non-finite
// values, so callers can treat the aliases below as checked value types.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcat {

using Complex = std::complex<double>;
using DenseVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kMaxDimension = 64;

/// Throws InvalidArgument when dim is zero or exceeds kMaxDimension.
void require_dimension(std::size_t dim, const char* what);
/// Throws InvalidArgument if any amplitude is NaN or infinite.
void require_finite(const DenseVector& v, const char* what);
void require_finite(const DenseMatrix& m, const char* what);

/// Kronecker product; result[i * v.size() + j] = u[i] * v[j].
DenseVector tensor(const DenseVector& u, const DenseVector& v);
DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const DenseVector& u, const DenseVector& v);

/// Largest |M - M^dagger| entry.
double hermiticity_deviation(const DenseMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  // nondecreasing
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Eigen-decomposition of a Hermitian matrix. Throws InvalidArgument for a
/// non-square matrix and NotHermitian when |M - M^dagger| exceeds tol.
HermitianEigen hermitian_eigen(const DenseMatrix& m, double tol = kDefaultTolerance);
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m,
                                          double tol = kDefaultTolerance);

/// G[i][j] = <v_i|v_j>.
DenseMatrix gram(std::span<const DenseVector> vectors);

struct SpanExpansion {
  std::vector<Complex> coefficients;
  double residual = 0.0;  // || target - sum_i c_i basis_i ||
};

/// Least-squares expansion of target in a linearly independent basis.
/// Throws DependentBasis (carrying the smallest Gram eigenvalue) when the
/// basis Gram matrix has an eigenvalue <= tol.
SpanExpansion span_coefficients(std::span<const DenseVector> basis,
                                const DenseVector& target,
                                double tol = kDefaultTolerance);

/// sum_i c_i basis_i
DenseVector synthesize(std::span<const DenseVector> basis, std::span<const Complex> coefficients);

}  // namespace qcat
