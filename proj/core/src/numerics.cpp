#include "qcat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

void require_dimension(std::size_t dim, const char* what) {
  if (dim == 0) {
    throw InvalidArgument(std::string(what) + ": dimension must be positive");
  }
  if (dim > kMaxDimension) {
    throw InvalidArgument(std::string(what) + ": dimension " + std::to_string(dim) +
                          " exceeds the supported maximum of " +
                          std::to_string(kMaxDimension));
  }
}

void require_finite(const DenseVector& v, const char* what) {
  if (!v.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite amplitude");
  }
}

void require_finite(const DenseMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
}

DenseVector tensor(const DenseVector& u, const DenseVector& v) {
  const auto du = static_cast<std::size_t>(u.size());
  const auto dv = static_cast<std::size_t>(v.size());
  require_dimension(du, "tensor");
  require_dimension(dv, "tensor");
  require_dimension(du * dv, "tensor");
  DenseVector out(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out.segment(i * v.size(), v.size()) = u[i] * v;
  }
  return out;
}

DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Complex inner(const DenseVector& u, const DenseVector& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner: dimensions " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()) + " differ");
  }
  // Eigen's dot() conjugates the first argument.
  return u.dot(v);
}

double hermiticity_deviation(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("hermiticity_deviation: matrix is not square");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("hermitian_eigen: matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected square");
  }
  require_dimension(static_cast<std::size_t>(m.rows()), "hermitian_eigen");
  require_finite(m, "hermitian_eigen");
  const double dev = hermiticity_deviation(m);
  if (dev > tol) {
    throw NotHermitian("hermitian_eigen: |M - M^dagger| = " + std::to_string(dev) +
                           " exceeds tolerance",
                       dev);
  }
  // Symmetrize so round-off in the lower triangle cannot leak in.
  const DenseMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw InternalConsistency("hermitian_eigen: eigensolver did not converge");
  }
  HermitianEigen out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = solver.eigenvectors();
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m, double tol) {
  return hermitian_eigen(m, tol).values;
}

DenseMatrix gram(std::span<const DenseVector> vectors) {
  const auto n = static_cast<Eigen::Index>(vectors.size());
  DenseMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = inner(vectors[i], vectors[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = inner(vectors[i], vectors[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

SpanExpansion span_coefficients(std::span<const DenseVector> basis, const DenseVector& target,
                                double tol) {
  if (basis.empty()) {
    throw InvalidArgument("span_coefficients: empty basis");
  }
  const Eigen::Index dim = target.size();
  for (const auto& b : basis) {
    if (b.size() != dim) {
      throw DimensionMismatch("span_coefficients: basis vector of dimension " +
                              std::to_string(b.size()) + " against target of dimension " +
                              std::to_string(dim));
    }
  }
  const auto eig = hermitian_eigenvalues(gram(basis), tol);
  if (eig.front() <= tol) {
    throw DependentBasis("span_coefficients: basis is linearly dependent (smallest Gram "
                         "eigenvalue " + std::to_string(eig.front()) + ")",
                         eig.front());
  }

  DenseMatrix b(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    b.col(static_cast<Eigen::Index>(k)) = basis[k];
  }
  const DenseVector alpha = b.colPivHouseholderQr().solve(target);

  SpanExpansion out;
  out.coefficients.assign(alpha.data(), alpha.data() + alpha.size());
  out.residual = (target - b * alpha).norm();
  return out;
}

DenseVector synthesize(std::span<const DenseVector> basis, std::span<const Complex> coefficients) {
  if (basis.size() != coefficients.size() || basis.empty()) {
    throw DimensionMismatch("synthesize: basis and coefficient counts differ");
  }
  DenseVector out = DenseVector::Zero(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != out.size()) {
      throw DimensionMismatch("synthesize: basis vectors have differing dimensions");
    }
    out += coefficients[k] * basis[k];
  }
  return out;
}

}  // namespace qcat
