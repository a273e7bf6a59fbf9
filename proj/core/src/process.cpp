#include "qcat/process.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

constexpr double kCoarseStep = 0.05;
constexpr int kRefinementRounds = 2;
constexpr int kRefinementFactor = 10;
constexpr int kMaxSweeps = 32;
// Objective values closer than this count as a tie.
constexpr double kTieSlack = 1e-14;

double min_eigenvalue(const DenseMatrix& m) {
  return hermitian_eigenvalues(m, std::numeric_limits<double>::infinity()).front();
}

std::vector<Complex> ring_points(double r, double dtheta, double theta_lo, double theta_hi) {
  std::vector<Complex> out;
  if (r == 0.0) {
    out.emplace_back(0.0, 0.0);
    return out;
  }
  const int k_lo = static_cast<int>(std::ceil(theta_lo / dtheta - 1e-9));
  const int k_hi = static_cast<int>(std::floor(theta_hi / dtheta + 1e-9));
  for (int k = k_lo; k <= k_hi; ++k) {
    out.push_back(std::polar(r, k * dtheta));
  }
  return out;
}

// Grid points of one free entry in (modulus, phase) lexicographic order.
std::vector<Complex> disk_grid(double step) {
  std::vector<Complex> pts;
  const int rings = static_cast<int>(std::lround(1.0 / step));
  for (int k = 0; k <= rings; ++k) {
    const double r = std::min(1.0, k * step);
    // Phases k * step for k * step < 2 pi.
    const auto ring = ring_points(r, step, 0.0, 2.0 * std::numbers::pi - step * 1e-6);
    pts.insert(pts.end(), ring.begin(), ring.end());
  }
  return pts;
}

std::vector<Complex> local_grid(Complex center, double step) {
  const double r0 = std::abs(center);
  const double t0 = r0 > 0.0 ? std::arg(center) : 0.0;
  std::vector<Complex> pts;
  for (int kr = -kRefinementFactor; kr <= kRefinementFactor; ++kr) {
    const double r = r0 + kr * step;
    if (r < -1e-15 || r > 1.0 + 1e-15) continue;
    const double rc = std::clamp(r, 0.0, 1.0);
    if (rc == 0.0) {
      pts.emplace_back(0.0, 0.0);
      continue;
    }
    for (int kt = -kRefinementFactor; kt <= kRefinementFactor; ++kt) {
      pts.push_back(std::polar(rc, t0 + kt * step));
    }
  }
  return pts;
}

// Cyclic coordinate ascent of the minimum eigenvalue over the free entries.
double coordinate_ascent(const EnvironmentGram& eg, std::vector<Complex>& values,
                         const std::function<std::vector<Complex>(Complex)>& grid_for) {
  double best = min_eigenvalue(eg.fill(values));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t f = 0; f < values.size(); ++f) {
      const Complex current = values[f];
      Complex arg_best = current;
      double local_best = -std::numeric_limits<double>::infinity();
      for (const Complex& p : grid_for(current)) {
        values[f] = p;
        const double v = min_eigenvalue(eg.fill(values));
        if (v > local_best + kTieSlack) {
          local_best = v;
          arg_best = p;
        }
      }
      if (local_best > best + kTieSlack) {
        best = local_best;
        values[f] = arg_best;
        improved = true;
      } else {
        values[f] = current;
      }
    }
    if (!improved) break;
  }
  return best;
}

InfeasibilityCertificate psd_certificate(const DenseMatrix& completion, double min_eig) {
  const auto eig = hermitian_eigen(completion, std::numeric_limits<double>::infinity());
  const auto v = eig.vectors.col(0);
  InfeasibilityCertificate cert;
  cert.reason = CertificateReason::psd_violation;
  cert.magnitude = min_eig;
  double weight = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    for (Eigen::Index j = i + 1; j < v.size(); ++j) {
      const double w = std::abs(v[i] * v[j]);
      if (w > weight + kTieSlack) {
        weight = w;
        cert.i = static_cast<std::size_t>(i);
        cert.j = static_cast<std::size_t>(j);
      }
    }
  }
  return cert;
}

}  // namespace

std::string_view to_string(FeasibilityStatus status) {
  switch (status) {
    case FeasibilityStatus::realizable: return "Realizable";
    case FeasibilityStatus::infeasible: return "Infeasible";
    case FeasibilityStatus::undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(CertificateReason reason) {
  switch (reason) {
    case CertificateReason::modulus_violation: return "modulus_violation";
    case CertificateReason::output_null_input_not: return "output_null_input_not";
    case CertificateReason::psd_violation: return "psd_violation";
  }
  return "?";
}

ProcessSpec::ProcessSpec(std::size_t dim_a, std::size_t dim_b, std::vector<ProcessPair> pairs,
                         double tol, InputIndependence independence)
    : dim_a_(dim_a), dim_b_(dim_b), pairs_(std::move(pairs)) {
  require_dimension(dim_a_, "ProcessSpec dimA");
  require_dimension(dim_b_, "ProcessSpec dimB");
  require_dimension(dim_a_ * dim_b_, "ProcessSpec");
  if (pairs_.empty()) {
    throw InvalidArgument("ProcessSpec: at least one (input, output) pair is required");
  }
  const std::vector<std::size_t> dims{dim_a_, dim_b_};
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (pairs_[k].input.dims() != dims || pairs_[k].output.dims() != dims) {
      throw DimensionMismatch("ProcessSpec: pair " + std::to_string(k) +
                              " is not a state on (dimA, dimB) = (" + std::to_string(dim_a_) +
                              ", " + std::to_string(dim_b_) + ")");
    }
  }
  const auto inputs = input_vectors();
  const double smallest = hermitian_eigenvalues(gram(inputs), tol).front();
  smallest_gram_eigenvalue_ = smallest;
  inputs_independent_ = smallest > tol;
  if (!inputs_independent_ && independence == InputIndependence::required) {
    throw DependentBasis("ProcessSpec: inputs are linearly dependent (smallest Gram "
                         "eigenvalue " + std::to_string(smallest) + ")",
                         smallest);
  }
}

std::vector<DenseVector> ProcessSpec::input_vectors() const {
  std::vector<DenseVector> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.input.vector());
  return out;
}

std::vector<DenseVector> ProcessSpec::output_vectors() const {
  std::vector<DenseVector> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.output.vector());
  return out;
}

DenseMatrix gram_matrix(std::span<const PureState> states) {
  std::vector<DenseVector> vecs;
  vecs.reserve(states.size());
  for (const auto& s : states) {
    if (s.dims() != states.front().dims()) {
      throw DimensionMismatch("gram_matrix: states have different subsystem signatures");
    }
    vecs.push_back(s.vector());
  }
  return gram(vecs);
}

EnvironmentGram::EnvironmentGram(std::size_t n) : n_(n), entries_(n * n) {
  for (std::size_t i = 0; i < n_; ++i) entries_[i * n_ + i] = Complex(1.0, 0.0);
}

bool EnvironmentGram::is_free(std::size_t i, std::size_t j) const {
  return !entries_.at(i * n_ + j).has_value();
}

Complex EnvironmentGram::value(std::size_t i, std::size_t j) const {
  const auto& e = entries_.at(i * n_ + j);
  if (!e) {
    throw InvalidArgument("EnvironmentGram: entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is free");
  }
  return *e;
}

void EnvironmentGram::set(std::size_t i, std::size_t j, Complex value) {
  if (i == j) {
    throw InvalidArgument("EnvironmentGram: diagonal is fixed at 1");
  }
  entries_.at(i * n_ + j) = value;
  entries_.at(j * n_ + i) = std::conj(value);
}

std::vector<std::pair<std::size_t, std::size_t>> EnvironmentGram::free_entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (is_free(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

DenseMatrix EnvironmentGram::fill(std::span<const Complex> free_values) const {
  const auto n = static_cast<Eigen::Index>(n_);
  DenseMatrix m(n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t j = i + 1; j < n_; ++j) {
      Complex v;
      if (is_free(i, j)) {
        if (next >= free_values.size()) {
          throw InvalidArgument("EnvironmentGram::fill: too few free values");
        }
        v = free_values[next++];
      } else {
        v = value(i, j);
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = std::conj(v);
    }
  }
  if (next != free_values.size()) {
    throw InvalidArgument("EnvironmentGram::fill: too many free values");
  }
  return m;
}

std::variant<EnvironmentGram, FeasibilityVerdict> environment_gram(const ProcessSpec& spec,
                                                                   double tol) {
  const DenseMatrix g_in = gram(spec.input_vectors());
  const DenseMatrix g_out = gram(spec.output_vectors());
  const std::size_t n = spec.size();
  EnvironmentGram eg(n);

  auto infeasible = [](std::size_t i, std::size_t j, CertificateReason reason, double magnitude) {
    FeasibilityVerdict v;
    v.status = FeasibilityStatus::infeasible;
    v.certificate = InfeasibilityCertificate{i, j, reason, magnitude};
    return v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex gi = g_in(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const Complex go = g_out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double ai = std::abs(gi);
      const double ao = std::abs(go);
      if (ao <= tol) {
        if (ai <= tol) continue;  // free
        return infeasible(i, j, CertificateReason::output_null_input_not, ai);
      }
      if (ai > ao + tol) {
        return infeasible(i, j, CertificateReason::modulus_violation, ai / ao);
      }
      Complex ratio = gi / go;
      if (std::abs(ratio) > 1.0) ratio /= std::abs(ratio);
      eg.set(i, j, ratio);
    }
  }
  return eg;
}

FeasibilityVerdict complete_psd(const EnvironmentGram& pattern, double tol) {
  EnvironmentGram eg = pattern;
  const std::size_t n = eg.size();

  // |<S_i|S_k>| = 1 means S_k = E_ik S_i, which pins E_ij = E_ik E_kj.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [i, j] : eg.free_entries()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || eg.is_free(i, k) || eg.is_free(k, j)) continue;
        const Complex eik = eg.value(i, k);
        const Complex ekj = eg.value(k, j);
        if (std::abs(eik) >= 1.0 - tol || std::abs(ekj) >= 1.0 - tol) {
          eg.set(i, j, eik * ekj);
          changed = true;
          break;
        }
      }
    }
  }

  FeasibilityVerdict verdict;
  const auto free = eg.free_entries();
  verdict.free_entries = free.size();
  if (free.size() > kMaxFreeEntries) {
    verdict.status = FeasibilityStatus::undetermined;
    return verdict;
  }

  std::vector<Complex> values(free.size(), Complex(0.0, 0.0));
  double best = min_eigenvalue(eg.fill(values));
  if (!free.empty()) {
    const auto coarse = disk_grid(kCoarseStep);
    best = coordinate_ascent(eg, values, [&](Complex) { return coarse; });
    double step = kCoarseStep;
    for (int round = 0; round < kRefinementRounds; ++round) {
      step /= kRefinementFactor;
      best = coordinate_ascent(eg, values,
                               [step](Complex center) { return local_grid(center, step); });
    }
  }

  const DenseMatrix completion = eg.fill(values);
  if (best >= -tol) {
    verdict.status = FeasibilityStatus::realizable;
    verdict.completed_gram = completion;
  } else {
    verdict.status = FeasibilityStatus::infeasible;
    verdict.certificate = psd_certificate(completion, best);
  }
  return verdict;
}

FeasibilityVerdict analyze_feasibility(const ProcessSpec& spec, double tol) {
  auto eg = environment_gram(spec, tol);
  if (auto* early = std::get_if<FeasibilityVerdict>(&eg)) return *early;
  return complete_psd(std::get<EnvironmentGram>(eg), tol);
}

bool environments_identical(const FeasibilityVerdict& verdict, double tol) {
  if (!verdict.realizable() || !verdict.completed_gram) return false;
  const DenseMatrix& e = *verdict.completed_gram;
  return (e.array() - Complex(1.0, 0.0)).abs().maxCoeff() <= tol;
}

Dilation construct_isometry(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                            double tol) {
  if (!verdict.realizable() || !verdict.completed_gram) {
    throw InvalidArgument("construct_isometry: verdict is not Realizable");
  }
  if (!spec.inputs_independent()) {
    throw DependentBasis("construct_isometry: inputs are linearly dependent",
                         spec.smallest_input_gram_eigenvalue());
  }
  const DenseMatrix& e = *verdict.completed_gram;
  const auto n = static_cast<Eigen::Index>(spec.size());
  if (e.rows() != n) {
    throw InvalidArgument("construct_isometry: completed Gram size does not match the spec");
  }

  // E = S^dagger S with S of shape rank x n.
  const auto eig = hermitian_eigen(e, tol);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eig.values[static_cast<std::size_t>(k)] > tol) kept.push_back(k);
  }
  const auto rank = static_cast<Eigen::Index>(kept.size());
  DenseMatrix s(rank, n);
  for (Eigen::Index r = 0; r < rank; ++r) {
    // Largest eigenvalue first.
    const Eigen::Index k = kept[static_cast<std::size_t>(rank - 1 - r)];
    s.row(r) = std::sqrt(eig.values[static_cast<std::size_t>(k)]) *
               eig.vectors.col(k).adjoint();
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::abs(s(r, c)) > 1e-6) {
        s.row(r) *= std::conj(s(r, c)) / std::abs(s(r, c));
        break;
      }
    }
  }

  const auto d_sys = static_cast<Eigen::Index>(spec.dim_a() * spec.dim_b());
  const Eigen::Index total = d_sys * rank;
  require_dimension(static_cast<std::size_t>(total), "construct_isometry");

  DenseVector e0 = DenseVector::Zero(rank);
  e0[0] = 1.0;
  DenseMatrix x(total, n);
  DenseMatrix y(total, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& pair = spec.pairs()[static_cast<std::size_t>(i)];
    x.col(i) = tensor(pair.input.vector(), e0);
    y.col(i) = tensor(pair.output.vector(), DenseVector(s.col(i)));
  }

  const DenseMatrix gx = x.adjoint() * x;
  const DenseMatrix gy = y.adjoint() * y;
  const double mismatch = (gx - gy).cwiseAbs().maxCoeff();
  if (mismatch > 10.0 * static_cast<double>(n) * tol) {
    throw InternalConsistency("construct_isometry: input and dilated output Gram matrices differ "
                              "by " + std::to_string(mismatch));
  }

  auto orthonormalize = [](const DenseMatrix& cols, const DenseMatrix& g) {
    Eigen::LLT<DenseMatrix> llt(g);
    if (llt.info() != Eigen::Success) {
      throw InternalConsistency("construct_isometry: Gram matrix is not positive definite");
    }
    // Q = X L^{-dagger}
    const DenseMatrix lx = llt.matrixL();
    return DenseMatrix(lx.triangularView<Eigen::Lower>().solve(cols.adjoint()).adjoint());
  };
  const DenseMatrix qx = orthonormalize(x, gx);
  const DenseMatrix qy = orthonormalize(y, gy);

  auto complement = [total, n](const DenseMatrix& q) {
    Eigen::HouseholderQR<DenseMatrix> qr(q);
    const DenseMatrix full = qr.householderQ() * DenseMatrix::Identity(total, total);
    return DenseMatrix(full.rightCols(total - n));
  };
  const DenseMatrix px = complement(qx);
  const DenseMatrix py = complement(qy);

  Dilation out;
  out.unitary = qy * qx.adjoint() + py * px.adjoint();
  out.environment_dim = static_cast<std::size_t>(rank);
  out.environment_states = s;
  return out;
}

PureState apply_process(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                        const PureState& input, double tol) {
  if (!verdict.realizable()) {
    throw InvalidArgument("apply_process: verdict is not Realizable");
  }
  if (!environments_identical(verdict, tol)) {
    throw EnvironmentsNotIdentical(
        "apply_process: environment states differ, so the coherent extension is undefined; "
        "use output_density");
  }
  const auto inputs = spec.input_vectors();
  const auto expansion = span_coefficients(inputs, input.vector(), tol);
  if (expansion.residual > tol) {
    throw OutsideSpan("apply_process: input lies outside the span of the specified inputs "
                      "(residual " + std::to_string(expansion.residual) + ")",
                      expansion.residual);
  }
  const auto outputs = spec.output_vectors();
  DenseVector out = synthesize(outputs, expansion.coefficients);
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > 10.0 * static_cast<double>(spec.size()) * tol) {
    throw InternalConsistency("apply_process: output norm " + std::to_string(norm) +
                              " differs from 1");
  }
  return PureState::normalized({spec.dim_a(), spec.dim_b()}, std::move(out));
}

DensityMatrix::DensityMatrix(DenseMatrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw InvalidArgument("DensityMatrix: not square");
  }
  require_dimension(static_cast<std::size_t>(entries_.rows()), "DensityMatrix");
  const double trace_dev = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol) {
    throw InvalidArgument("DensityMatrix: trace differs from 1 by " + std::to_string(trace_dev));
  }
  const double lowest = hermitian_eigenvalues(entries_, tol).front();
  if (lowest < -tol) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

DensityMatrix output_density(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                             const PureState& input, double tol) {
  if (!verdict.realizable() || !verdict.completed_gram) {
    throw InvalidArgument("output_density: verdict is not Realizable");
  }
  const auto inputs = spec.input_vectors();
  const auto expansion = span_coefficients(inputs, input.vector(), tol);
  if (expansion.residual > tol) {
    throw OutsideSpan("output_density: input lies outside the span of the specified inputs "
                      "(residual " + std::to_string(expansion.residual) + ")",
                      expansion.residual);
  }
  const auto n = static_cast<Eigen::Index>(spec.size());
  const auto d = static_cast<Eigen::Index>(spec.dim_a() * spec.dim_b());
  DenseMatrix b(d, n);
  DenseVector alpha(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b.col(i) = spec.pairs()[static_cast<std::size_t>(i)].output.vector();
    alpha[i] = expansion.coefficients[static_cast<std::size_t>(i)];
  }
  const DenseMatrix weights = (alpha * alpha.adjoint()).cwiseProduct(*verdict.completed_gram);
  DenseMatrix rho = b * weights * b.adjoint();
  rho /= rho.trace().real();
  // Remove round-off asymmetry before validation.
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(std::move(rho), tol);
}

}  // namespace qcat
