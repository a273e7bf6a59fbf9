#include "qcat/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Amplitudes below this modulus are ignored when fixing the factor phase.
constexpr double kPhaseAnchorThreshold = 1e-6;

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

PureState qubit(Complex a0, Complex a1) {
  DenseVector v(2);
  v << a0, a1;
  return PureState({2}, std::move(v));
}

}  // namespace

PureState::PureState(std::vector<std::size_t> dims, DenseVector vector, double tol)
    : dims_(std::move(dims)), vector_(std::move(vector)) {
  if (dims_.empty()) {
    throw InvalidArgument("PureState: empty subsystem signature");
  }
  for (auto d : dims_) require_dimension(d, "PureState subsystem");
  const std::size_t total = product(dims_);
  require_dimension(total, "PureState");
  if (total != static_cast<std::size_t>(vector_.size())) {
    throw DimensionMismatch("PureState: dims multiply to " + std::to_string(total) +
                            " but vector has " + std::to_string(vector_.size()) + " amplitudes");
  }
  require_finite(vector_, "PureState");
  const double norm = vector_.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw InvalidArgument("PureState: norm " + std::to_string(norm) + " is not 1");
  }
}

PureState PureState::normalized(std::vector<std::size_t> dims, DenseVector vector) {
  const double norm = vector.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("PureState::normalized: vector has zero or non-finite norm");
  }
  vector /= norm;
  return PureState(std::move(dims), std::move(vector));
}

std::pair<std::size_t, std::size_t> PureState::cut(std::size_t split) const {
  if (split == 0 || split >= dims_.size()) {
    throw InvalidArgument("PureState::cut: split " + std::to_string(split) +
                          " does not leave two nonempty factors of " +
                          std::to_string(dims_.size()) + " subsystems");
  }
  std::size_t da = 1;
  for (std::size_t k = 0; k < split; ++k) da *= dims_[k];
  return {da, dimension() / da};
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(std::move(dims), tensor(a.vector(), b.vector()));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims()) {
    throw DimensionMismatch("inner: states have different subsystem signatures");
  }
  return inner(a.vector(), b.vector());
}

double fidelity(const PureState& a, const PureState& b) {
  return std::min(1.0, std::norm(inner(a, b)));
}

PureState ket_zero() { return qubit(1.0, 0.0); }
PureState ket_one() { return qubit(0.0, 1.0); }
PureState ket_plus() { return qubit(kInvSqrt2, kInvSqrt2); }
PureState ket_minus() { return qubit(kInvSqrt2, -kInvSqrt2); }

PureState bell_phi_plus() {
  DenseVector v = DenseVector::Zero(4);
  v[0] = kInvSqrt2;
  v[3] = kInvSqrt2;
  return PureState({2, 2}, std::move(v));
}

PaperStateSet paper_states(StateSetId id) {
  switch (id) {
    case StateSetId::phi:
      return {id, {ket_zero(), ket_zero(), ket_plus()}};
    case StateSetId::psi:
      return {id, {ket_zero(), ket_one(), ket_plus()}};
  }
  throw InvalidArgument("paper_states: unknown set");
}

PaperStateSet paper_states(std::string_view id) {
  if (id == "phi") return paper_states(StateSetId::phi);
  if (id == "psi") return paper_states(StateSetId::psi);
  throw InvalidArgument("paper_states: unknown set '" + std::string(id) +
                        "' (expected phi or psi)");
}

DenseMatrix gate_matrix(GateName name) {
  switch (name) {
    case GateName::X: {
      DenseMatrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateName::Z: {
      DenseMatrix m(2, 2);
      m << 1, 0, 0, -1;
      return m;
    }
    case GateName::H: {
      DenseMatrix m(2, 2);
      m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
      return m;
    }
    case GateName::CNOT: {
      DenseMatrix m = DenseMatrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
  }
  throw InvalidArgument("gate_matrix: unknown gate");
}

PureState apply_local(const DenseMatrix& op, std::span<const std::size_t> targets,
                      const PureState& state) {
  const auto& dims = state.dims();
  std::size_t sub_dim = 1;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (targets[k] >= dims.size()) {
      throw InvalidArgument("apply_local: target " + std::to_string(targets[k]) +
                            " out of range for " + std::to_string(dims.size()) + " subsystems");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (targets[j] == targets[k]) {
        throw InvalidArgument("apply_local: repeated target " + std::to_string(targets[k]));
      }
    }
    sub_dim *= dims[targets[k]];
  }
  if (targets.empty() || op.rows() != op.cols() ||
      static_cast<std::size_t>(op.rows()) != sub_dim) {
    throw DimensionMismatch("apply_local: operator size does not match targeted subsystems");
  }

  // strides[k]: index step for subsystem k (first subsystem most significant).
  std::vector<std::size_t> strides(dims.size());
  std::size_t stride = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = stride;
    stride *= dims[k];
  }

  const std::size_t total = state.dimension();
  const DenseVector& in = state.vector();
  DenseVector out = DenseVector::Zero(in.size());
  std::vector<std::size_t> sub_offsets(sub_dim);
  for (std::size_t t = 0; t < sub_dim; ++t) {
    std::size_t rem = t;
    std::size_t offset = 0;
    for (std::size_t k = targets.size(); k-- > 0;) {
      const std::size_t d = dims[targets[k]];
      offset += (rem % d) * strides[targets[k]];
      rem /= d;
    }
    sub_offsets[t] = offset;
  }

  for (std::size_t index = 0; index < total; ++index) {
    // Visit each block once, from the index whose targeted digits are all zero.
    bool base = true;
    for (auto t : targets) {
      if ((index / strides[t]) % dims[t] != 0) {
        base = false;
        break;
      }
    }
    if (!base) continue;
    for (std::size_t r = 0; r < sub_dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < sub_dim; ++c) {
        acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
               in[static_cast<Eigen::Index>(index + sub_offsets[c])];
      }
      out[static_cast<Eigen::Index>(index + sub_offsets[r])] = acc;
    }
  }
  return PureState(dims, std::move(out));
}

PureState apply_gate(const GateSpec& gate, const PureState& state) {
  const std::size_t arity = gate.name == GateName::CNOT ? 2 : 1;
  if (gate.targets.size() != arity) {
    throw InvalidArgument("apply_gate: gate expects " + std::to_string(arity) +
                          " target(s), got " + std::to_string(gate.targets.size()));
  }
  for (auto t : gate.targets) {
    if (t >= state.dims().size()) {
      throw InvalidArgument("apply_gate: target " + std::to_string(t) + " out of range");
    }
    if (state.dims()[t] != 2) {
      throw InvalidArgument("apply_gate: target " + std::to_string(t) + " is not a qubit");
    }
  }
  return apply_local(gate_matrix(gate.name), gate.targets, state);
}

DenseMatrix coefficient_matrix(const PureState& state, std::size_t split) {
  const auto [da, db] = state.cut(split);
  DenseMatrix m(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < db; ++b) {
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = state.amplitude(a * db + b);
    }
  }
  return m;
}

std::vector<double> schmidt_coefficients(const PureState& state, std::size_t split) {
  const DenseMatrix m = coefficient_matrix(state, split);
  Eigen::JacobiSVD<DenseMatrix> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double pure_concurrence(const PureState& state, std::size_t split) {
  const DenseMatrix m = coefficient_matrix(state, split);
  // 1 - Tr rho_A^2 = 2 * sum over 2x2 minors |m_ik m_jl - m_il m_jk|^2.
  double minors = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.rows(); ++j) {
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        for (Eigen::Index l = k + 1; l < m.cols(); ++l) {
          minors += std::norm(m(i, k) * m(j, l) - m(i, l) * m(j, k));
        }
      }
    }
  }
  return std::min(1.0, 2.0 * std::sqrt(minors));
}

double concurrence(const PureState& state) {
  if (state.dims() != std::vector<std::size_t>{2, 2}) {
    throw InvalidArgument("concurrence: expected a two-qubit state with dims (2, 2)");
  }
  const Complex a = state.amplitude(0);
  const Complex b = state.amplitude(1);
  const Complex c = state.amplitude(2);
  const Complex d = state.amplitude(3);
  return std::min(1.0, 2.0 * std::abs(a * d - b * c));
}

ProductFactors product_factorize(const PureState& state, std::size_t split, double tol) {
  const DenseMatrix m = coefficient_matrix(state, split);
  Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s[0] < 1.0 - tol) {
    const double second = s.size() > 1 ? s[1] : 0.0;
    throw EntangledState("product_factorize: state is entangled (second Schmidt coefficient " +
                             std::to_string(second) + ")",
                         second);
  }

  DenseVector fa = svd.matrixU().col(0);
  for (Eigen::Index k = 0; k < fa.size(); ++k) {
    if (std::abs(fa[k]) > kPhaseAnchorThreshold) {
      fa *= std::conj(fa[k]) / std::abs(fa[k]);
      fa[k] = std::abs(fa[k]);
      break;
    }
  }
  fa.normalize();
  // factorB_j = sum_a conj(factorA_a) m(a, j) carries the residual phase.
  DenseVector fb = m.transpose() * fa.conjugate();
  fb.normalize();

  std::vector<std::size_t> dims_a(state.dims().begin(),
                                  state.dims().begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<std::size_t> dims_b(state.dims().begin() + static_cast<std::ptrdiff_t>(split),
                                  state.dims().end());
  return {PureState(std::move(dims_a), std::move(fa)), PureState(std::move(dims_b), std::move(fb))};
}

}  // namespace qcat
