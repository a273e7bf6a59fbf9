#include "qcat/teleportation.hpp"

#include <random>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Partial {
  std::vector<std::size_t> dims;
  DenseVector amplitudes;  // unnormalized
};

// <bra| on one qubit subsystem; the subsystem is removed from the result.
Partial contract(const Partial& state, std::size_t qubit, const DenseVector& bra) {
  std::size_t inner_stride = 1;
  for (std::size_t k = qubit + 1; k < state.dims.size(); ++k) inner_stride *= state.dims[k];
  const std::size_t outer = static_cast<std::size_t>(state.amplitudes.size()) / (2 * inner_stride);

  Partial out;
  out.dims = state.dims;
  out.dims.erase(out.dims.begin() + static_cast<std::ptrdiff_t>(qubit));
  out.amplitudes = DenseVector::Zero(static_cast<Eigen::Index>(outer * inner_stride));
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < inner_stride; ++i) {
      const auto src0 = static_cast<Eigen::Index>((o * 2 + 0) * inner_stride + i);
      const auto src1 = static_cast<Eigen::Index>((o * 2 + 1) * inner_stride + i);
      out.amplitudes[static_cast<Eigen::Index>(o * inner_stride + i)] =
          std::conj(bra[0]) * state.amplitudes[src0] + std::conj(bra[1]) * state.amplitudes[src1];
    }
  }
  return out;
}

Partial gate(const Partial& state, GateName name, std::vector<std::size_t> targets) {
  const PureState normalized = PureState::normalized(state.dims, state.amplitudes);
  const double scale = state.amplitudes.norm();
  Partial out{state.dims, apply_gate({name, std::move(targets)}, normalized).vector() * scale};
  return out;
}

DenseVector computational(int bit) {
  DenseVector v = DenseVector::Zero(2);
  v[bit] = 1.0;
  return v;
}

DenseVector hadamard_basis(int bit) {
  DenseVector v(2);
  v << kInvSqrt2, bit == 0 ? kInvSqrt2 : -kInvSqrt2;
  return v;
}

BranchOutcome finish(std::vector<int> bits, Partial state) {
  const double probability = state.amplitudes.squaredNorm();
  return {std::move(bits), probability, PureState::normalized(state.dims, state.amplitudes)};
}

ProtocolRun select(std::vector<BranchOutcome> branches, ResourceLedger ledger,
                   const ProtocolMode& mode) {
  if (const auto* sample = std::get_if<Sample>(&mode)) {
    std::mt19937_64 rng(sample->seed);
    const double draw = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double cumulative = 0.0;
    std::size_t chosen = branches.size() - 1;
    for (std::size_t k = 0; k < branches.size(); ++k) {
      cumulative += branches[k].probability;
      if (draw < cumulative) {
        chosen = k;
        break;
      }
    }
    return {{std::move(branches[chosen])}, ledger};
  }
  return {std::move(branches), ledger};
}

void require_qubits(const PureState& input, std::size_t count, const char* what) {
  if (input.dims() != std::vector<std::size_t>(count, 2)) {
    throw InvalidArgument(std::string(what) + ": expected a " + std::to_string(count) +
                          "-qubit input");
  }
}

}  // namespace

ProtocolRun teleport(const PureState& input, ProtocolMode mode) {
  require_qubits(input, 1, "teleport");
  // Qubits: 0 = input (Alice), 1 = Alice's half of the pair, 2 = Bob's half.
  Partial state{{2, 2, 2}, tensor(input, bell_phi_plus()).vector()};
  state = gate(state, GateName::CNOT, {0, 1});
  state = gate(state, GateName::H, {0});

  std::vector<BranchOutcome> branches;
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      Partial bob = contract(contract(state, 0, computational(m1)), 0, computational(m2));
      if (m2 == 1) bob = gate(bob, GateName::X, {0});
      if (m1 == 1) bob = gate(bob, GateName::Z, {0});
      branches.push_back(finish({m1, m2}, std::move(bob)));
    }
  }
  return select(std::move(branches), ResourceLedger{1, 2, 0}, mode);
}

ProtocolRun nonlocal_cnot(const PureState& input, ProtocolMode mode) {
  require_qubits(input, 2, "nonlocal_cnot");
  // Qubits: 0 = A, 1 = a1 (Alice's half), 2 = b1 (Bob's half), 3 = B.
  const DenseVector& in = input.vector();
  const PureState pair = bell_phi_plus();
  const DenseVector& bell = pair.vector();
  Partial state{{2, 2, 2, 2}, DenseVector::Zero(16)};
  for (int a = 0; a < 2; ++a) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int b1 = 0; b1 < 2; ++b1) {
        for (int b = 0; b < 2; ++b) {
          state.amplitudes[a * 8 + a1 * 4 + b1 * 2 + b] = in[a * 2 + b] * bell[a1 * 2 + b1];
        }
      }
    }
  }
  state = gate(state, GateName::CNOT, {0, 1});

  std::vector<BranchOutcome> branches;
  for (int m = 0; m < 2; ++m) {
    // Remaining qubits: 0 = A, 1 = b1, 2 = B.
    Partial after_m = contract(state, 1, computational(m));
    if (m == 1) after_m = gate(after_m, GateName::X, {1});
    after_m = gate(after_m, GateName::CNOT, {1, 2});
    for (int n = 0; n < 2; ++n) {
      Partial ab = contract(after_m, 1, hadamard_basis(n));
      if (n == 1) ab = gate(ab, GateName::Z, {0});
      branches.push_back(finish({m, n}, std::move(ab)));
    }
  }
  return select(std::move(branches), ResourceLedger{1, 1, 1}, mode);
}

}  // namespace qcat
