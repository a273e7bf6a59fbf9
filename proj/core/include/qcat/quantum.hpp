#pragma once

// Pure states on composite systems, named qubit gates, and bipartite
// entanglement measures.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/numerics.hpp"

namespace qcat {

/// Normalized amplitude vector over a product of subsystems. Indices are
/// row-major with the first subsystem most significant.
class PureState {
public:
  /// Validates that ||vector|| = 1 within tol and dims multiply to its size.
  PureState(std::vector<std::size_t> dims, DenseVector vector, double tol = kDefaultTolerance);

  /// Rescales vector to unit norm. Throws InvalidArgument for a zero vector.
  static PureState normalized(std::vector<std::size_t> dims, DenseVector vector);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const DenseVector& vector() const noexcept { return vector_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(vector_.size()); }
  Complex amplitude(std::size_t index) const { return vector_[static_cast<Eigen::Index>(index)]; }

  /// Product dimension of subsystems [0, split) and [split, dims().size()).
  std::pair<std::size_t, std::size_t> cut(std::size_t split) const;

private:
  std::vector<std::size_t> dims_;
  DenseVector vector_;
};

PureState tensor(const PureState& a, const PureState& b);
Complex inner(const PureState& a, const PureState& b);

/// |<a|b>|^2. Throws DimensionMismatch when the subsystem signatures differ.
double fidelity(const PureState& a, const PureState& b);

// Single-qubit kets used throughout.
PureState ket_zero();
PureState ket_one();
PureState ket_plus();
PureState ket_minus();
/// (|00> + |11>)/sqrt(2)
PureState bell_phi_plus();

enum class StateSetId { phi, psi };

/// The three-state input set {|0>, |0>, |+>} (phi) and target set
/// {|0>, |1>, |+>} (psi) of the cloning-like catalysis.
struct PaperStateSet {
  StateSetId id;
  std::array<PureState, 3> states;
};

PaperStateSet paper_states(StateSetId id);
/// Accepts "phi" or "psi"; throws InvalidArgument otherwise.
PaperStateSet paper_states(std::string_view id);

enum class GateName { X, Z, H, CNOT };

struct GateSpec {
  GateName name;
  std::vector<std::size_t> targets;  // control first for CNOT
};

/// 2x2 or 4x4 matrix of a named gate (CNOT in control-major ordering).
DenseMatrix gate_matrix(GateName name);

/// Applies a named qubit gate. Throws InvalidArgument for out-of-range,
/// repeated, or non-qubit targets, or a wrong number of targets.
PureState apply_gate(const GateSpec& gate, const PureState& state);

/// Applies an arbitrary square matrix to the listed subsystems (in the
/// order given), identity elsewhere. A non-unitary op throws through the
/// PureState norm check.
PureState apply_local(const DenseMatrix& op, std::span<const std::size_t> targets,
                      const PureState& state);

/// dimA x dimB coefficient matrix for the cut at split.
DenseMatrix coefficient_matrix(const PureState& state, std::size_t split);

/// Singular values of the coefficient matrix, nonincreasing, min(dimA, dimB) of them.
std::vector<double> schmidt_coefficients(const PureState& state, std::size_t split);

/// Pure-state concurrence across an arbitrary cut: sqrt(2 (1 - Tr rho_A^2)),
/// evaluated from 2x2 minors of the coefficient matrix so product states give
/// exactly zero up to round-off in the amplitudes themselves.
double pure_concurrence(const PureState& state, std::size_t split);

/// Two-qubit concurrence 2|ad - bc|. Throws InvalidArgument unless dims = (2, 2).
double concurrence(const PureState& state);

struct ProductFactors {
  PureState a;
  PureState b;
};

/// Splits a product state into its two factors. factorA has its first
/// non-negligible amplitude real and positive; the global phase lives in
/// factorB. Throws EntangledState if the largest Schmidt coefficient is
/// below 1 - tol.
ProductFactors product_factorize(const PureState& state, std::size_t split,
                                 double tol = kDefaultTolerance);

}  // namespace qcat
