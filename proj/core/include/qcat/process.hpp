#pragma once

// Realizability of pure-state transformations {|a_i> -> |b_i>} on A (x) B.
//
// Any physical process can be dilated to a unitary U acting on the system and
// an environment starting in a fixed state |S>:
//
//     U |a_i>|S> = |b_i>|S_i>.
//
// Taking inner products gives <a_i|a_j> = <b_i|b_j> <S_i|S_j>, so the
// environment Gram matrix E_ij = <S_i|S_j> is pinned wherever <b_i|b_j> is
// nonzero. The transformation is realizable iff the pinned entries can be
// completed to a positive-semidefinite matrix with unit diagonal. When the
// completion is forced to all-ones, every environment ends in the same state
// and the process acts linearly on superpositions of the inputs.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qcat/numerics.hpp"
#include "qcat/quantum.hpp"

namespace qcat {

struct ProcessPair {
  PureState input;
  PureState output;
};

enum class InputIndependence { required, not_required };

class ProcessSpec {
public:
  /// Throws DimensionMismatch if a state is not on (dimA, dimB),
  /// InvalidArgument for an empty pair list, and DependentBasis when the
  /// inputs are linearly dependent (smallest Gram eigenvalue <= tol) unless
  /// independence is explicitly not_required. Feasibility analysis works for
  /// dependent inputs; the isometry, coherent extension, and witness search
  /// do not.
  ProcessSpec(std::size_t dim_a, std::size_t dim_b, std::vector<ProcessPair> pairs,
              double tol = kDefaultTolerance,
              InputIndependence independence = InputIndependence::required);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<ProcessPair>& pairs() const noexcept { return pairs_; }

  std::vector<DenseVector> input_vectors() const;
  std::vector<DenseVector> output_vectors() const;

  bool inputs_independent() const noexcept { return inputs_independent_; }
  double smallest_input_gram_eigenvalue() const noexcept { return smallest_gram_eigenvalue_; }

private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<ProcessPair> pairs_;
  bool inputs_independent_ = true;
  double smallest_gram_eigenvalue_ = 0.0;
};

/// G[i][j] = <state_i|state_j>.
DenseMatrix gram_matrix(std::span<const PureState> states);

/// Required environment overlaps <S_i|S_j>. Off-diagonal entries are either
/// pinned to a value or free; the diagonal is 1.
class EnvironmentGram {
public:
  explicit EnvironmentGram(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool is_free(std::size_t i, std::size_t j) const;
  Complex value(std::size_t i, std::size_t j) const;  // throws for a free entry
  /// Pins (i, j) and its conjugate partner (j, i).
  void set(std::size_t i, std::size_t j, Complex value);
  /// Upper-triangle free positions in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> free_entries() const;
  /// Dense matrix with free entries filled by the given values (same order
  /// as free_entries()).
  DenseMatrix fill(std::span<const Complex> free_values) const;

private:
  std::size_t n_;
  std::vector<std::optional<Complex>> entries_;
};

enum class FeasibilityStatus { realizable, infeasible, undetermined };
enum class CertificateReason { modulus_violation, output_null_input_not, psd_violation };

std::string_view to_string(FeasibilityStatus status);
std::string_view to_string(CertificateReason reason);

struct InfeasibilityCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  CertificateReason reason = CertificateReason::modulus_violation;
  /// modulus_violation: |G_in/G_out|; output_null_input_not: |G_in|;
  /// psd_violation: best minimum eigenvalue reached by the search.
  double magnitude = 0.0;
};

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::undetermined;
  std::optional<DenseMatrix> completed_gram;
  std::optional<InfeasibilityCertificate> certificate;
  /// Free entries left after propagation; set for every verdict from complete_psd.
  std::size_t free_entries = 0;

  bool realizable() const noexcept { return status == FeasibilityStatus::realizable; }
};

/// Maximum number of free entries complete_psd will search over.
inline constexpr std::size_t kMaxFreeEntries = 3;

/// Either the environment Gram pattern or an early Infeasible verdict.
std::variant<EnvironmentGram, FeasibilityVerdict> environment_gram(
    const ProcessSpec& spec, double tol = kDefaultTolerance);

/// Completes free entries of an environment Gram pattern to a PSD matrix.
///
/// Entries forced by unit-modulus chains (|E_ik| = |E_kj| = 1 implies
/// E_ij = E_ik E_kj) are filled exactly first. Remaining free entries are
/// searched over the closed unit disk on a polar grid (step 0.05 in modulus
/// and phase, then two local refinements at 1/10 the step each), cycling
/// over entries, maximizing the minimum eigenvalue. Ties go to the
/// lexicographically smallest grid point. More than kMaxFreeEntries free
/// entries yields Undetermined.
FeasibilityVerdict complete_psd(const EnvironmentGram& eg, double tol = kDefaultTolerance);

/// environment_gram followed by complete_psd.
FeasibilityVerdict analyze_feasibility(const ProcessSpec& spec, double tol = kDefaultTolerance);

/// True when the completed environment Gram matrix is all-ones within tol.
bool environments_identical(const FeasibilityVerdict& verdict, double tol = kDefaultTolerance);

struct Dilation {
  /// Unitary on (A (x) B) (x) E, environment index least significant.
  DenseMatrix unitary;
  std::size_t environment_dim = 0;
  /// Environment states |S_i> (columns), with E = S^dagger S.
  DenseMatrix environment_states;
};

/// Builds a unitary V with V (a_i (x) |e0>) = b_i (x) |S_i>.
/// Throws InvalidArgument if the verdict is not Realizable, DependentBasis
/// for dependent inputs, and
/// InternalConsistency if {a_i (x) e0} and {b_i (x) S_i} have different Gram
/// matrices beyond tolerance.
Dilation construct_isometry(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                            double tol = kDefaultTolerance);

/// Coherent extension sum_i alpha_i |b_i> for input sum_i alpha_i |a_i>.
/// Throws EnvironmentsNotIdentical unless the completed Gram is all-ones, and
/// OutsideSpan if the input is not in span{a_i}.
PureState apply_process(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                        const PureState& input, double tol = kDefaultTolerance);

/// Density matrix on A (x) B, validated Hermitian, unit trace, and PSD.
class DensityMatrix {
public:
  explicit DensityMatrix(DenseMatrix entries, double tol = kDefaultTolerance);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const DenseMatrix& entries() const noexcept { return entries_; }
  double purity() const;

private:
  DenseMatrix entries_;
};

/// rho = sum_ij alpha_i conj(alpha_j) E_ij |b_i><b_j|, trace-normalized.
DensityMatrix output_density(const ProcessSpec& spec, const FeasibilityVerdict& verdict,
                             const PureState& input, double tol = kDefaultTolerance);

}  // namespace qcat
