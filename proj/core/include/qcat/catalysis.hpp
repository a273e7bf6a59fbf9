#pragma once

// Classification of realizable processes as catalysis of information.
//
// A process is catalysis when Alice's factor is left unchanged on every
// specified pair. It is quantum catalysis when, in addition, its coherent
// extension turns some separable superposition of the inputs into an
// entangled output: such an interaction can distribute entanglement, which
// classical communication alone cannot.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/process.hpp"

namespace qcat {

inline constexpr std::size_t kWitnessSamples = 10'000;
/// Output concurrence a witness must exceed.
inline constexpr double kWitnessThreshold = 1e-6;
/// Witnesses whose output concurrence is this close to the best are all kept.
inline constexpr double kWitnessTieWindow = 1e-9;

/// Concurrence across the A|B cut of a state on (dimA, dimB); equals
/// 2|ad - bc| for two qubits.
double bipartite_concurrence(const PureState& state);

struct WitnessRecord {
  PureState input;
  PureState output;
  double concurrence_in = 0.0;
  double concurrence_out = 0.0;
  std::vector<Complex> coefficients;
  /// "pair(i,j)", "cloning_witness", "deletion_witness" or "sample(k)".
  std::string origin;
};

struct PairIntegrity {
  bool intact = false;
  /// |<A-factor of a_i | A-factor of b_i>|^2, or 0 when a factor is missing.
  double fidelity = 0.0;
  /// Empty when intact; otherwise why the pair failed.
  std::string detail;
};

struct CatalystIntegrity {
  std::vector<PairIntegrity> pairs;
  bool overall = false;
  std::optional<std::size_t> first_failure;
};

/// Checks that every a_i and b_i is a product across A|B and that Alice's
/// factor is unchanged (fidelity >= 1 - tol).
CatalystIntegrity catalyst_intact(const ProcessSpec& spec, double tol = kDefaultTolerance);

/// All witnesses within kWitnessTieWindow of the largest output concurrence,
/// best first (ties in candidate order), duplicates of the same input dropped.
///
/// Candidates in order: uniform pairwise superpositions (a_i + a_j) for i < j;
/// the cloning and deletion witness inputs when the spec is two-qubit and they
/// lie in span{a_i}; then kWitnessSamples coefficient vectors from a Halton
/// sequence mapped to the complex unit sphere. A candidate qualifies when its
/// input concurrence is <= tol and its output concurrence exceeds
/// kWitnessThreshold. Throws EnvironmentsNotIdentical if the verdict does not
/// force identical environments.
std::vector<WitnessRecord> find_entangling_witnesses(const ProcessSpec& spec,
                                                     const FeasibilityVerdict& verdict,
                                                     double tol = kDefaultTolerance,
                                                     std::uint64_t seed = 0);

std::optional<WitnessRecord> find_entangling_witness(const ProcessSpec& spec,
                                                     const FeasibilityVerdict& verdict,
                                                     double tol = kDefaultTolerance,
                                                     std::uint64_t seed = 0);

enum class Classification { quantum_catalysis, no_entangling_witness_found, not_catalysis };

std::string_view to_string(Classification c);

struct CatalysisReport {
  FeasibilityVerdict verdict;
  CatalystIntegrity integrity;
  bool coherence_preserving = false;
  Classification classification = Classification::not_catalysis;
  /// Set for not_catalysis: the certificate or the first disturbed pair.
  std::string reason;
  /// Maximal witnesses; nonempty iff classification is quantum_catalysis.
  std::vector<WitnessRecord> witnesses;
  /// Two inputs share Bob's factor but their outputs do not, so Bob could
  /// not perform the conversion on his own.
  bool bob_alone_impossible = false;
  std::optional<std::pair<std::size_t, std::size_t>> bob_alone_pair;
};

CatalysisReport classify(const ProcessSpec& spec, double tol = kDefaultTolerance,
                         std::uint64_t seed = 0);

struct DeletionFamilyPoint {
  double u = 0.0;
  double v = 0.0;
  /// <phi'_1|phi'_2> = (1 + e^{i(v-u)}) / 2
  Complex overlap;
  /// Concurrence of the process output for the deletion witness input.
  double out_concurrence = 0.0;
  /// max_j | <phi'_j|phi'_3> - 1/sqrt(2) |
  double reversibility_error = 0.0;
  Classification classification = Classification::not_catalysis;
};

/// Sweeps v - u over [0, 2 pi) in `steps` points with u = 0. Throws
/// InvalidArgument when steps < 2.
std::vector<DeletionFamilyPoint> deletion_family_sweep(std::size_t steps,
                                                       double tol = kDefaultTolerance,
                                                       std::uint64_t seed = 0);

}  // namespace qcat
