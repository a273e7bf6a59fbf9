#pragma once

// One shared EPR pair plus classical communication: state teleportation and
// the gate-teleported (nonlocal) CNOT between Alice's and Bob's qubits.

#include <cstdint>
#include <variant>
#include <vector>

#include "qcat/quantum.hpp"

namespace qcat {

struct ResourceLedger {
  int ebits_consumed = 0;
  int cbits_a_to_b = 0;
  int cbits_b_to_a = 0;

  friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

struct BranchOutcome {
  std::vector<int> measurement_bits;
  double probability = 0.0;
  PureState post_state;
};

/// Every measurement branch, each with its exact probability.
struct Enumerate {};
/// A single branch drawn with a seeded generator.
struct Sample {
  std::uint64_t seed = 0;
};
using ProtocolMode = std::variant<Enumerate, Sample>;

struct ProtocolRun {
  std::vector<BranchOutcome> branches;
  ResourceLedger ledger;
};

/// Teleports a single-qubit state from Alice to Bob through a |Phi+> pair.
/// Branch bits are (m1, m2) from the Bell measurement; Bob corrects with
/// Z^m1 X^m2. Throws InvalidArgument unless input is a single qubit.
ProtocolRun teleport(const PureState& input, ProtocolMode mode = Enumerate{});

/// CNOT with Alice's qubit as control and Bob's as target, using one shared
/// pair (a1, b1) and one classical bit in each direction:
/// CNOT(A -> a1), measure a1 = m (sent to Bob), X^m on b1, CNOT(b1 -> B),
/// measure b1 in the |+/-> basis = n (sent to Alice), Z^n on A.
/// Branch bits are (m, n). Input and post states are ordered (A, B).
ProtocolRun nonlocal_cnot(const PureState& input, ProtocolMode mode = Enumerate{});

}  // namespace qcat
