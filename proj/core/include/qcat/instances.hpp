#pragma once

// Named states and process specifications for the cloning-like and
// deletion-like catalysis examples. Alice holds subsystem A, Bob holds B.

#include "qcat/process.hpp"
#include "qcat/quantum.hpp"

namespace qcat::instances {

/// |psi_i>_A |phi_i>_B -> |psi_i>_A |psi_i>_B for i = 1, 2, 3.
ProcessSpec cloning_spec();

/// |psi_i>_A |psi_i>_B -> |psi_i>_A |phi_i>_B, the inverse of cloning_spec().
ProcessSpec deletion_spec();

/// Bob starts with no information: |psi_i>_A |0>_B -> |psi_i>_A |psi_i>_B.
/// Not realizable by any physical process. The inputs are linearly
/// dependent, so the spec is built with InputIndependence::not_required.
ProcessSpec no_info_cloning_spec();

/// |psi_i>_A |phi_i>_B -> |psi_i>_A |phi_i>_B.
ProcessSpec identity_spec();

/// ((1 + e^{iu})|0> + (1 - e^{iu})|1>) / 2, every state with <+|.> = 1/sqrt(2)
/// up to global phase.
PureState deletion_residue(double u);

/// |psi_i>_A |psi_i>_B -> |psi_i>_A |phi'_i>_B with phi'_1 = deletion_residue(u),
/// phi'_2 = deletion_residue(v), phi'_3 = |+>.
ProcessSpec generalized_deletion_spec(double u, double v);

/// |+>_A |0>_B, the separable superposition of the first two cloning inputs.
PureState cloning_witness_input();
/// (|00> + |11>) / sqrt(2)
PureState cloning_witness_output();

/// (|0> + i|1>)(|0> + i|1>) / 2, separable and inside span{|psi_i>|psi_i>}.
PureState deletion_witness_input();
/// (|->|0> + i|+>|1>) / sqrt(2)
PureState deletion_witness_output();

/// Expansion coefficients of deletion_witness_input() in {|psi_i>|psi_i>}:
/// ((1 - i)/2, -(1 + i)/2, i).
std::vector<Complex> deletion_witness_coefficients();

}  // namespace qcat::instances
