#include "qcat/instances.hpp"

#include <array>
#include <cmath>

namespace qcat::instances {

namespace {

PureState two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
  DenseVector v(4);
  v << a00, a01, a10, a11;
  return PureState({2, 2}, std::move(v));
}

ProcessSpec from_factors(const std::array<PureState, 3>& in_a, const std::array<PureState, 3>& in_b,
                         const std::array<PureState, 3>& out_a, const std::array<PureState, 3>& out_b,
                         InputIndependence independence = InputIndependence::required) {
  std::vector<ProcessPair> pairs;
  for (std::size_t i = 0; i < 3; ++i) {
    pairs.push_back({tensor(in_a[i], in_b[i]), tensor(out_a[i], out_b[i])});
  }
  return ProcessSpec(2, 2, std::move(pairs), kDefaultTolerance, independence);
}

}  // namespace

ProcessSpec cloning_spec() {
  const auto phi = paper_states(StateSetId::phi).states;
  const auto psi = paper_states(StateSetId::psi).states;
  return from_factors(psi, phi, psi, psi);
}

ProcessSpec deletion_spec() {
  const auto phi = paper_states(StateSetId::phi).states;
  const auto psi = paper_states(StateSetId::psi).states;
  return from_factors(psi, psi, psi, phi);
}

ProcessSpec no_info_cloning_spec() {
  const auto psi = paper_states(StateSetId::psi).states;
  const std::array<PureState, 3> blank{ket_zero(), ket_zero(), ket_zero()};
  // |+>|0> = (|0>|0> + |1>|0>)/sqrt(2): the inputs are linearly dependent.
  return from_factors(psi, blank, psi, psi, InputIndependence::not_required);
}

ProcessSpec identity_spec() {
  const auto phi = paper_states(StateSetId::phi).states;
  const auto psi = paper_states(StateSetId::psi).states;
  return from_factors(psi, phi, psi, phi);
}

PureState deletion_residue(double u) {
  const Complex e = std::polar(1.0, u);
  DenseVector v(2);
  v << (1.0 + e) / 2.0, (1.0 - e) / 2.0;
  return PureState::normalized({2}, std::move(v));
}

ProcessSpec generalized_deletion_spec(double u, double v) {
  const auto psi = paper_states(StateSetId::psi).states;
  const std::array<PureState, 3> residue{deletion_residue(u), deletion_residue(v), ket_plus()};
  return from_factors(psi, psi, psi, residue);
}

PureState cloning_witness_input() { return tensor(ket_plus(), ket_zero()); }

PureState cloning_witness_output() { return bell_phi_plus(); }

PureState deletion_witness_input() {
  const Complex i(0.0, 1.0);
  return two_qubit(0.5, 0.5 * i, 0.5 * i, -0.5);
}

PureState deletion_witness_output() {
  const Complex i(0.0, 1.0);
  // (|-> |0> + i |+> |1>) / sqrt(2)
  return two_qubit(0.5, 0.5 * i, -0.5, 0.5 * i);
}

std::vector<Complex> deletion_witness_coefficients() {
  const Complex i(0.0, 1.0);
  return {(1.0 - i) / 2.0, -(1.0 + i) / 2.0, i};
}

}  // namespace qcat::instances
