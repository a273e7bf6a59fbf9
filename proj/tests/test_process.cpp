#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include <gtest/gtest.h>

#include "qcat/errors.hpp"
#include "qcat/instances.hpp"
#include "qcat/process.hpp"
#include "qcat/random.hpp"
#include "support.hpp"

using namespace qcat;

namespace {

constexpr double kH = 1.0 / std::numbers::sqrt2;

PureState ab(const PureState& a, const PureState& b) { return tensor(a, b); }

DenseVector with_env(const DenseVector& v, std::size_t env_dim) {
  return tensor(v, DenseVector::Unit(static_cast<Eigen::Index>(env_dim), 0));
}

double dilation_pair_error(const ProcessSpec& spec, const Dilation& d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const DenseVector got = d.unitary * with_env(spec.pairs()[i].input.vector(), d.environment_dim);
    const DenseVector want = tensor(spec.pairs()[i].output.vector(),
                                    d.environment_states.col(static_cast<Eigen::Index>(i)));
    worst = std::max(worst, (got - want).norm());
  }
  return worst;
}

double unitarity_error(const DenseMatrix& v) {
  return (v.adjoint() * v - DenseMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
}

// |00> -> |00>, |01> -> |11>: orthogonal pairs with nothing pinned between them.
ProcessSpec two_orthogonal_pairs() {
  return ProcessSpec(2, 2, {{ab(ket_zero(), ket_zero()), ab(ket_zero(), ket_zero())},
                            {ab(ket_zero(), ket_one()), ab(ket_one(), ket_one())}});
}

}  // namespace

TEST(ProcessSpecTest, RejectsDependentInputs) {
  try {
    ProcessSpec(2, 2, {{ab(ket_zero(), ket_zero()), ab(ket_zero(), ket_zero())},
                       {ab(ket_zero(), ket_zero()), ab(ket_one(), ket_zero())}});
    FAIL() << "expected DependentBasis";
  } catch (const DependentBasis& e) {
    EXPECT_NEAR(e.smallest_gram_eigenvalue(), 0.0, 1e-12);
  }
}

TEST(ProcessSpecTest, RejectsWrongDimsAndEmpty) {
  EXPECT_THROW(ProcessSpec(2, 2, {{ket_zero(), ket_zero()}}), DimensionMismatch);
  EXPECT_THROW(ProcessSpec(2, 2, {}), InvalidArgument);
}

TEST(ProcessSpecTest, DependentInputsOnRequest) {
  const auto spec = instances::no_info_cloning_spec();
  EXPECT_FALSE(spec.inputs_independent());
  EXPECT_NEAR(spec.smallest_input_gram_eigenvalue(), 0.0, 1e-12);
}

TEST(GramMatrix, ExampleSets) {
  for (const auto& spec : {instances::cloning_spec(), instances::deletion_spec()}) {
    std::vector<PureState> inputs;
    for (const auto& p : spec.pairs()) inputs.push_back(p.input);
    const DenseMatrix g = gram_matrix(inputs);
    EXPECT_NEAR(std::abs(g(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g(0, 2) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g(1, 2) - 0.5), 0.0, 1e-15);
  }
  const std::vector<PureState> same(3, ket_plus());
  EXPECT_LT((gram_matrix(same) - DenseMatrix::Ones(3, 3)).cwiseAbs().maxCoeff(), 1e-15);
  const std::vector<PureState> mixed{ket_zero(), bell_phi_plus()};
  EXPECT_THROW(gram_matrix(mixed), DimensionMismatch);
}

TEST(EnvironmentGramTest, CloningPattern) {
  const auto g = std::get<EnvironmentGram>(environment_gram(instances::cloning_spec()));
  EXPECT_TRUE(g.is_free(0, 1));
  EXPECT_TRUE(g.is_free(1, 0));
  EXPECT_NEAR(std::abs(g.value(0, 2) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(g.value(1, 2) - 1.0), 0.0, 1e-12);
  EXPECT_THROW(g.value(0, 1), InvalidArgument);
  ASSERT_EQ(g.free_entries().size(), 1u);
}

TEST(EnvironmentGramTest, NoInformationCloningIsInfeasible) {
  const auto eg = environment_gram(instances::no_info_cloning_spec());
  ASSERT_TRUE(std::holds_alternative<FeasibilityVerdict>(eg));
  const auto& v = std::get<FeasibilityVerdict>(eg);
  EXPECT_EQ(v.status, FeasibilityStatus::infeasible);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->reason, CertificateReason::modulus_violation);
  EXPECT_EQ(v.certificate->i, 0u);
  EXPECT_EQ(v.certificate->j, 2u);
  EXPECT_NEAR(v.certificate->magnitude, std::numbers::sqrt2, 1e-9);
}

TEST(EnvironmentGramTest, IdentityAllDetermined) {
  const auto g = std::get<EnvironmentGram>(environment_gram(instances::identity_spec()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!(i == 0 && j == 1) && !(i == 1 && j == 0))
        EXPECT_NEAR(std::abs(g.value(i, j) - 1.0), 0.0, 1e-12);
}

TEST(EnvironmentGramTest, OutputNullInputNot) {
  const ProcessSpec spec(2, 2, {{ab(ket_zero(), ket_zero()), ab(ket_zero(), ket_zero())},
                                {ab(ket_plus(), ket_zero()), ab(ket_one(), ket_zero())}});
  const auto v = analyze_feasibility(spec);
  EXPECT_EQ(v.status, FeasibilityStatus::infeasible);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->reason, CertificateReason::output_null_input_not);
  EXPECT_NEAR(v.certificate->magnitude, kH, 1e-12);
}

TEST(CompletePsd, ForcedCornerCompletesToOnes) {
  EnvironmentGram eg(3);
  eg.set(0, 2, 1.0);
  eg.set(1, 2, 1.0);
  const auto v = complete_psd(eg);
  ASSERT_TRUE(v.realizable());
  EXPECT_LT((*v.completed_gram - DenseMatrix::Ones(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(environments_identical(v));
}

TEST(CompletePsd, FullyDeterminedIsItself) {
  EnvironmentGram eg(2);
  eg.set(0, 1, Complex(0.3, 0.4));
  const auto v = complete_psd(eg);
  ASSERT_TRUE(v.realizable());
  EXPECT_NEAR(std::abs((*v.completed_gram)(0, 1) - Complex(0.3, 0.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs((*v.completed_gram)(1, 0) - Complex(0.3, -0.4)), 0.0, 1e-15);
  EXPECT_EQ(v.free_entries, 0u);
}

TEST(CompletePsd, ContradictoryPatternIsPsdViolation) {
  EnvironmentGram eg(3);
  eg.set(0, 1, 1.0);
  eg.set(0, 2, 1.0);
  eg.set(1, 2, -1.0);
  const auto v = complete_psd(eg);
  EXPECT_EQ(v.status, FeasibilityStatus::infeasible);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->reason, CertificateReason::psd_violation);
  EXPECT_NEAR(v.certificate->magnitude, -1.0, 1e-12);
}

TEST(CompletePsd, FreeEntriesGoToZero) {
  const auto v = analyze_feasibility(two_orthogonal_pairs());
  ASSERT_TRUE(v.realizable());
  EXPECT_EQ(v.free_entries, 1u);
  EXPECT_LT((*v.completed_gram - DenseMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(environments_identical(v));
}

TEST(CompletePsd, TooManyFreeEntriesIsUndetermined) {
  EnvironmentGram eg(3);
  EXPECT_EQ(eg.free_entries().size(), 3u);
  EXPECT_TRUE(complete_psd(eg).realizable());
  EnvironmentGram big(4);
  const auto v = complete_psd(big);
  EXPECT_EQ(v.status, FeasibilityStatus::undetermined);
  EXPECT_EQ(v.free_entries, 6u);
}

TEST(Isometry, CloningAgreesWithCnot) {
  const auto spec = instances::cloning_spec();
  const auto v = analyze_feasibility(spec);
  const auto d = construct_isometry(spec, v);
  EXPECT_EQ(d.environment_dim, 1u);
  EXPECT_LT(unitarity_error(d.unitary), 1e-12);
  const DenseMatrix cnot = gate_matrix(GateName::CNOT);
  for (const auto& p : spec.pairs()) {
    EXPECT_NEAR((d.unitary * p.input.vector() - cnot * p.input.vector()).norm(), 0.0, 1e-12);
    EXPECT_GE(fidelity(PureState({2, 2}, d.unitary * p.input.vector()), p.output), 1.0 - 1e-12);
  }
}

TEST(Isometry, DeletionAgreesWithCnot) {
  const auto spec = instances::deletion_spec();
  const auto d = construct_isometry(spec, analyze_feasibility(spec));
  const DenseMatrix cnot = gate_matrix(GateName::CNOT);
  for (const auto& p : spec.pairs())
    EXPECT_NEAR((d.unitary * p.input.vector() - cnot * p.input.vector()).norm(), 0.0, 1e-12);
}

TEST(Isometry, IdentityProcess) {
  const auto spec = instances::identity_spec();
  const auto d = construct_isometry(spec, analyze_feasibility(spec));
  for (const auto& p : spec.pairs())
    EXPECT_NEAR((d.unitary * p.input.vector() - p.input.vector()).norm(), 0.0, 1e-12);
}

TEST(Isometry, RejectsNonRealizable) {
  const auto spec = instances::cloning_spec();
  FeasibilityVerdict bad;
  bad.status = FeasibilityStatus::infeasible;
  EXPECT_THROW(construct_isometry(spec, bad), InvalidArgument);
}

TEST(Isometry, InconsistentCompletionIsInternalError) {
  const auto spec = instances::cloning_spec();
  auto v = analyze_feasibility(spec);
  (*v.completed_gram)(0, 2) = 0.5;
  (*v.completed_gram)(2, 0) = 0.5;
  EXPECT_THROW(construct_isometry(spec, v), InternalConsistency);
}

TEST(ApplyProcess, Examples) {
  const auto cloning = instances::cloning_spec();
  const auto out = apply_process(cloning, analyze_feasibility(cloning),
                                 instances::cloning_witness_input());
  EXPECT_GE(fidelity(out, bell_phi_plus()), 1.0 - 1e-12);

  const auto deletion = instances::deletion_spec();
  const auto dv = analyze_feasibility(deletion);
  const auto dout = apply_process(deletion, dv, instances::deletion_witness_input());
  EXPECT_NEAR((dout.vector() - instances::deletion_witness_output().vector()).norm(), 0.0, 1e-12);

  for (const auto& p : deletion.pairs())
    EXPECT_NEAR((apply_process(deletion, dv, p.input).vector() - p.output.vector()).norm(), 0.0,
                1e-12);
}

TEST(ApplyProcess, Errors) {
  const auto spec = two_orthogonal_pairs();
  const auto v = analyze_feasibility(spec);
  EXPECT_THROW(apply_process(spec, v, spec.pairs()[0].input), EnvironmentsNotIdentical);

  const auto cloning = instances::cloning_spec();
  try {
    apply_process(cloning, analyze_feasibility(cloning), ab(ket_one(), ket_one()));
    FAIL() << "expected OutsideSpan";
  } catch (const OutsideSpan& e) {
    EXPECT_GT(e.residual(), 0.1);
  }
}

TEST(OutputDensity, Examples) {
  const auto cloning = instances::cloning_spec();
  const auto cv = analyze_feasibility(cloning);
  const auto rho = output_density(cloning, cv, instances::cloning_witness_input());
  const DenseVector bell = bell_phi_plus().vector();
  EXPECT_LT((rho.entries() - bell * bell.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-12);

  const auto spec = two_orthogonal_pairs();
  const auto v = analyze_feasibility(spec);
  const auto mix = PureState::normalized(
      {2, 2}, spec.pairs()[0].input.vector() + spec.pairs()[1].input.vector());
  EXPECT_NEAR(output_density(spec, v, mix).purity(), 0.5, 1e-12);
  for (const auto& p : spec.pairs()) {
    const DenseVector b = p.output.vector();
    EXPECT_LT((output_density(spec, v, p.input).entries() - b * b.adjoint()).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(OutputDensity, RejectsInvalidMatrices) {
  DenseMatrix m = DenseMatrix::Zero(2, 2);
  m(0, 0) = 2.0;
  EXPECT_THROW(DensityMatrix{m}, InvalidArgument);
  m << 0.5, 1.0, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{m}, NotHermitian);
  m << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(DensityMatrix{m}, InvalidArgument);
}

TEST(ProcessProperty, RealizableVerdictsDilate) {
  std::mt19937_64 rng(301);
  int realizable = 0;
  for (int k = 0; k < 120; ++k) {
    const auto kind = static_cast<qcat_test::SpecKind>(k % 4);
    const auto spec = qcat_test::random_spec(kind, rng);
    const auto v = analyze_feasibility(spec);
    if (kind != qcat_test::SpecKind::unrelated) EXPECT_TRUE(v.realizable()) << "case " << k;
    if (!v.realizable()) continue;
    ++realizable;
    const DenseMatrix& e = *v.completed_gram;
    EXPECT_LT(hermiticity_deviation(e), 1e-9);
    EXPECT_GE(hermitian_eigenvalues(e).front(), -1e-9);
    for (Eigen::Index i = 0; i < e.rows(); ++i) EXPECT_NEAR(std::abs(e(i, i) - 1.0), 0.0, 1e-12);
    const auto d = construct_isometry(spec, v);
    EXPECT_LT(unitarity_error(d.unitary), 1e-9);
    EXPECT_LT(dilation_pair_error(spec, d), 1e-9);
  }
  EXPECT_GE(realizable, 90);
}

TEST(ProcessProperty, ModulusCertificatesAreSound) {
  std::mt19937_64 rng(302);
  int certificates = 0;
  for (int k = 0; k < 200; ++k) {
    const auto spec = qcat_test::random_spec(qcat_test::SpecKind::unrelated, rng);
    const auto v = analyze_feasibility(spec);
    if (!v.certificate || v.certificate->reason != CertificateReason::modulus_violation) continue;
    ++certificates;
    const auto& c = *v.certificate;
    const auto in = spec.input_vectors();
    const auto out = spec.output_vectors();
    EXPECT_GT(std::abs(inner(in[c.i], in[c.j])), std::abs(inner(out[c.i], out[c.j])) + 1e-9);
  }
  EXPECT_GT(certificates, 20);
}

TEST(ProcessProperty, CoherentExtensionMatchesIsometry) {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 100; ++k) {
    const auto spec = qcat_test::random_spec(qcat_test::SpecKind::unitary, rng);
    const auto v = analyze_feasibility(spec);
    ASSERT_TRUE(environments_identical(v));
    const auto d = construct_isometry(spec, v);
    ASSERT_EQ(d.environment_dim, 1u);
    const auto basis = spec.input_vectors();
    std::vector<Complex> alpha;
    for (std::size_t i = 0; i < basis.size(); ++i) alpha.push_back(random_vector(1, rng)[0]);
    const DenseVector x = synthesize(basis, alpha);
    const auto input = PureState::normalized({spec.dim_a(), spec.dim_b()}, x);
    const DenseVector via_v = d.unitary * input.vector();
    const auto out = apply_process(spec, v, input);
    EXPECT_NEAR((out.vector() - via_v).norm(), 0.0, 1e-9);
  }
}

TEST(ProcessProperty, OutputDensityIsAState) {
  std::mt19937_64 rng(304);
  for (int k = 0; k < 100; ++k) {
    const auto kind = k % 2 ? qcat_test::SpecKind::dilation : qcat_test::SpecKind::orthogonal;
    const auto spec = qcat_test::random_spec(kind, rng);
    const auto v = analyze_feasibility(spec);
    ASSERT_TRUE(v.realizable());
    const auto basis = spec.input_vectors();
    std::vector<Complex> alpha;
    for (std::size_t i = 0; i < basis.size(); ++i) alpha.push_back(random_vector(1, rng)[0]);
    const auto input =
        PureState::normalized({spec.dim_a(), spec.dim_b()}, synthesize(basis, alpha));
    const auto rho = output_density(spec, v, input);
    EXPECT_LT(hermiticity_deviation(rho.entries()), 1e-9);
    EXPECT_NEAR(rho.entries().trace().real(), 1.0, 1e-9);
    EXPECT_GE(hermitian_eigenvalues(rho.entries()).front(), -1e-9);
  }
}

TEST(ProcessProperty, GramIsPsdWithUnitDiagonal) {
  std::mt19937_64 rng(305);
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 1 + rng() % 9;
    std::vector<PureState> states;
    for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) states.push_back(random_state({d}, rng));
    const DenseMatrix g = gram_matrix(states);
    for (Eigen::Index i = 0; i < g.rows(); ++i) EXPECT_NEAR(std::abs(g(i, i) - 1.0), 0.0, 1e-12);
    const auto oracle = qcat_test::jacobi_eigenvalues(g);
    EXPECT_GE(oracle.front(), -1e-9);
  }
}
