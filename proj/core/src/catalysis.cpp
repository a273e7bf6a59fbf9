#include "qcat/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcat/errors.hpp"
#include "qcat/instances.hpp"

namespace qcat {

namespace {

constexpr std::size_t kAliceBobCut = 1;

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

/// Halton points pushed through Box-Muller onto the complex unit sphere in C^n.
class SphereSequence {
public:
  SphereSequence(std::size_t n, std::uint64_t seed)
      : n_(n), primes_(first_primes(2 * n)), offset_(seed * kWitnessSamples + 1) {}

  std::vector<Complex> operator()(std::size_t k) const {
    const std::uint64_t index = offset_ + k;
    std::vector<Complex> z(n_);
    double norm2 = 0.0;
    for (std::size_t c = 0; c < n_; ++c) {
      const double u1 = radical_inverse(index, primes_[2 * c]);
      const double u2 = radical_inverse(index, primes_[2 * c + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      z[c] = std::polar(r, 2.0 * std::numbers::pi * u2);
      norm2 += std::norm(z[c]);
    }
    const double norm = std::sqrt(norm2);
    for (auto& x : z) x /= norm;
    return z;
  }

private:
  std::size_t n_;
  std::vector<std::uint32_t> primes_;
  std::uint64_t offset_;
};

struct Candidate {
  std::vector<Complex> coefficients;
  std::string origin;
};

}  // namespace

double bipartite_concurrence(const PureState& state) {
  if (state.dims() == std::vector<std::size_t>{2, 2}) return concurrence(state);
  return pure_concurrence(state, kAliceBobCut);
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::quantum_catalysis: return "QuantumCatalysis";
    case Classification::no_entangling_witness_found: return "NoEntanglingWitnessFound";
    case Classification::not_catalysis: return "NotCatalysis";
  }
  return "?";
}

CatalystIntegrity catalyst_intact(const ProcessSpec& spec, double tol) {
  CatalystIntegrity out;
  out.overall = true;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& pair = spec.pairs()[i];
    PairIntegrity p;
    try {
      const auto fin = product_factorize(pair.input, kAliceBobCut, tol);
      const auto fout = product_factorize(pair.output, kAliceBobCut, tol);
      p.fidelity = fidelity(fin.a, fout.a);
      p.intact = p.fidelity >= 1.0 - tol;
      if (!p.intact) {
        p.detail = "Alice's factor changed (fidelity " + std::to_string(p.fidelity) + ")";
      }
    } catch (const EntangledState& e) {
      p.intact = false;
      p.detail = "state is entangled across A|B (second Schmidt coefficient " +
                 std::to_string(e.second_schmidt_coefficient()) + ")";
    }
    if (!p.intact && out.overall) {
      out.overall = false;
      out.first_failure = i;
    }
    out.pairs.push_back(std::move(p));
  }
  return out;
}

std::vector<WitnessRecord> find_entangling_witnesses(const ProcessSpec& spec,
                                                     const FeasibilityVerdict& verdict,
                                                     double tol, std::uint64_t seed) {
  if (!environments_identical(verdict, tol)) {
    throw EnvironmentsNotIdentical(
        "find_entangling_witness: environments are not identical, so the coherent extension "
        "is undefined");
  }
  const std::size_t n = spec.size();
  const std::vector<std::size_t> dims{spec.dim_a(), spec.dim_b()};
  const auto inputs = spec.input_vectors();
  const auto outputs = spec.output_vectors();

  std::vector<Candidate> fixed;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Complex> c(n, Complex(0.0, 0.0));
      c[i] = 1.0;
      c[j] = 1.0;
      fixed.push_back({std::move(c), "pair(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    }
  }
  if (dims == std::vector<std::size_t>{2, 2}) {
    const std::pair<PureState, const char*> named[] = {
        {instances::cloning_witness_input(), "cloning_witness"},
        {instances::deletion_witness_input(), "deletion_witness"},
    };
    for (const auto& [state, origin] : named) {
      const auto expansion = span_coefficients(inputs, state.vector(), tol);
      if (expansion.residual <= tol) fixed.push_back({expansion.coefficients, origin});
    }
  }

  std::vector<WitnessRecord> found;
  double best = -1.0;
  auto consider = [&](std::vector<Complex> coefficients, std::string origin) {
    DenseVector in = synthesize(inputs, coefficients);
    const double norm = in.norm();
    if (!(norm > tol)) return;
    in /= norm;
    for (auto& c : coefficients) c /= norm;
    PureState input(dims, std::move(in));
    const double c_in = bipartite_concurrence(input);
    if (c_in > tol) return;
    PureState output = PureState::normalized(dims, synthesize(outputs, coefficients));
    const double c_out = bipartite_concurrence(output);
    if (c_out <= kWitnessThreshold || c_out < best - kWitnessTieWindow) return;
    best = std::max(best, c_out);
    found.push_back({std::move(input), std::move(output), c_in, c_out, std::move(coefficients),
                     std::move(origin)});
  };

  for (auto& cand : fixed) consider(std::move(cand.coefficients), std::move(cand.origin));
  const SphereSequence sequence(n, seed);
  for (std::size_t k = 0; k < kWitnessSamples; ++k) {
    consider(sequence(k), "sample(" + std::to_string(k) + ")");
  }

  // Keep the maximal set in candidate order, dropping repeated inputs.
  std::vector<WitnessRecord> kept;
  for (auto& w : found) {
    if (w.concurrence_out < best - kWitnessTieWindow) continue;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const WitnessRecord& k) {
      return fidelity(k.input, w.input) >= 1.0 - tol;
    });
    if (!duplicate) kept.push_back(std::move(w));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const WitnessRecord& a, const WitnessRecord& b) {
    return a.concurrence_out > b.concurrence_out + kWitnessTieWindow;
  });
  return kept;
}

std::optional<WitnessRecord> find_entangling_witness(const ProcessSpec& spec,
                                                     const FeasibilityVerdict& verdict,
                                                     double tol, std::uint64_t seed) {
  auto all = find_entangling_witnesses(spec, verdict, tol, seed);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

CatalysisReport classify(const ProcessSpec& spec, double tol, std::uint64_t seed) {
  CatalysisReport report;
  report.verdict = analyze_feasibility(spec, tol);
  report.integrity = catalyst_intact(spec, tol);
  report.coherence_preserving = environments_identical(report.verdict, tol);

  // Bob alone: equal B-factors in, distinct B-factors out.
  std::vector<std::optional<ProductFactors>> in_factors;
  std::vector<std::optional<ProductFactors>> out_factors;
  for (const auto& pair : spec.pairs()) {
    auto factor = [&](const PureState& s) -> std::optional<ProductFactors> {
      try {
        return product_factorize(s, kAliceBobCut, tol);
      } catch (const EntangledState&) {
        return std::nullopt;
      }
    };
    in_factors.push_back(factor(pair.input));
    out_factors.push_back(factor(pair.output));
  }
  for (std::size_t i = 0; i < spec.size() && !report.bob_alone_impossible; ++i) {
    for (std::size_t j = i + 1; j < spec.size(); ++j) {
      if (!in_factors[i] || !in_factors[j] || !out_factors[i] || !out_factors[j]) continue;
      if (fidelity(in_factors[i]->b, in_factors[j]->b) >= 1.0 - tol &&
          fidelity(out_factors[i]->b, out_factors[j]->b) < 1.0 - tol) {
        report.bob_alone_impossible = true;
        report.bob_alone_pair = std::make_pair(i, j);
        break;
      }
    }
  }

  if (!report.verdict.realizable()) {
    report.classification = Classification::not_catalysis;
    if (const auto& cert = report.verdict.certificate) {
      report.reason = std::string(to_string(cert->reason)) + " at pair (" +
                      std::to_string(cert->i) + ", " + std::to_string(cert->j) + ")";
    } else {
      report.reason = "undetermined: " + std::to_string(report.verdict.free_entries) +
                      " free environment overlaps exceed the search cap";
    }
    return report;
  }
  if (!report.integrity.overall) {
    const std::size_t i = *report.integrity.first_failure;
    report.classification = Classification::not_catalysis;
    report.reason = "catalyst disturbed at pair " + std::to_string(i) + ": " +
                    report.integrity.pairs[i].detail;
    return report;
  }
  if (!spec.inputs_independent()) {
    report.classification = Classification::no_entangling_witness_found;
    report.reason = "inputs are linearly dependent; the witness search needs unique expansions";
    return report;
  }
  if (report.coherence_preserving) {
    report.witnesses = find_entangling_witnesses(spec, report.verdict, tol, seed);
  }
  report.classification = report.witnesses.empty() ? Classification::no_entangling_witness_found
                                                   : Classification::quantum_catalysis;
  return report;
}

std::vector<DeletionFamilyPoint> deletion_family_sweep(std::size_t steps, double tol,
                                                       std::uint64_t seed) {
  if (steps < 2) {
    throw InvalidArgument("deletion_family_sweep: steps must be at least 2");
  }
  const PureState witness = instances::deletion_witness_input();
  const PureState plus = ket_plus();
  constexpr double kInvSqrt2 = 0.70710678118654752440;

  std::vector<DeletionFamilyPoint> points;
  points.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    DeletionFamilyPoint p;
    p.u = 0.0;
    p.v = std::numbers::pi * static_cast<double>(2 * k) / static_cast<double>(steps);

    const PureState r1 = instances::deletion_residue(p.u);
    const PureState r2 = instances::deletion_residue(p.v);
    p.overlap = inner(r1, r2);
    p.reversibility_error = std::max(std::abs(inner(r1, plus) - kInvSqrt2),
                                     std::abs(inner(r2, plus) - kInvSqrt2));

    const ProcessSpec spec = instances::generalized_deletion_spec(p.u, p.v);
    const CatalysisReport report = classify(spec, tol, seed);
    p.classification = report.classification;
    if (!report.coherence_preserving) {
      throw InternalConsistency("deletion_family_sweep: environments not forced identical at v = " +
                                std::to_string(p.v));
    }
    p.out_concurrence = bipartite_concurrence(apply_process(spec, report.verdict, witness, tol));
    points.push_back(p);
  }
  return points;
}

}  // namespace qcat
