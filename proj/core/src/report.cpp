#include "qcat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qcat/instances.hpp"
#include "qcat/random.hpp"
#include "qcat/spec_io.hpp"

namespace qcat {

namespace {

using nlohmann::json;

// Exactness threshold for protocol and isometry fidelities.
constexpr double kExactFidelitySlack = 1e-12;
constexpr std::size_t kRandomProtocolInputs = 16;

Assertion check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// || actual - e^{i theta} expected || for the best global phase.
double phase_distance(const PureState& actual, const PureState& expected) {
  const Complex ov = inner(expected, actual);
  const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex(1.0, 0.0);
  return (actual.vector() - phase * expected.vector()).norm();
}

void isometry_assertions(const ProcessSpec& spec, const FeasibilityVerdict& verdict, double tol,
                         std::vector<Assertion>& out, bool expect_cnot) {
  if (!verdict.realizable()) {
    out.push_back(check("isometry_reproduces_pairs", false, "verdict is not Realizable"));
    return;
  }
  const Dilation d = construct_isometry(spec, verdict, tol);
  const auto dim = d.unitary.rows();
  const double unitarity =
      (d.unitary.adjoint() * d.unitary - DenseMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  out.push_back(check("isometry_unitary", unitarity <= tol, "max |V^dagger V - I| = " + sci(unitarity)));

  DenseVector e0 = DenseVector::Zero(static_cast<Eigen::Index>(d.environment_dim));
  e0[0] = 1.0;
  double min_fid = 1.0;
  double max_dist = 0.0;
  double max_cnot = 0.0;
  const DenseMatrix cnot = gate_matrix(GateName::CNOT);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& p = spec.pairs()[i];
    const DenseVector image = d.unitary * tensor(p.input.vector(), e0);
    const DenseVector target =
        tensor(p.output.vector(), DenseVector(d.environment_states.col(static_cast<Eigen::Index>(i))));
    const double fid = std::norm(target.dot(image)) / (target.squaredNorm() * image.squaredNorm());
    min_fid = std::min(min_fid, fid);
    max_dist = std::max(max_dist, (image - target).norm());
    if (expect_cnot && d.environment_dim == 1) {
      max_cnot = std::max(max_cnot, (image - cnot * p.input.vector()).norm());
    }
  }
  out.push_back(check("isometry_reproduces_pairs",
                      min_fid >= 1.0 - kExactFidelitySlack && max_dist <= tol,
                      "min fidelity " + format_real(min_fid) + ", max distance " + sci(max_dist)));
  if (expect_cnot) {
    out.push_back(check("isometry_agrees_with_cnot_on_span",
                        d.environment_dim == 1 && max_cnot <= tol,
                        "environment dim " + std::to_string(d.environment_dim) +
                            ", max |V a_i - CNOT a_i| = " + sci(max_cnot)));
  }
}

void common_catalysis_assertions(const CatalysisReport& r, std::vector<Assertion>& out) {
  out.push_back(check("verdict_realizable", r.verdict.realizable(),
                      std::string(to_string(r.verdict.status))));
  out.push_back(check("environment_gram_all_ones", r.coherence_preserving));
  out.push_back(check("catalyst_intact", r.integrity.overall,
                      std::to_string(r.integrity.pairs.size()) + " pairs checked"));
  out.push_back(check("classified_quantum_catalysis",
                      r.classification == Classification::quantum_catalysis,
                      std::string(to_string(r.classification))));
}

void witness_assertions(const CatalysisReport& r, const PureState& expected_in,
                        const PureState& expected_out, double tol, std::vector<Assertion>& out) {
  const auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(), [&](const WitnessRecord& w) {
    return fidelity(w.input, expected_in) >= 1.0 - tol;
  });
  if (it == r.witnesses.end()) {
    out.push_back(check("witness_found", false, "expected separable input not among witnesses"));
    return;
  }
  out.push_back(check("witness_found", true, it->origin));
  out.push_back(check("witness_input_separable", it->concurrence_in <= tol,
                      "concurrence_in " + sci(it->concurrence_in)));
  out.push_back(check("witness_output_maximally_entangled",
                      std::abs(it->concurrence_out - 1.0) <= tol,
                      "concurrence_out " + format_real(it->concurrence_out)));
  const double dist = phase_distance(it->output, expected_out);
  out.push_back(check("witness_output_matches", dist <= tol, "distance up to phase " + sci(dist)));
}

ReportDocument scenario_cloning(const RunConfig& cfg) {
  ReportDocument doc;
  const ProcessSpec spec = instances::cloning_spec();
  auto r = classify(spec, cfg.tolerance, cfg.seed);
  common_catalysis_assertions(r, doc.assertions);
  doc.assertions.push_back(check("bob_alone_impossible", r.bob_alone_impossible));
  isometry_assertions(spec, r.verdict, cfg.tolerance, doc.assertions, true);
  witness_assertions(r, instances::cloning_witness_input(), instances::cloning_witness_output(),
                     cfg.tolerance, doc.assertions);
  doc.analysis = std::move(r);
  return doc;
}

ReportDocument scenario_deletion(const RunConfig& cfg) {
  ReportDocument doc;
  const ProcessSpec spec = instances::deletion_spec();
  auto r = classify(spec, cfg.tolerance, cfg.seed);
  common_catalysis_assertions(r, doc.assertions);
  isometry_assertions(spec, r.verdict, cfg.tolerance, doc.assertions, true);
  witness_assertions(r, instances::deletion_witness_input(), instances::deletion_witness_output(),
                     cfg.tolerance, doc.assertions);
  doc.analysis = std::move(r);
  return doc;
}

ReportDocument scenario_no_info_cloning(const RunConfig& cfg) {
  ReportDocument doc;
  auto r = classify(instances::no_info_cloning_spec(), cfg.tolerance, cfg.seed);
  const auto& cert = r.verdict.certificate;
  doc.assertions.push_back(check("verdict_infeasible",
                                 r.verdict.status == FeasibilityStatus::infeasible,
                                 std::string(to_string(r.verdict.status))));
  doc.assertions.push_back(check(
      "modulus_certificate",
      cert && cert->reason == CertificateReason::modulus_violation &&
          std::abs(cert->magnitude - std::numbers::sqrt2) <= cfg.tolerance,
      cert ? std::string(to_string(cert->reason)) + " magnitude " + format_real(cert->magnitude)
           : "no certificate"));
  doc.assertions.push_back(check("certificate_involves_state_3",
                                 cert && (cert->i == 2 || cert->j == 2),
                                 cert ? "pair (" + std::to_string(cert->i) + ", " +
                                            std::to_string(cert->j) + ")"
                                      : "no certificate"));
  doc.assertions.push_back(check("classified_not_catalysis",
                                 r.classification == Classification::not_catalysis,
                                 std::string(to_string(r.classification))));
  doc.analysis = std::move(r);
  return doc;
}

ReportDocument scenario_deletion_sweep(const RunConfig& cfg) {
  ReportDocument doc;
  const double tol = cfg.tolerance;
  auto points = deletion_family_sweep(cfg.steps, tol, cfg.seed);

  bool biconditional = true;
  bool margin = true;
  bool quantum_where_entangled = true;
  double worst_reversibility = 0.0;
  for (const auto& p : points) {
    const double mod = std::abs(p.overlap);
    if ((p.out_concurrence <= tol) != (mod <= tol)) biconditional = false;
    if (mod > 1e-3 && !(p.out_concurrence > kWitnessThreshold)) margin = false;
    if (p.out_concurrence > kWitnessThreshold &&
        p.classification != Classification::quantum_catalysis) {
      quantum_where_entangled = false;
    }
    worst_reversibility = std::max(worst_reversibility, p.reversibility_error);
  }
  doc.assertions.push_back(check("point_count", points.size() == cfg.steps,
                                 std::to_string(points.size()) + " points"));
  doc.assertions.push_back(check("reversibility_constraint", worst_reversibility <= 1e-12,
                                 "max |<phi'_j|phi'_3> - 1/sqrt(2)| = " + sci(worst_reversibility)));
  doc.assertions.push_back(check("zero_concurrence_iff_orthogonal_residues", biconditional));
  doc.assertions.push_back(check("entangled_whenever_overlap_nonzero", margin,
                                 "out_concurrence > 1e-6 wherever |overlap| > 1e-3"));
  doc.assertions.push_back(check("quantum_catalysis_wherever_entangled", quantum_where_entangled));
  doc.assertions.push_back(check("original_deletion_point", std::abs(points[0].out_concurrence - 1.0) <= tol,
                                 "out_concurrence at delta = 0: " + format_real(points[0].out_concurrence)));
  if (cfg.steps % 2 == 0) {
    const auto& pi_point = points[cfg.steps / 2];
    doc.assertions.push_back(check("orthogonal_point_unentangled", pi_point.out_concurrence <= tol,
                                   "out_concurrence at delta = pi: " + sci(pi_point.out_concurrence)));
  }
  doc.sweep = std::move(points);
  return doc;
}

struct ProtocolTally {
  double min_fidelity = 1.0;
  double max_quarter_dev = 0.0;
  double max_sum_dev = 0.0;
  bool ledger_ok = true;
};

template <typename Protocol, typename Target>
void run_protocol(const std::string& label, const PureState& input, Protocol protocol,
                  Target target, const ResourceLedger& expected, ProtocolTally& tally,
                  std::vector<BranchSummary>* summaries) {
  const ProtocolRun run = protocol(input, Enumerate{});
  const PureState ideal = target(input);
  double sum = 0.0;
  for (const auto& b : run.branches) {
    const double fid = fidelity(b.post_state, ideal);
    tally.min_fidelity = std::min(tally.min_fidelity, fid);
    tally.max_quarter_dev = std::max(tally.max_quarter_dev, std::abs(b.probability - 0.25));
    sum += b.probability;
    if (summaries) summaries->push_back({label, b.measurement_bits, b.probability, fid});
  }
  tally.max_sum_dev = std::max(tally.max_sum_dev, std::abs(sum - 1.0));
  tally.ledger_ok = tally.ledger_ok && run.ledger == expected;
}

void protocol_assertions(const ProtocolTally& t, std::size_t inputs, std::vector<Assertion>& out) {
  out.push_back(check("all_branches_faithful", t.min_fidelity >= 1.0 - kExactFidelitySlack,
                      std::to_string(inputs) + " inputs, min fidelity " + format_real(t.min_fidelity)));
  out.push_back(check("branch_probabilities_quarter", t.max_quarter_dev <= kExactFidelitySlack,
                      "max |p - 1/4| = " + sci(t.max_quarter_dev)));
  out.push_back(check("probabilities_sum_to_one", t.max_sum_dev <= kExactFidelitySlack,
                      "max |sum p - 1| = " + sci(t.max_sum_dev)));
}

ReportDocument scenario_teleport(const RunConfig& cfg) {
  ReportDocument doc;
  const ResourceLedger expected{1, 2, 0};
  ProtocolTally tally;
  const auto identity = [](const PureState& s) { return s; };
  const auto protocol = [](const PureState& s, ProtocolMode m) { return teleport(s, m); };

  DenseVector plus_i(2);
  plus_i << 1.0 / std::numbers::sqrt2, Complex(0.0, 1.0 / std::numbers::sqrt2);
  const std::pair<const char*, PureState> named[] = {
      {"|0>", ket_zero()},  {"|1>", ket_one()}, {"|+>", ket_plus()},
      {"|->", ket_minus()}, {"|+i>", PureState({2}, plus_i)},
  };
  for (const auto& [label, s] : named) {
    run_protocol(label, s, protocol, identity, expected, tally, &doc.branches);
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < kRandomProtocolInputs; ++k) {
    run_protocol("random", random_state({2}, rng), protocol, identity, expected, tally, nullptr);
  }
  protocol_assertions(tally, std::size(named) + kRandomProtocolInputs, doc.assertions);
  doc.assertions.push_back(check("ledger_one_ebit_two_cbits", tally.ledger_ok,
                                 "1 ebit, 2 cbits A->B, 0 cbits B->A"));
  doc.ledger = expected;
  return doc;
}

ReportDocument scenario_nonlocal_cnot(const RunConfig& cfg) {
  ReportDocument doc;
  const ResourceLedger expected{1, 1, 1};
  ProtocolTally tally;
  const auto direct = [](const PureState& s) {
    return apply_gate({GateName::CNOT, {0, 1}}, s);
  };
  const auto protocol = [](const PureState& s, ProtocolMode m) { return nonlocal_cnot(s, m); };

  const auto phi = paper_states(StateSetId::phi).states;
  const auto psi = paper_states(StateSetId::psi).states;
  double min_target_fid = 1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string label = "|psi_" + std::to_string(i + 1) + ">|phi_" + std::to_string(i + 1) + ">";
    const PureState in = tensor(psi[i], phi[i]);
    run_protocol(label, in, protocol, direct, expected, tally, &doc.branches);
    for (const auto& b : nonlocal_cnot(in).branches) {
      min_target_fid = std::min(min_target_fid, fidelity(b.post_state, tensor(psi[i], psi[i])));
    }
  }
  const PureState plus_zero = instances::cloning_witness_input();
  run_protocol("|+>|0>", plus_zero, protocol, direct, expected, tally, &doc.branches);
  double min_bell = 1.0;
  for (const auto& b : nonlocal_cnot(plus_zero).branches) {
    min_bell = std::min(min_bell, concurrence(b.post_state));
  }

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < kRandomProtocolInputs; ++k) {
    run_protocol("random", random_state({2, 2}, rng), protocol, direct, expected, tally, nullptr);
  }
  protocol_assertions(tally, 4 + kRandomProtocolInputs, doc.assertions);
  doc.assertions.push_back(check("reproduces_cloning_targets",
                                 min_target_fid >= 1.0 - kExactFidelitySlack,
                                 "min fidelity with |psi_i>|psi_i> " + format_real(min_target_fid)));
  doc.assertions.push_back(check("creates_bell_pair_from_plus_zero",
                                 std::abs(min_bell - 1.0) <= cfg.tolerance,
                                 "min concurrence " + format_real(min_bell)));
  doc.assertions.push_back(check("ledger_one_ebit", tally.ledger_ok,
                                 "1 ebit, 1 cbit A->B, 1 cbit B->A"));
  doc.ledger = expected;
  return doc;
}

// ---- serialization ----

json encode(Complex c) { return json::array({c.real(), c.imag()}); }

json encode(const DenseVector& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(encode(c));
  return arr;
}

json encode(const DenseMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(encode(DenseVector(m.row(r).transpose())));
  return rows;
}

json encode(const std::vector<Complex>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(encode(c));
  return arr;
}

json encode(const WitnessRecord& w) {
  return {{"origin", w.origin},
          {"input", encode(w.input.vector())},
          {"output", encode(w.output.vector())},
          {"concurrence_in", w.concurrence_in},
          {"concurrence_out", w.concurrence_out},
          {"coefficients", encode(w.coefficients)}};
}

json encode(const FeasibilityVerdict& v) {
  json out;
  out["status"] = std::string(to_string(v.status));
  out["free_entries"] = v.free_entries;
  out["completed_gram"] = v.completed_gram ? encode(*v.completed_gram) : json(nullptr);
  if (v.certificate) {
    out["certificate"] = {{"pair", json::array({v.certificate->i, v.certificate->j})},
                          {"reason", std::string(to_string(v.certificate->reason))},
                          {"magnitude", v.certificate->magnitude}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json encode(const DeletionFamilyPoint& p) {
  return {{"u", p.u},
          {"v", p.v},
          {"delta", p.v - p.u},
          {"overlap", encode(p.overlap)},
          {"overlap_modulus", std::abs(p.overlap)},
          {"out_concurrence", p.out_concurrence},
          {"reversibility_error", p.reversibility_error},
          {"classification", std::string(to_string(p.classification))}};
}

json to_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["scenario"] = doc.scenario;
  j["source"] = doc.source ? json(*doc.source) : json(nullptr);
  j["config"] = {{"tolerance", doc.config.tolerance},
                 {"format", doc.config.format == ReportFormat::json ? "json" : "text"},
                 {"seed", doc.config.seed},
                 {"steps", doc.config.steps}};
  if (doc.analysis) {
    const auto& a = *doc.analysis;
    j["classification"] = std::string(to_string(a.classification));
    j["reason"] = a.reason;
    j["verdict"] = encode(a.verdict);
    j["coherence_preserving"] = a.coherence_preserving;
    json pairs = json::array();
    for (std::size_t i = 0; i < a.integrity.pairs.size(); ++i) {
      const auto& p = a.integrity.pairs[i];
      pairs.push_back({{"index", i}, {"intact", p.intact}, {"fidelity", p.fidelity}, {"detail", p.detail}});
    }
    j["catalyst_intact"] = {{"overall", a.integrity.overall}, {"pairs", pairs}};
    j["bob_alone_impossible"] = a.bob_alone_impossible;
    j["bob_alone_pair"] = a.bob_alone_pair
                              ? json::array({a.bob_alone_pair->first, a.bob_alone_pair->second})
                              : json(nullptr);
    json witnesses = json::array();
    for (const auto& w : a.witnesses) witnesses.push_back(encode(w));
    j["witnesses"] = witnesses;
  } else {
    j["classification"] = nullptr;
    j["verdict"] = nullptr;
    j["witnesses"] = json::array();
  }
  if (doc.sweep) {
    json sweep = json::array();
    for (const auto& p : *doc.sweep) sweep.push_back(encode(p));
    j["sweep"] = sweep;
  } else {
    j["sweep"] = nullptr;
  }
  j["ledger"] = doc.ledger ? json{{"ebits_consumed", doc.ledger->ebits_consumed},
                                  {"cbits_A_to_B", doc.ledger->cbits_a_to_b},
                                  {"cbits_B_to_A", doc.ledger->cbits_b_to_a}}
                           : json(nullptr);
  json branches = json::array();
  for (const auto& b : doc.branches) {
    branches.push_back({{"input", b.input},
                        {"bits", b.bits},
                        {"probability", b.probability},
                        {"fidelity", b.fidelity}});
  }
  j["branches"] = branches;
  json assertions = json::array();
  for (const auto& a : doc.assertions) {
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  j["assertions"] = assertions;
  j["exit_code"] = doc.exit_code;
  return j;
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

void dump(const json& j, std::string& out, int level) {
  const std::string pad(static_cast<std::size_t>(2 * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * level), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        dump(value, out, level + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (std::all_of(j.begin(), j.end(), is_scalar)) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          dump(j[k], out, level + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        dump(j[k], out, level + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += std::isfinite(j.get<double>()) ? format_real(j.get<double>()) : "null";
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string emit_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "scenario: " << doc.scenario << "\n";
  if (doc.source) os << "source: " << *doc.source << "\n";
  os << "schema_version: " << doc.schema_version << "\n";
  os << "config: tolerance=" << sci(doc.config.tolerance) << " seed=" << doc.config.seed
     << " steps=" << doc.config.steps << "\n";
  if (doc.analysis) {
    const auto& a = *doc.analysis;
    os << "classification: " << to_string(a.classification);
    if (!a.reason.empty()) os << " (" << a.reason << ")";
    os << "\n";
    os << "verdict: " << to_string(a.verdict.status);
    if (a.verdict.certificate) {
      const auto& c = *a.verdict.certificate;
      os << " [" << to_string(c.reason) << " at pair (" << c.i << ", " << c.j
         << "), magnitude " << format_real(c.magnitude) << "]";
    }
    os << "\n";
    os << "coherence_preserving: " << (a.coherence_preserving ? "yes" : "no") << "\n";
    os << "catalyst_intact: " << (a.integrity.overall ? "yes" : "no") << "\n";
    os << "bob_alone_impossible: " << (a.bob_alone_impossible ? "yes" : "no") << "\n";
    for (const auto& w : a.witnesses) {
      os << "witness " << w.origin << ": concurrence_in=" << sci(w.concurrence_in)
         << " concurrence_out=" << format_real(w.concurrence_out) << "\n";
    }
  }
  if (doc.sweep) {
    os << "sweep (delta,overlap_re,overlap_im,overlap_modulus,out_concurrence):\n";
    for (const auto& p : *doc.sweep) {
      os << format_real(p.v - p.u) << "," << format_real(p.overlap.real()) << ","
         << format_real(p.overlap.imag()) << "," << format_real(std::abs(p.overlap)) << ","
         << format_real(p.out_concurrence) << "\n";
    }
  }
  if (doc.ledger) {
    os << "ledger: ebits=" << doc.ledger->ebits_consumed << " cbits_A_to_B="
       << doc.ledger->cbits_a_to_b << " cbits_B_to_A=" << doc.ledger->cbits_b_to_a << "\n";
  }
  for (const auto& a : doc.assertions) {
    os << (a.passed ? "[PASS] " : "[FAIL] ") << a.name;
    if (!a.detail.empty()) os << ": " << a.detail;
    os << "\n";
  }
  os << "exit_code: " << doc.exit_code << "\n";
  return os.str();
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw UsageError("--tolerance must be a positive finite number");
  }
  if (steps < 2) throw UsageError("--steps must be at least 2");
}

bool ReportDocument::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

ReportDocument run_scenario(std::string_view name, const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  if (name == "cloning") {
    doc = scenario_cloning(config);
  } else if (name == "deletion") {
    doc = scenario_deletion(config);
  } else if (name == "deletion-sweep") {
    doc = scenario_deletion_sweep(config);
  } else if (name == "no-info-cloning") {
    doc = scenario_no_info_cloning(config);
  } else if (name == "teleport") {
    doc = scenario_teleport(config);
  } else if (name == "nonlocal-cnot") {
    doc = scenario_nonlocal_cnot(config);
  } else {
    throw UsageError("unknown scenario '" + std::string(name) + "'");
  }
  doc.scenario = std::string(name);
  doc.config = config;
  doc.exit_code = doc.all_passed() ? exit_code::ok : exit_code::assertion_failed;
  return doc;
}

ReportDocument check_spec(const ProcessSpec& spec, const RunConfig& config) {
  config.validate();
  ReportDocument doc;
  doc.scenario = "spec";
  doc.config = config;
  auto r = classify(spec, config.tolerance, config.seed);
  if (r.verdict.status == FeasibilityStatus::undetermined) {
    doc.exit_code = exit_code::undetermined;
  } else if (r.classification == Classification::not_catalysis) {
    doc.exit_code = exit_code::negative;
  } else {
    doc.exit_code = exit_code::ok;
  }
  doc.analysis = std::move(r);
  return doc;
}

ReportDocument check_spec_file(const std::filesystem::path& path, const RunConfig& config) {
  config.validate();
  ReportDocument doc = check_spec(read_process_spec(path, config.tolerance), config);
  doc.source = path.string();
  return doc;
}

ProcessSpec named_spec(std::string_view name) {
  if (name == "cloning") return instances::cloning_spec();
  if (name == "deletion") return instances::deletion_spec();
  if (name == "identity") return instances::identity_spec();
  throw UsageError("unknown spec '" + std::string(name) +
                   "' (expected cloning, deletion or identity)");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string s(buf);
  if (s == "-0.000000000000") s.erase(0, 1);
  return s;
}

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::text) return emit_text(doc);
  std::string out;
  dump(to_json(doc), out, 0);
  out += "\n";
  return out;
}

}  // namespace qcat
