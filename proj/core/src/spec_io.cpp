#include "qcat/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcat {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DataError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::size_t positive_int(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw DataError(where + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

DenseVector amplitudes(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) throw DataError(where + ": expected an array of [re, im] pairs");
  if (v.size() != dim) {
    throw DataError(where + ": expected " + std::to_string(dim) + " amplitudes, got " +
                    std::to_string(v.size()));
  }
  DenseVector out(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const json& c = v[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
      throw DataError(at + ": expected [re, im]");
    }
    const double re = c[0].get<double>();
    const double im = c[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw DataError(at + ": non-finite amplitude");
    out[static_cast<Eigen::Index>(k)] = Complex(re, im);
  }
  return out;
}

PureState state(const json& v, std::size_t dim_a, std::size_t dim_b, const std::string& where,
                double tol) {
  DenseVector amps = amplitudes(v, dim_a * dim_b, where);
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream msg;
    msg << where << ": state is not normalized (norm " << norm << ")";
    throw DataError(msg.str());
  }
  return PureState({dim_a, dim_b}, std::move(amps), tol);
}

json encode(const DenseVector& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(json::array({c.real(), c.imag()}));
  return arr;
}

}  // namespace

ProcessSpec parse_process_spec(std::string_view json_text, double tol) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("spec: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("spec: top level must be an object");

  const json& version = field(doc, "version", "spec");
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    throw DataError("version: unsupported spec version (expected 1)");
  }
  const std::size_t dim_a = positive_int(field(doc, "dimA", "spec"), "dimA");
  const std::size_t dim_b = positive_int(field(doc, "dimB", "spec"), "dimB");
  if (dim_a * dim_b > kMaxDimension) {
    throw DataError("dimA*dimB: " + std::to_string(dim_a * dim_b) + " exceeds the maximum of " +
                    std::to_string(kMaxDimension));
  }
  const json& pairs = field(doc, "pairs", "spec");
  if (!pairs.is_array() || pairs.empty()) throw DataError("pairs: expected a nonempty array");

  std::vector<ProcessPair> parsed;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    PureState in = state(field(pairs[i], "in", where), dim_a, dim_b, where + ".in", tol);
    PureState out = state(field(pairs[i], "out", where), dim_a, dim_b, where + ".out", tol);
    parsed.push_back({std::move(in), std::move(out)});
  }
  try {
    return ProcessSpec(dim_a, dim_b, std::move(parsed), tol);
  } catch (const DependentBasis& e) {
    throw DataError(std::string("pairs: ") + e.what());
  } catch (const Error& e) {
    throw DataError(std::string("spec: ") + e.what());
  }
}

ProcessSpec read_process_spec(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw DataError("spec: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_process_spec(buf.str(), tol);
}

std::string write_process_spec(const ProcessSpec& spec) {
  json doc;
  doc["version"] = 1;
  doc["dimA"] = spec.dim_a();
  doc["dimB"] = spec.dim_b();
  json pairs = json::array();
  for (const auto& p : spec.pairs()) {
    pairs.push_back({{"in", encode(p.input.vector())}, {"out", encode(p.output.vector())}});
  }
  doc["pairs"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

}  // namespace qcat
