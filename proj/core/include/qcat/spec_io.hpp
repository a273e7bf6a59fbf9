#pragma once

// Process-spec file format (JSON):
//
//   { "version": 1, "dimA": 2, "dimB": 2,
//     "pairs": [ { "in": [[re, im], ...], "out": [[re, im], ...] }, ... ] }
//
// Amplitude arrays hold dimA * dimB entries in A-major order
// (index = a * dimB + b).

#include <filesystem>
#include <string>
#include <string_view>

#include "qcat/errors.hpp"
#include "qcat/process.hpp"

namespace qcat {

/// Malformed or invalid input data. The message names the offending field.
class DataError : public Error {
public:
  using Error::Error;
};

ProcessSpec parse_process_spec(std::string_view json_text, double tol = kDefaultTolerance);
ProcessSpec read_process_spec(const std::filesystem::path& path, double tol = kDefaultTolerance);

/// Serializes with round-trip exact doubles.
std::string write_process_spec(const ProcessSpec& spec);

}  // namespace qcat
