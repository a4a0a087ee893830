#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "symhilb/circle/weights.hpp"
#include "symhilb/cli/serialize.hpp"
#include "symhilb/finite/group.hpp"

namespace symhilb::cli {

struct Output {
  Json document;
  std::string text;
};

/// Where a series comes from: a weight vector or fixture files.
struct SeriesSource {
  std::optional<circle::WeightVector> weights;
  std::vector<std::string> files;
  bool off_shell = false;
};

struct HilbertRequest {
  circle::WeightVector weights;
  bool off_shell = false;
  std::optional<std::size_t> oracle_verify;
  bool terms = false;
  std::size_t slack = 16;
};

struct LaurentRequest {
  SeriesSource source;
  std::size_t order = 5;
};

struct SymplecticRequest {
  SeriesSource source;
  std::size_t order = 10;
};

struct FiniteRequest {
  std::vector<finite::Generator> generators;
  std::optional<std::size_t> dimension;
  std::size_t order = 3;
};

enum class ScanFormat { Csv, JsonLines };

struct ScanRequest {
  std::size_t n = 3;
  std::size_t max_level = 0;
  std::optional<std::string> out;
  std::optional<ScanFormat> format;  // default: from the file extension
  bool hits = false;
};

Output cmd_hilbert(const HilbertRequest& req);
Output cmd_laurent(const LaurentRequest& req);
Output cmd_symplectic(const SymplecticRequest& req);
Output cmd_finite(const FiniteRequest& req);
Output cmd_scan(const ScanRequest& req);

/// 2 for InputError, 3 for VerificationError and anything else.
int exit_code(const std::exception& e);

/// CSV and JSON-lines renderings of scan results.
std::string scan_csv(const Json& levels);
std::string scan_jsonl(const Json& levels);

}  // namespace symhilb::cli
