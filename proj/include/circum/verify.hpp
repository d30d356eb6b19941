#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "circum/graph.hpp"

namespace circum {

struct VerifyOptions {
  int trials = 100;
  int nmax = 12;
  std::uint64_t seed = 7;
  bool corpus = true;     // named graphs and the figure corpus
  int oracle_nmax = 22;   // skip the oracle above this order
};

struct VerifyReport {
  long instances = 0;
  long passed = 0;
  long failed = 0;
  long oracle_checked = 0;
  std::map<std::string, long> histogram;
  std::vector<std::string> failures;   // first few, in run order
  std::vector<std::string> missing;    // coverage labels never seen
  double max_ms = 0;                   // slowest single instance
};

// Branch labels every default run is expected to reach.
const std::vector<std::string>& coverage_labels();

VerifyReport verify(const VerifyOptions& opt);

// Timing is left out so that equal seeds give equal bytes.
nlohmann::json to_json(const VerifyReport& r);

}  // namespace circum
