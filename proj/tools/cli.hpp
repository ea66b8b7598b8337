#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace ttl::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

struct CensusOptions {
  Int p_max = 8;
  Int q_max = 8;
  std::vector<Int> s_set = {4};
  bool verify = false;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

/// Rows for 2 <= q <= min(p, q_max), 2 <= p <= p_max, 2 <= r <= p + q and
/// every s in the set, sorted on (p, q, r, s).
std::vector<CensusRow> build_census(const CensusOptions& options);

/// Parses "4,-4,5" into a sorted, deduplicated list. Throws Error(Parse) on
/// malformed text or a zero entry.
std::vector<Int> parse_s_set(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttl::cli
