#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qsg {

// One batch invocation.  Identical configs produce byte-identical reports.
struct JobConfig {
  std::vector<std::string> command;  // e.g. {"filtration", "analyze", "file.json"}
  double tol = 1e-9;
  std::uint64_t seed = 0x5EED;
  std::string format = "text";  // "text" | "json"
  std::map<std::string, std::string> options;
  std::size_t max_size = 1000000;  // enumeration cap (QSG_MAX_SIZE)
};

// Exit code contract: 0 all checks passed, 1 input error, 2 a check failed.
int run_job(const JobConfig& config, std::ostream& out);

}  // namespace qsg
