#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace darmonlab::cli {

struct CliConfig {
  std::string field = "Q";
  std::string output = "json";  // json | human
  long height = 50;
  std::uint64_t seed = 0;
  int escalation = 8;
};

/// Runs one command line (without the program name). Exit codes: 0 success, 1 usage or domain
/// error, 2 search exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darmonlab::cli
