#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apx/rational.hpp"

namespace apx::cli {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::int64_t max_order = 15;
  double tolerance_spectral = 1e-9;
  Rational gamma0 = make_rational(949, 1000);
  unsigned threads = 0;  // 0 = auto
  OutputFormat output_format = OutputFormat::json;
};

/// Reads `key = value` lines (blank lines and '#' comments ignored) with
/// keys max_order, tolerance_spectral, gamma0, threads (integer or "auto"),
/// output_format (json|csv|text). Throws apx::InvalidArgument on unknown
/// keys or bad values.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Applies APX_THREADS when set.
void apply_environment(RunConfig& config);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success with no failures, 1 when a verification
/// suite reports failures or violations, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apx::cli
