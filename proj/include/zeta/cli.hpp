#pragma once

// Command layer behind the zeta_cli executable. Every command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 numerical finding (count mismatch, suspect zero, failed
// bound), 2 usage or configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace rzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

enum class OutFormat { Csv, Json };

struct RunConfig {
  int digits = 30;
  double t_max = 100.0;
  long k_max = 1'000'000;
  OutFormat format = OutFormat::Csv;
  std::string cache_path;  // empty: $ZETA_CACHE, then "zeta-zeros.cache"
  unsigned workers = 0;    // 0: available parallelism
};

/// Throws Error(InvalidArgument) when a field is out of range.
void validate(const RunConfig& cfg);
std::string resolve_cache_path(const RunConfig& cfg);

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_laurent(const RunConfig& cfg, long zero_index, int n_terms, std::ostream& out, std::ostream& err);
int cmd_stieltjes(const RunConfig& cfg, int n_max, std::ostream& out, std::ostream& err);
int cmd_mertens(const RunConfig& cfg, long x, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rzeta::cli
