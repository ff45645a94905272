#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypexp/numtheory.hpp"

namespace hypexp::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  u64 p = 3;
  u64 N = 23;
  u64 D = 4;
  unsigned r = 1;               // field degree
  std::optional<i64> t;         // prime-field point
  std::optional<u64> t_dlog;    // point as g^k in GF(p^r)
  std::optional<unsigned> r_max;  // default depends on the command
  unsigned corollary_r_max = 12;
  unsigned kmax = 7;
  std::optional<unsigned> d;    // det: field degree, default ord_N(p)
  u64 N_max = 30;
  u64 D_max = 10;
  std::string kind = "H";
  std::string seq;              // identify: comma separated or JSON array
  std::string seq_file;         // identify: file holding a JSON array, "-" for stdin
  std::string out;              // empty: stdout
  std::string format = "json";
  std::string data_dir;
  std::string meta_out;
  unsigned workers = 1;
  u64 seed = 0;
};

/// Runs one command, writing the report to `out` (or cfg.out) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in);

/// Parses argv (argv[0] is skipped) and runs.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace hypexp::cli
