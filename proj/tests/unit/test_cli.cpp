#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "hypexp/sheaf.hpp"
#include "hypexp/trace_table.hpp"
#include "hypexp_cli/cli.hpp"
#include "json.hpp"

using namespace hypexp;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = {}) {
  std::ostringstream out, err;
  std::istringstream in(input);
  args.insert(args.begin(), "hypexp");
  const int code = cli::cli_main(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hypexp_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("frobenius prints the trace sequence") {
  const auto r = run_cli({"frobenius", "--p", "3", "--N", "23", "--D", "4", "--t", "-1", "--kmax", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "[0,-2,0,2,0,-2,7]\n");
  const auto dlog = run_cli({"frobenius", "--p", "3", "--N", "23", "--D", "4", "--t-dlog", "1", "--kmax", "3"});
  CHECK(dlog.code == 0);
  CHECK(dlog.out == "[0,-2,0]\n");  // the generator of GF(3) is -1
}

TEST_CASE("v-check reports and exit codes") {
  const auto ok = run_cli({"v-check", "--p", "3", "--N", "23", "--D", "4", "--rmax", "6"});
  CHECK(ok.code == 0);
  const auto j = json::parse(ok.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["violations"].empty());
  CHECK(j["r_max"] == 6);
  const auto bad = run_cli({"v-check", "--p", "3", "--N", "11", "--D", "2", "--rmax", "5"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["verdict"] == "fail");
  const auto usage = run_cli({"v-check", "--p", "3", "--N", "22", "--D", "4"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("gcd(N,D)=1 violated") != std::string::npos);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"v-check", "--p"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  const std::vector<std::string> base = {"search", "--p", "3", "--Nmax", "20", "--Dmax", "8", "--rmax", "6"};
  const auto a = run_cli(base);
  auto with_workers = base;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  const auto b = run_cli(with_workers);
  CHECK(a.code == 0);
  CHECK(a.out == run_cli(base).out);
  CHECK(a.out == b.out);
  const auto lemma1 = run_cli({"lemma-check", "--rmax", "8", "--corollary-rmax", "8"});
  const auto lemma3 = run_cli({"lemma-check", "--rmax", "8", "--corollary-rmax", "8", "-j", "3"});
  CHECK(lemma1.code == 0);
  CHECK(lemma1.out == lemma3.out);
}

TEST_CASE("meta sidecar keeps the report deterministic") {
  const auto meta = temp_path("meta.json");
  const auto r = run_cli({"v-check", "--rmax", "4", "--meta-out", meta.string()});
  CHECK(r.code == 0);
  CHECK(r.out == run_cli({"v-check", "--rmax", "4"}).out);
  REQUIRE(std::filesystem::exists(meta));
  std::ifstream in(meta);
  CHECK(json::parse(in).is_object());
  std::filesystem::remove(meta);
}

TEST_CASE("trace writes CSV that reads back to the library table") {
  const auto path = temp_path("h.csv");
  const auto r = run_cli({"trace", "--p", "3", "--N", "5", "--D", "2", "--r", "3", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto table = read_csv(in);
  const auto K = build_field(3, 3);
  const auto expect = HTraceEngine(K, SheafParams::make(3, 5, 2)).table();
  for (u64 k = 0; k < K.size() - 1; ++k) CHECK(table.at(K.exp(k)) == expect.at(K.exp(k)));
  std::filesystem::remove(path);
  const auto single = run_cli({"trace", "--p", "3", "--N", "23", "--D", "4", "--r", "2", "--t-dlog", "4"});  // g^4 = -1
  CHECK(single.code == 0);
  CHECK(single.out.find("-18") != std::string::npos);
}

TEST_CASE("identify reads sequences from arguments and stdin") {
  const auto a = run_cli({"identify", "--seq", "0,-2,0,2,0,-2,7"});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["admitting"] == json::array({"Co2"}));
  const auto frob = run_cli({"frobenius", "--p", "3", "--N", "23", "--D", "4", "--t", "-1", "--kmax", "7"});
  const auto piped = run_cli({"identify", "--seq-file", "-"}, frob.out);
  CHECK(piped.code == 0);
  CHECK(piped.out == a.out);
  const auto none = run_cli({"identify", "--seq", "23,0"});
  CHECK(none.code == 1);
  CHECK(json::parse(none.out)["admitting"].empty());
  CHECK(run_cli({"identify", "--seq", "1,x"}).code == 2);
}

TEST_CASE("det and verify-convolution") {
  const auto det = run_cli({"det", "--p", "3", "--N", "23", "--D", "4"});
  CHECK(det.code == 0);
  CHECK(json::parse(det.out)["determinant_sign"] == "+1");
  const auto conv = run_cli({"verify-convolution", "--p", "3", "--N", "23", "--D", "4", "--r", "3"});
  CHECK(conv.code == 0);
}
