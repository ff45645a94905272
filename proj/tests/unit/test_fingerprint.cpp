#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hypexp/error.hpp"
#include "hypexp/fingerprint.hpp"
#include "json.hpp"

using namespace hypexp;
using nlohmann::json;

namespace {

std::filesystem::path data_dir() { return std::filesystem::path(HYPEXP_TEST_DATA_DIR); }

std::string read_text(const std::string& file) {
  std::ifstream in(data_dir() / file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind parse_error(const std::string& text) {
  try {
    parse_table(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("table accepted");
  return ErrorKind::InvalidArgument;
}

// chi(c^k) for k = 1..7 straight from the raw JSON, applying prime power maps one prime at a time.
std::map<std::string, std::vector<i64>> raw_sequences(const json& j) {
  std::map<std::string, const json*> by_name;
  for (const auto& c : j["classes"]) by_name[c["name"].get<std::string>()] = &c;
  std::map<std::string, std::vector<i64>> out;
  for (const auto& c : j["classes"]) {
    std::vector<i64> seq;
    for (unsigned k = 1; k <= 7; ++k) {
      std::string cur = c["name"];
      unsigned rest = k;
      for (unsigned ell : {2u, 3u, 5u, 7u}) {
        while (rest % ell == 0) {
          cur = (*by_name.at(cur))["power_maps"][std::to_string(ell)].get<std::string>();
          rest /= ell;
        }
      }
      seq.push_back((*by_name.at(cur))["chi"].get<i64>());
    }
    out[c["name"]] = seq;
  }
  return out;
}

}  // namespace

TEST_CASE("bundled tables load and pass validation") {
  const auto tables = load_candidate_tables(data_dir());
  REQUIRE(tables.size() == 7);
  std::vector<std::string> names;
  for (const auto& T : tables) names.push_back(T.group);
  CHECK(names == std::vector<std::string>{"A24", "S24", "M24", "PSL2(23)", "PGL2(23)", "Co3", "Co2"});
  const auto co2 = load_table(data_dir() / "co2.json");
  CHECK(co2.classes.front().chi == 23);
  CHECK(co2.order == static_cast<i128>(42305421312000LL));
  CHECK(co2.classes.size() == 60);
}

TEST_CASE("composed power maps agree with a raw JSON walk") {
  for (const auto& file : candidate_table_files()) {
    const auto j = json::parse(read_text(file));
    const auto T = parse_table(j.dump());
    const auto expect = raw_sequences(j);
    for (std::size_t c = 0; c < T.classes.size(); ++c) {
      CHECK(trace_sequence_of_class(T, c, 7) == expect.at(T.classes[c].name));
      for (unsigned k = 1; k <= 7; ++k) {
        const u64 ord = T.classes[c].order;
        CHECK(T.classes[T.power(c, k)].order == ord / std::gcd(ord, static_cast<u64>(k)));
      }
    }
  }
}

TEST_CASE("schema and invariant errors") {
  const auto base = json::parse(read_text("co3.json"));
  {
    auto j = base;
    j["classes"][1].erase("power_maps");
    CHECK(parse_error(j.dump()) == ErrorKind::SchemaError);
  }
  {
    auto j = base;
    j["classes"][1]["chi"] = "seven";
    CHECK(parse_error(j.dump()) == ErrorKind::SchemaError);
  }
  CHECK(parse_error("{not json") == ErrorKind::SchemaError);
  {
    auto j = base;
    j["classes"][0]["chi"] = 22;
    CHECK(parse_error(j.dump()) == ErrorKind::InvariantViolation);
  }
  {
    auto j = base;
    j["classes"][1]["chi"] = 5;  // breaks the second orthogonality sum
    CHECK(parse_error(j.dump()) == ErrorKind::InvariantViolation);
  }
  {
    auto j = base;
    j["classes"][1]["size"] = "170776";
    CHECK(parse_error(j.dump()) == ErrorKind::InvariantViolation);
  }
  {
    auto j = base;
    j["classes"][1]["power_maps"]["3"] = "1A";
    CHECK(parse_error(j.dump()) == ErrorKind::InvariantViolation);
  }
  {
    auto j = base;
    j["aliases"]["99"] = "99Z";
    CHECK(parse_error(j.dump()) == ErrorKind::InvariantViolation);
  }
  try {
    parse_table([&] {
      auto j = base;
      j["classes"][0]["chi"] = 22;
      return j.dump();
    }());
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1A") != std::string::npos);
  }
}

TEST_CASE("Co3 aliases") {
  const auto co3 = load_table(data_dir() / "co3.json");
  CHECK(co3.classes[co3.index_of("2")].chi == 7);
  CHECK(co3.classes[co3.index_of("16")].chi == 2);
  CHECK(co3.classes[co3.index_of("29")].chi == 0);
  CHECK(co3.classes[co3.index_of("29")].name == "14A");
  CHECK(trace_sequence_of_class(co3, "29", 2) == std::vector<i64>{0, 2});
  CHECK_FALSE(co3.find("99Z").has_value());
  CHECK_THROWS_AS(co3.index_of("99Z"), Error);
  try {
    trace_sequence_of_class(co3, "2A", 8);
    FAIL("expected MissingPowerMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingPowerMap);
  }
}

TEST_CASE("identity and involution sequences") {
  for (const auto& T : load_candidate_tables(data_dir())) {
    CHECK(find_classes_matching(T, std::vector<i64>(7, 23)) == std::vector<std::string>{"1A"});
    CHECK(find_classes_matching(T, {23, 23, 23}) == std::vector<std::string>{"1A"});
    for (std::size_t c = 0; c < T.classes.size(); ++c) {
      if (T.classes[c].order != 2) continue;
      const i64 x = T.classes[c].chi;
      const auto found = find_classes_matching(T, {x, 23, x, 23, x, 23, x});
      CHECK(std::find(found.begin(), found.end(), T.classes[c].name) != found.end());
    }
  }
}

TEST_CASE("identification of the (3, 23, 4) sequence") {
  const auto tables = load_candidate_tables(data_dir());
  const std::vector<i64> seq = {0, -2, 0, 2, 0, -2, 7};
  const auto rep = identify(tables, seq);
  CHECK(rep.admitting_groups() == std::vector<std::string>{"Co2"});
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& v = rep.verdicts[i];
    CHECK(v.group == tables[i].group);
    CHECK(v.admits.empty() != v.eliminated.empty());
    CHECK(v.min_value_rule == (-2 < tables[i].min_chi()));
    if (v.group == "Co2") {
      CHECK(std::find(v.admits.begin(), v.admits.end(), "28A") != v.admits.end());
      for (const auto& name : v.admits) CHECK(trace_sequence_of_class(tables[i], name, 7) == seq);
    }
    if (v.group == "Co3") {
      CHECK_FALSE(v.min_value_rule);
      CHECK(v.eliminated.find("2A^1 is in class 2A with trace 7, not 0") != std::string::npos);
      CHECK(v.eliminated.find("14A^2 is in class 7A with trace 2, not -2") != std::string::npos);
    }
  }
  CHECK(identify(tables, {23, 23}).admitting_groups().size() == tables.size());
}
