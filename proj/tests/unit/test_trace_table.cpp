#include <sstream>

#include "doctest.h"
#include "hypexp/error.hpp"
#include "hypexp/sheaf.hpp"
#include "hypexp/trace_table.hpp"
#include "json.hpp"

using namespace hypexp;

namespace {

void check_same_table(const TraceTable& a, const TraceTable& b) {
  CHECK(a.field.same_model(b.field));
  CHECK(a.kind == b.kind);
  CHECK(a.N == b.N);
  CHECK(a.D == b.D);
  CHECK(a.root_order == b.root_order);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    REQUIRE(a.values[i].has_value() == b.values[i].has_value());
    if (a.values[i]) CHECK(*a.values[i] == *b.values[i]);
  }
}

}  // namespace

TEST_CASE("trace kind names round-trip") {
  for (auto k : {TraceKind::H, TraceKind::F, TraceKind::A0, TraceKind::B0, TraceKind::Convolution,
                 TraceKind::Pushforward}) {
    CHECK(trace_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(trace_kind_from_string("G"), Error);
}

TEST_CASE("CSV round trip for H and F tables") {
  const auto K = build_field(3, 3);
  const auto P = SheafParams::make(3, 5, 2);
  const auto H = HTraceEngine(K, P).table();
  std::stringstream ss;
  write_csv(ss, H);
  check_same_table(H, read_csv(ss));

  // The F table includes u = 0, written as "0" ahead of dlog 0 (also "0").
  const auto F = trace_F_table(K, P);
  CHECK(F.complete());
  std::stringstream sf;
  write_csv(sf, F);
  std::string header, columns, first, second;
  std::getline(sf, header);
  std::getline(sf, columns);
  std::getline(sf, first);
  std::getline(sf, second);
  CHECK(columns == "t,count_0,count_1,count_2");
  CHECK(first.rfind("0,", 0) == 0);
  CHECK(second.rfind("0,", 0) == 0);
  sf.seekg(0);
  check_same_table(F, read_csv(sf));
}

TEST_CASE("CSV round trip preserves a non-default field model") {
  const auto mods = monic_irreducibles(5, 2, 2);
  const auto K = build_field(5, 2, mods[1]);
  const auto table = HTraceEngine(K, SheafParams::make(5, 7, 3)).table();
  std::stringstream ss;
  write_csv(ss, table);
  check_same_table(table, read_csv(ss));
}

TEST_CASE("malformed CSV is a schema error") {
  for (const std::string text : {"", "t,count_0\n", "# {\"p\":3}\nt,count_0\n", "# not json\n"}) {
    std::istringstream is(text);
    try {
      read_csv(is);
      FAIL("accepted malformed CSV");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SchemaError);
    }
  }
  const auto K = build_field(3, 1);
  TraceTable t(K, TraceKind::H, 5, 2, 3);
  t.set(K.one(), RouCounts::integer(3, 1));
  std::stringstream ss;
  write_csv(ss, t);
  std::string text = ss.str();
  text.replace(text.rfind(",1"), 2, ",x");
  std::istringstream bad(text);
  CHECK_THROWS_AS(read_csv(bad), Error);
}

TEST_CASE("JSON export") {
  const auto K = build_field(3, 2);
  const auto table = HTraceEngine(K, SheafParams::make(3, 23, 4)).table();
  const auto j = nlohmann::json::parse(to_json(table));
  CHECK(j["header"]["kind"] == "H");
  CHECK(j["header"]["p"] == 3);
  CHECK(j["header"]["r"] == 2);
  CHECK(j["header"]["N"] == 23);
  CHECK(j["rows"].size() == 8);
  CHECK(j["rows"][0]["t"] == "0");
  CHECK(j["rows"][0]["counts"].size() == 3);
}

TEST_CASE("incomplete tables and bad values") {
  const auto K = build_field(3, 2);
  TraceTable t(K, TraceKind::H, 5, 2, 3);
  CHECK_FALSE(t.complete());
  try {
    t.at(K.one());
    FAIL("expected IncompleteTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTable);
  }
  CHECK_THROWS_AS(t.set(K.one(), RouCounts::integer(5, 1)), Error);
  for (u64 k = 0; k < 8; ++k) t.set(K.exp(k), RouCounts::integer(3, 0));
  CHECK(t.complete());
}
