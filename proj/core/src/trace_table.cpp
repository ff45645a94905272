#include "hypexp/trace_table.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "hypexp/error.hpp"
#include "json.hpp"

namespace hypexp {

using nlohmann::json;

std::string_view to_string(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::H: return "H";
    case TraceKind::F: return "F";
    case TraceKind::A0: return "A0";
    case TraceKind::B0: return "B0";
    case TraceKind::Convolution: return "convolution";
    case TraceKind::Pushforward: return "pushforward";
  }
  return "?";
}

TraceKind trace_kind_from_string(std::string_view name) {
  for (auto k : {TraceKind::H, TraceKind::F, TraceKind::A0, TraceKind::B0, TraceKind::Convolution,
                 TraceKind::Pushforward}) {
    if (to_string(k) == name) return k;
  }
  raise(ErrorKind::SchemaError, "unknown trace kind '" + std::string(name) + "'");
}

TraceTable::TraceTable(FiniteField K, TraceKind kind_, u64 N_, u64 D_, u64 root_order_)
    : field(std::move(K)), kind(kind_), N(N_), D(D_), root_order(root_order_), values(field.size()) {}

void TraceTable::set(FieldElement t, RouCounts v) {
  if (!field.contains(t)) raise(ErrorKind::InvalidArgument, "point outside the table's field");
  if (v.p() != root_order) raise(ErrorKind::MismatchedRing, "value has the wrong root order for this table");
  values[t.value] = std::move(v);
}

const RouCounts& TraceTable::at(FieldElement t) const {
  if (!field.contains(t) || !values[t.value]) {
    raise(ErrorKind::IncompleteTable, "trace table has no value at element " + std::to_string(t.value));
  }
  return *values[t.value];
}

bool TraceTable::complete() const {
  for (u64 v = 1; v < values.size(); ++v) {
    if (!values[v]) return false;
  }
  return kind != TraceKind::F || values[0].has_value();
}

namespace {

json header_json(const TraceTable& table) {
  const auto& K = table.field;
  return json{{"p", K.characteristic()},
              {"r", K.degree()},
              {"modulus", std::vector<u64>(K.modulus().begin(), K.modulus().end())},
              {"generator", K.coeffs(K.generator())},
              {"kind", std::string(to_string(table.kind))},
              {"N", table.N},
              {"D", table.D},
              {"root_order", table.root_order}};
}

// Stored points in output order: 0 first, then by discrete log.
template <class Fn>
void for_each_row(const TraceTable& table, Fn&& fn) {
  const auto& K = table.field;
  if (table.values[0]) fn(std::string("0"), *table.values[0]);
  const u64 n = K.size() - 1;
  for (u64 k = 0; k < n; ++k) {
    const auto& v = table.values[K.exp(k).value];
    if (v) fn(std::to_string(k), *v);
  }
}

}  // namespace

void write_csv(std::ostream& os, const TraceTable& table) {
  os << "# " << header_json(table).dump() << '\n';
  os << 't';
  for (u64 i = 0; i < table.root_order; ++i) os << ",count_" << i;
  os << '\n';
  for_each_row(table, [&](const std::string& t, const RouCounts& v) {
    os << t;
    for (auto c : v.counts()) os << ',' << c;
    os << '\n';
  });
}

TraceTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) raise(ErrorKind::SchemaError, "missing CSV header line");
  json h;
  try {
    h = json::parse(line.substr(2));
  } catch (const json::exception& e) {
    raise(ErrorKind::SchemaError, std::string("bad CSV header: ") + e.what());
  }
  try {
    const auto p = h.at("p").get<u64>();
    const auto r = h.at("r").get<unsigned>();
    const auto modulus = h.at("modulus").get<std::vector<u64>>();
    const auto gen = h.at("generator").get<std::vector<u64>>();
    u64 gv = 0;
    u64 place = 1;
    for (u64 c : gen) {
      gv += c * place;
      place *= p;
    }
    const FiniteField K = FiniteField::build(p, r, modulus, FieldElement{gv});
    TraceTable table(K, trace_kind_from_string(h.at("kind").get<std::string>()), h.at("N").get<u64>(),
                     h.at("D").get<u64>(), h.at("root_order").get<u64>());
    if (!std::getline(is, line) || line.rfind("t,", 0) != 0) raise(ErrorKind::SchemaError, "missing CSV column line");
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::stringstream ss(line);
      std::string cell;
      std::getline(ss, cell, ',');
      const FieldElement t = cell == "0" && table.kind == TraceKind::F && !table.values[0]
                                 ? K.zero()
                                 : K.exp(std::stoull(cell));
      std::vector<i64> counts;
      while (std::getline(ss, cell, ',')) counts.push_back(std::stoll(cell));
      if (counts.size() != table.root_order) raise(ErrorKind::SchemaError, "row has the wrong number of counts");
      table.set(t, RouCounts(table.root_order, std::move(counts)));
    }
    return table;
  } catch (const json::exception& e) {
    raise(ErrorKind::SchemaError, std::string("bad CSV header: ") + e.what());
  } catch (const std::invalid_argument&) {
    raise(ErrorKind::SchemaError, "non-numeric CSV cell");
  }
}

std::string to_json(const TraceTable& table) {
  json rows = json::array();
  for_each_row(table, [&](const std::string& t, const RouCounts& v) {
    rows.push_back({{"t", t}, {"counts", std::vector<i64>(v.counts().begin(), v.counts().end())}});
  });
  return json{{"header", header_json(table)}, {"rows", rows}}.dump(2);
}

}  // namespace hypexp
