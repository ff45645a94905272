#include "hypexp/fingerprint.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hypexp/error.hpp"
#include "json.hpp"

#ifndef HYPEXP_DEFAULT_DATA_DIR
#define HYPEXP_DEFAULT_DATA_DIR "data/chartables"
#endif
#ifndef HYPEXP_INSTALL_DATA_DIR
#define HYPEXP_INSTALL_DATA_DIR "share/hypexp/chartables"
#endif

namespace hypexp {

using nlohmann::json;

namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7};

[[noreturn]] void schema(const std::string& msg) { raise(ErrorKind::SchemaError, msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema(where + ": missing '" + key + "'");
  return obj.at(key);
}

i128 parse_big(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return static_cast<i128>(v.get<u64>());
  if (!v.is_string()) schema(where + ": expected a decimal string");
  const auto s = v.get<std::string>();
  if (s.empty() || s.size() > 36) schema(where + ": bad integer '" + s + "'");
  i128 out = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') schema(where + ": bad integer '" + s + "'");
    out = out * 10 + (ch - '0');
  }
  return out;
}

[[noreturn]] void violated(const std::string& group, const std::string& cls, const std::string& msg) {
  raise(ErrorKind::InvariantViolation, group + " class " + cls + ": " + msg);
}

void validate(const CharTable& T) {
  std::size_t identities = 0;
  i128 total = 0, first = 0, second = 0;
  for (const auto& c : T.classes) {
    if (c.order == 0) violated(T.group, c.name, "element order must be positive");
    if (c.size <= 0) violated(T.group, c.name, "class size must be positive");
    if (c.chi > static_cast<i64>(T.degree) || c.chi < -static_cast<i64>(T.degree)) {
      violated(T.group, c.name, "|chi| exceeds the degree");
    }
    if (c.order == 1) {
      ++identities;
      if (c.chi != static_cast<i64>(T.degree)) violated(T.group, c.name, "identity class must have chi = degree");
    }
    for (unsigned ell : kPrimes) {
      const auto it = c.power_maps.find(ell);
      const auto target = T.find(it->second);
      if (!target) violated(T.group, c.name, "power map " + std::to_string(ell) + " names unknown class " + it->second);
      const u64 expect = c.order / gcd(c.order, ell);
      if (T.classes[*target].order != expect) {
        violated(T.group, c.name, "power map " + std::to_string(ell) + " does not divide the element order correctly");
      }
    }
    total += c.size;
    first += c.size * c.chi;
    second += c.size * c.chi * c.chi;
  }
  if (identities != 1) violated(T.group, "-", "expected exactly one identity class");
  if (total != T.order) raise(ErrorKind::InvariantViolation, T.group + ": class sizes do not sum to the group order");
  if (first != 0) raise(ErrorKind::InvariantViolation, T.group + ": character not orthogonal to the trivial character");
  if (second != T.order) raise(ErrorKind::InvariantViolation, T.group + ": character norm is not 1");
  for (const auto& [alias, target] : T.aliases) {
    bool found = false;
    for (const auto& c : T.classes) found = found || c.name == target;
    if (!found) violated(T.group, alias, "alias targets unknown class " + target);
  }
}

std::string seq_to_string(const std::vector<i64>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

}  // namespace

std::optional<std::size_t> CharTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == name) return i;
  }
  if (auto it = aliases.find(name); it != aliases.end()) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].name == it->second) return i;
    }
  }
  return std::nullopt;
}

std::size_t CharTable::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  raise(ErrorKind::InvalidArgument, group + " has no class '" + name + "'");
}

std::size_t CharTable::power(std::size_t c, unsigned k) const {
  if (k == 0) raise(ErrorKind::InvalidArgument, "power exponent must be positive");
  for (unsigned ell : kPrimes) {
    while (k % ell == 0) {
      const auto& pm = classes.at(c).power_maps;
      const auto it = pm.find(ell);
      if (it == pm.end()) raise(ErrorKind::MissingPowerMap, group + " class " + classes[c].name + " lacks power map " + std::to_string(ell));
      c = index_of(it->second);
      k /= ell;
    }
  }
  if (k != 1) raise(ErrorKind::MissingPowerMap, "power maps are bundled only for primes up to 7");
  return c;
}

i64 CharTable::min_chi() const {
  i64 m = static_cast<i64>(degree);
  for (const auto& c : classes) m = std::min(m, c.chi);
  return m;
}

CharTable parse_table(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
  CharTable T;
  try {
    T.group = field(j, "group", "table").get<std::string>();
    T.degree = field(j, "degree", T.group).get<unsigned>();
    if (T.degree != 23) schema(T.group + ": degree must be 23");
    T.order = parse_big(field(j, "order", T.group), T.group + ".order");
    const auto& cls = field(j, "classes", T.group);
    if (!cls.is_array() || cls.empty()) schema(T.group + ": 'classes' must be a nonempty array");
    for (const auto& c : cls) {
      ClassInfo ci;
      ci.name = field(c, "name", T.group).get<std::string>();
      const std::string where = T.group + " class " + ci.name;
      ci.order = field(c, "order", where).get<u64>();
      ci.size = parse_big(field(c, "size", where), where + ".size");
      ci.chi = field(c, "chi", where).get<i64>();
      const auto& pm = field(c, "power_maps", where);
      for (unsigned ell : kPrimes) {
        ci.power_maps[ell] = field(pm, std::to_string(ell).c_str(), where + ".power_maps").get<std::string>();
      }
      T.classes.push_back(std::move(ci));
    }
    if (j.contains("aliases")) {
      for (const auto& [k, v] : j.at("aliases").items()) T.aliases[k] = v.get<std::string>();
    }
  } catch (const json::exception& e) {
    schema(std::string("wrong type in table: ") + e.what());
  }
  validate(T);
  return T;
}

CharTable load_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise(ErrorKind::SchemaError, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::vector<i64> trace_sequence_of_class(const CharTable& T, std::size_t c, unsigned kmax) {
  if (kmax > 7) raise(ErrorKind::MissingPowerMap, "power maps are bundled only for primes up to 7");
  std::vector<i64> out;
  for (unsigned k = 1; k <= kmax; ++k) out.push_back(T.classes[T.power(c, k)].chi);
  return out;
}

std::vector<i64> trace_sequence_of_class(const CharTable& T, const std::string& name, unsigned kmax) {
  return trace_sequence_of_class(T, T.index_of(name), kmax);
}

std::vector<std::string> find_classes_matching(const CharTable& T, const std::vector<i64>& seq) {
  std::vector<std::string> out;
  if (seq.size() > 7) return out;
  const auto k = static_cast<unsigned>(seq.size());
  for (std::size_t c = 0; c < T.classes.size(); ++c) {
    if (trace_sequence_of_class(T, c, k) == seq) out.push_back(T.classes[c].name);
  }
  return out;
}

std::vector<std::string> IdentificationReport::admitting_groups() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts) {
    if (!v.admits.empty()) out.push_back(v.group);
  }
  return out;
}

IdentificationReport identify(const std::vector<CharTable>& tables, const std::vector<i64>& seq) {
  IdentificationReport rep;
  rep.sequence = seq;
  i64 seq_min = seq.empty() ? 0 : seq.front();
  for (i64 v : seq) seq_min = std::min(seq_min, v);
  for (const auto& T : tables) {
    GroupVerdict v;
    v.group = T.group;
    const i64 tmin = T.min_chi();
    if (!seq.empty() && seq_min < tmin) {
      v.min_value_rule = true;
      v.eliminated = "min-value rule: chi >= " + std::to_string(tmin) + " on " + T.group + " but the sequence contains " +
                     std::to_string(seq_min);
      rep.verdicts.push_back(std::move(v));
      continue;
    }
    v.admits = find_classes_matching(T, seq);
    if (v.admits.empty()) {
      if (seq.size() > 7) {
        v.eliminated = "sequence longer than the bundled power maps allow";
      } else {
        // Explain through the classes that agree with the last entry.
        const auto k = static_cast<unsigned>(seq.size());
        std::string why;
        for (std::size_t c = 0; c < T.classes.size(); ++c) {
          if (T.classes[T.power(c, k)].chi != seq.back()) continue;
          const auto s = trace_sequence_of_class(T, c, k);
          for (unsigned i = 0; i < k; ++i) {
            if (s[i] == seq[i]) continue;
            if (!why.empty()) why += "; ";
            why += T.classes[c].name + "^" + std::to_string(i + 1) + " is in class " + T.classes[T.power(c, i + 1)].name +
                   " with trace " + std::to_string(s[i]) + ", not " + std::to_string(seq[i]);
            break;
          }
        }
        if (why.empty()) why = "no class c has chi(c^" + std::to_string(k) + ") = " + std::to_string(seq.back());
        v.eliminated = "no class has trace sequence " + seq_to_string(seq) + ": " + why;
      }
    }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

const std::vector<std::string>& candidate_table_files() {
  static const std::vector<std::string> files = {"a24.json",    "s24.json", "m24.json", "psl2_23.json",
                                                 "pgl2_23.json", "co3.json", "co2.json"};
  return files;
}

std::filesystem::path chartable_dir() {
  if (const char* env = std::getenv("HYPEXP_DATA_DIR"); env && *env) return env;
  for (const char* dir : {HYPEXP_DEFAULT_DATA_DIR, HYPEXP_INSTALL_DATA_DIR}) {
    if (std::filesystem::exists(std::filesystem::path(dir) / "co2.json")) return dir;
  }
  return HYPEXP_DEFAULT_DATA_DIR;
}

std::vector<CharTable> load_candidate_tables(const std::filesystem::path& dir) {
  std::vector<CharTable> out;
  for (const auto& f : candidate_table_files()) out.push_back(load_table(dir / f));
  return out;
}

}  // namespace hypexp
