#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypexp/numtheory.hpp"

namespace hypexp {

struct ClassInfo {
  std::string name;
  u64 order = 0;
  i128 size = 0;
  i64 chi = 0;
  /// prime -> class name, for the primes 2, 3, 5, 7
  std::map<unsigned, std::string> power_maps;
};

struct CharTable {
  std::string group;
  unsigned degree = 23;
  i128 order = 0;
  std::vector<ClassInfo> classes;
  /// Alternative class names (e.g. another package's numbering) -> class name.
  std::map<std::string, std::string> aliases;

  /// Index of a class by name or alias; nullopt when absent.
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws InvalidArgument
  /// Index of the class of c^k, composed from prime power maps.
  std::size_t power(std::size_t c, unsigned k) const;  // throws MissingPowerMap
  i64 min_chi() const;
};

/// Parses and validates a table. Throws SchemaError on malformed JSON or
/// missing fields, InvariantViolation naming the class for bad data.
CharTable parse_table(const std::string& json_text);
CharTable load_table(const std::filesystem::path& file);

/// (chi(c), chi(c^2), ..., chi(c^kmax)); kmax <= 7.
std::vector<i64> trace_sequence_of_class(const CharTable& T, std::size_t c, unsigned kmax);
std::vector<i64> trace_sequence_of_class(const CharTable& T, const std::string& name, unsigned kmax);

/// Names of the classes whose trace sequence equals seq exactly.
std::vector<std::string> find_classes_matching(const CharTable& T, const std::vector<i64>& seq);

struct GroupVerdict {
  std::string group;
  std::vector<std::string> admits;
  /// Empty iff admits is nonempty.
  std::string eliminated;
  bool min_value_rule = false;
};

struct IdentificationReport {
  std::vector<i64> sequence;
  std::vector<GroupVerdict> verdicts;

  std::vector<std::string> admitting_groups() const;
};

IdentificationReport identify(const std::vector<CharTable>& tables, const std::vector<i64>& seq);

/// Bundled candidate groups, in file order.
const std::vector<std::string>& candidate_table_files();

/// HYPEXP_DATA_DIR if set, else the first existing built-in location.
std::filesystem::path chartable_dir();

std::vector<CharTable> load_candidate_tables(const std::filesystem::path& dir);

}  // namespace hypexp
