#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypexp/cyclo.hpp"
#include "hypexp/field.hpp"

namespace hypexp {

enum class TraceKind { H, F, A0, B0, Convolution, Pushforward };

std::string_view to_string(TraceKind kind) noexcept;
TraceKind trace_kind_from_string(std::string_view name);

/// Trace function on K (or K^x) with values in Z[zeta_root_order], indexed by
/// packed field element. Missing entries are std::nullopt.
struct TraceTable {
  FiniteField field;
  TraceKind kind = TraceKind::H;
  u64 N = 0;
  u64 D = 0;
  u64 root_order = 0;
  std::vector<std::optional<RouCounts>> values;

  TraceTable(FiniteField K, TraceKind kind, u64 N, u64 D, u64 root_order);

  void set(FieldElement t, RouCounts v);
  bool has(FieldElement t) const { return values[t.value].has_value(); }
  /// Throws IncompleteTable if t has no value.
  const RouCounts& at(FieldElement t) const;
  /// True when every t in K^x (and 0 for kind F) has a value.
  bool complete() const;
};

/// CSV: first line "# " followed by the JSON header, then
/// "t,count_0,...,count_{r-1}" and one row per stored point, t written as
/// its discrete log or "0". Rows are ordered by discrete log, 0 first.
void write_csv(std::ostream& os, const TraceTable& table);
TraceTable read_csv(std::istream& is);

/// {"header": {...}, "rows": [{"t": ..., "counts": [...]}, ...]}
std::string to_json(const TraceTable& table);

}  // namespace hypexp
