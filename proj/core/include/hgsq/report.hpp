#pragma once

// Serialized count rows. Counts and n travel as decimal strings so that no
// consumer truncates them to a double.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hgsq/bigint.hpp"
#include "hgsq/groups.hpp"

namespace hgsq {

struct Triple {
  u64 d = 1;
  u64 e = 1;
  u64 k = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple triple_of(const GroupSpec& g) noexcept;

enum class RowMethod { Formula, Oracle, Both };
std::string_view row_method_name(RowMethod m) noexcept;

struct ReportRow {
  BigInt n;
  Triple gamma;
  Triple g;
  BigInt count;  // 0 when incompatible
  bool incompatible = false;
  RowMethod method = RowMethod::Formula;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Formula row for a pair of groups of equal order.
ReportRow formula_row(const GroupSpec& galois, const GroupSpec& type);

/// {"n": "...", "gamma": {"d":..,"e":..,"k":..}, "g": {...}, "count": "...",
///  "status": "ok"|"incompatible", "method": "formula"|"oracle"|"both"}
std::string to_json(const ReportRow& row);
std::string to_json(const std::vector<ReportRow>& rows);  // JSON array

/// Inverse of to_json for a single object. Throws InvalidArgument.
ReportRow parse_report_row(std::string_view json);
std::vector<ReportRow> parse_report_rows(std::string_view json);

/// Header line and one line per row.
std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_markdown(const std::vector<ReportRow>& rows);

}  // namespace hgsq
