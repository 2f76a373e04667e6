#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amalgam/embedding.hpp"

namespace amalgam {

/// Self-describing classification document; the text table and the JSON
/// form carry identical rows. Row order is canonical (subgroup order, then
/// membership bitset) and independent of evaluation schedule.
struct ReportDocument {
  int schema_version = 1;
  std::string tool;
  std::string version;
  std::string spec;  ///< normalized spec echo
  std::uint32_t group_order = 0;
  std::string group_type;
  std::vector<std::string> group_generators;
  std::vector<ClassificationRow> rows;
  std::vector<std::pair<std::string, std::uint32_t>> totals_by_type;
  std::uint32_t total = 0;
  std::uint32_t total_normal = 0;
  std::uint64_t runtime_ms = 0;
  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const ClassificationReport& report, std::string spec_echo,
                           std::vector<std::string> generator_names, std::uint64_t runtime_ms);

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
/// Inverse of render_json; the round trip is lossless.
ReportDocument report_from_json(std::string_view json_text);

}  // namespace amalgam
