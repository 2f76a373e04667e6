#include "amalgam/report.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "amalgam/version.hpp"

namespace amalgam {

ReportDocument make_report(const ClassificationReport& report, std::string spec_echo,
                           std::vector<std::string> generator_names, std::uint64_t runtime_ms) {
  ReportDocument doc;
  doc.tool = kToolName;
  doc.version = kVersion;
  doc.spec = std::move(spec_echo);
  doc.group_order = report.group_order;
  doc.group_type = report.group_type;
  doc.group_generators = std::move(generator_names);
  doc.rows = report.rows;
  doc.totals_by_type = report.totals_by_type;
  doc.total = report.total;
  doc.total_normal = report.total_normal;
  doc.runtime_ms = runtime_ms;
  return doc;
}

namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i];
  }
  return out + "⟩";
}

// Column width in terminal cells, counting UTF-8 sequences as one.
std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void put(std::string& out, std::string_view cell, std::size_t width) {
  out += cell;
  std::size_t w = display_width(cell);
  for (std::size_t i = w; i < width + 2; ++i) out += ' ';
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"Isomorphism Type", "#", "Subgroups", "Normal", "Defect", "Abnormal"});
  for (const auto& row : doc.rows)
    cells.push_back({row.type, std::to_string(row.order), join_words(row.generators),
                     row.normal ? "yes" : "no",
                     row.defect >= 0 ? std::to_string(row.defect) : "-",
                     row.abnormal ? "yes" : "no"});

  std::array<std::size_t, 6> width{};
  for (const auto& r : cells)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], display_width(r[c]));

  std::string out;
  out += doc.spec + "\n";
  out += "group of order " + std::to_string(doc.group_order) + ", type " + doc.group_type;
  if (!doc.group_generators.empty()) {
    out += ", generators ";
    for (std::size_t i = 0; i < doc.group_generators.size(); ++i) {
      if (i) out += ", ";
      out += doc.group_generators[i];
    }
  }
  out += "\n\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < 6; ++c) put(line, cells[r][c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
    if (r == 0) {
      std::string rule;
      for (std::size_t c = 0; c < 6; ++c) put(rule, std::string(width[c], '-'), width[c]);
      while (!rule.empty() && rule.back() == ' ') rule.pop_back();
      out += rule + "\n";
    }
  }
  out += "\n";
  out += "by type:";
  for (const auto& [label, count] : doc.totals_by_type)
    out += " " + label + ":" + std::to_string(count);
  out += "\n";
  out += "total " + std::to_string(doc.total) + " subgroups, " + std::to_string(doc.total_normal) +
         " normal\n";
  return out;
}

std::string render_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = doc.schema_version;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  j["spec"] = doc.spec;
  j["group"] = {{"order", doc.group_order},
                {"type", doc.group_type},
                {"generators", doc.group_generators}};
  j["rows"] = nlohmann::json::array();
  for (const auto& row : doc.rows) {
    nlohmann::json r;
    r["order"] = row.order;
    r["generators"] = row.generators;
    r["type"] = row.type;
    r["normal"] = row.normal;
    if (row.defect >= 0)
      r["defect"] = row.defect;
    else
      r["defect"] = nullptr;
    r["abnormal"] = row.abnormal;
    r["methods_agree"] = row.methods_agree;
    j["rows"].push_back(std::move(r));
  }
  j["totals"] = nlohmann::json::object();
  j["totals"]["subgroups"] = doc.total;
  j["totals"]["normal"] = doc.total_normal;
  j["totals"]["by_type"] = nlohmann::json::array();
  for (const auto& [label, count] : doc.totals_by_type)
    j["totals"]["by_type"].push_back({{"type", label}, {"count", count}});
  j["runtime_ms"] = doc.runtime_ms;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  doc.spec = j.at("spec").get<std::string>();
  doc.group_order = j.at("group").at("order").get<std::uint32_t>();
  doc.group_type = j.at("group").at("type").get<std::string>();
  doc.group_generators = j.at("group").at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    ClassificationRow row;
    row.order = r.at("order").get<std::uint32_t>();
    row.generators = r.at("generators").get<std::vector<std::string>>();
    row.type = r.at("type").get<std::string>();
    row.normal = r.at("normal").get<bool>();
    row.defect = r.at("defect").is_null() ? -1 : r.at("defect").get<int>();
    row.abnormal = r.at("abnormal").get<bool>();
    row.methods_agree = r.at("methods_agree").get<bool>();
    doc.rows.push_back(std::move(row));
  }
  doc.total = j.at("totals").at("subgroups").get<std::uint32_t>();
  doc.total_normal = j.at("totals").at("normal").get<std::uint32_t>();
  for (const auto& t : j.at("totals").at("by_type"))
    doc.totals_by_type.emplace_back(t.at("type").get<std::string>(),
                                    t.at("count").get<std::uint32_t>());
  doc.runtime_ms = j.at("runtime_ms").get<std::uint64_t>();
  return doc;
}

}  // namespace amalgam
