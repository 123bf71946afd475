#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppl {

/// One output line: a tag, an optional bare head token (e.g. the
/// classification name after CLASS), and ordered key=value fields.  Both
/// renderings below are generated from this structure, so the text and
/// JSON forms carry exactly the same facts.
struct ReportLine {
  std::string tag;
  std::optional<std::string> head;
  std::vector<std::pair<std::string, std::string>> fields;

  ReportLine& field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct Report {
  std::vector<ReportLine> lines;

  ReportLine& add(std::string tag) {
    lines.push_back(ReportLine{std::move(tag), std::nullopt, {}});
    return lines.back();
  }
  ReportLine& add(std::string tag, std::string head) {
    lines.push_back(ReportLine{std::move(tag), std::move(head), {}});
    return lines.back();
  }
};

/// `TAG [head] k=v ...` per line; values containing spaces, quotes,
/// backslashes, or '=' (or empty values) are double-quoted with \" and
/// \\ escapes.
std::string report_to_text(const Report& report);

/// {"lines": [{"tag": ..., "head": ..., "fields": {...}}, ...]} with field
/// order preserved.
std::string report_to_json(const Report& report);

}  // namespace ppl
