#include "ppl/report.hpp"

#include <json.hpp>

namespace ppl {

namespace {

bool needs_quoting(const std::string& value) {
  if (value.empty()) return true;
  for (char c : value) {
    if (c == ' ' || c == '"' || c == '\\' || c == '=' || c == '\t') {
      return true;
    }
  }
  return false;
}

void append_value(std::string& out, const std::string& value) {
  if (!needs_quoting(value)) {
    out += value;
    return;
  }
  out += '"';
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

}  // namespace

std::string report_to_text(const Report& report) {
  std::string out;
  for (const ReportLine& line : report.lines) {
    out += line.tag;
    if (line.head) {
      out += ' ';
      append_value(out, *line.head);
    }
    for (const auto& [key, value] : line.fields) {
      out += ' ';
      out += key;
      out += '=';
      append_value(out, value);
    }
    out += '\n';
  }
  return out;
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json lines = nlohmann::ordered_json::array();
  for (const ReportLine& line : report.lines) {
    nlohmann::ordered_json entry;
    entry["tag"] = line.tag;
    if (line.head) entry["head"] = *line.head;
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const auto& [key, value] : line.fields) fields[key] = value;
    entry["fields"] = std::move(fields);
    lines.push_back(std::move(entry));
  }
  nlohmann::ordered_json root;
  root["lines"] = std::move(lines);
  return root.dump(2) + "\n";
}

}  // namespace ppl
