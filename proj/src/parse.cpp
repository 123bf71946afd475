#include "ppl/parse.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ppl/errors.hpp"

namespace ppl {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<Line> lex(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream line(raw);
    Line entry{number, {}};
    std::string token;
    while (line >> token) entry.tokens.push_back(token);
    if (!entry.tokens.empty()) lines.push_back(std::move(entry));
  }
  return lines;
}

long long parse_int(const std::string& token, int line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    parse_fail(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

void check_element_name(const std::string& name, int line) {
  if (name.empty()) parse_fail(line, "empty element name");
  for (char c : name) {
    if (c == ':' || c == '^' || c == '"' || c == '#') {
      parse_fail(line, "element name '" + name +
                           "' contains a character reserved by the word "
                           "syntax");
    }
  }
}

using Resolver = std::function<GroupPtr(const std::string&, int line)>;

/// Consumes the kindspec starting at lines[cursor] (whose tokens from
/// `offset` onward describe the kind) and any follow-up table lines.
GroupPtr parse_kind(const std::vector<Line>& lines, std::size_t& cursor,
                    std::size_t offset, const std::string& name,
                    const Resolver& resolve) {
  const Line& line = lines[cursor];
  if (offset >= line.tokens.size()) {
    parse_fail(line.number, "missing group kind");
  }
  const std::string& kind = line.tokens[offset];
  auto arg_count = [&](std::size_t want) {
    if (line.tokens.size() != offset + 1 + want) {
      parse_fail(line.number, "kind '" + kind + "' takes " +
                                  std::to_string(want) + " argument(s)");
    }
  };
  ++cursor;
  if (kind == "cyclic") {
    arg_count(1);
    return make_cyclic(int(parse_int(line.tokens[offset + 1], line.number)));
  }
  if (kind == "dihedral") {
    arg_count(1);
    return make_dihedral(int(parse_int(line.tokens[offset + 1], line.number)));
  }
  if (kind == "sym") {
    arg_count(1);
    return make_symmetric(
        int(parse_int(line.tokens[offset + 1], line.number)));
  }
  if (kind == "product") {
    arg_count(2);
    GroupPtr a = resolve(line.tokens[offset + 1], line.number);
    GroupPtr b = resolve(line.tokens[offset + 2], line.number);
    return make_direct_product(a, b);
  }
  if (kind == "table") {
    arg_count(0);
    if (cursor >= lines.size() || lines[cursor].tokens[0] != "elements") {
      parse_fail(line.number, "'table' must be followed by an 'elements' line");
    }
    const Line& header = lines[cursor];
    std::vector<std::string> names(header.tokens.begin() + 1,
                                   header.tokens.end());
    if (names.empty()) parse_fail(header.number, "empty element list");
    std::map<std::string, Elt> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      check_element_name(names[i], header.number);
      if (!index.emplace(names[i], Elt(i)).second) {
        parse_fail(header.number, "duplicate element name '" + names[i] + "'");
      }
    }
    ++cursor;
    const std::size_t k = names.size();
    std::vector<Elt> table(k * k, 0);
    std::vector<bool> seen(k, false);
    for (std::size_t r = 0; r < k; ++r) {
      if (cursor >= lines.size() || lines[cursor].tokens[0] != "row") {
        parse_fail(cursor < lines.size() ? lines[cursor].number : line.number,
                   "expected " + std::to_string(k) + " 'row' lines");
      }
      const Line& row = lines[cursor];
      ++cursor;
      if (row.tokens.size() != k + 2) {
        parse_fail(row.number, "'row' needs 'row <element>:' plus " +
                                   std::to_string(k) + " entries");
      }
      std::string key = row.tokens[1];
      if (key.empty() || key.back() != ':') {
        parse_fail(row.number, "expected 'row <element>:' with a colon");
      }
      key.pop_back();
      auto key_it = index.find(key);
      if (key_it == index.end()) {
        parse_fail(row.number, "unknown row element '" + key + "'");
      }
      const Elt x = key_it->second;
      if (seen[x]) parse_fail(row.number, "duplicate row for '" + key + "'");
      seen[x] = true;
      for (std::size_t y = 0; y < k; ++y) {
        auto it = index.find(row.tokens[y + 2]);
        if (it == index.end()) {
          parse_fail(row.number,
                     "unknown element '" + row.tokens[y + 2] + "' in row");
        }
        table[std::size_t(x) * k + y] = it->second;
      }
    }
    return FiniteGroup::from_table(name, std::move(names), std::move(table));
  }
  parse_fail(line.number, "unknown group kind '" + kind + "'");
}

}  // namespace

GroupPtr parse_group_text(const std::string& text, const std::string& name) {
  std::vector<Line> lines = lex(text);
  if (lines.empty()) {
    fail(ErrorCode::ParseError, "empty group description");
  }
  if (lines[0].tokens[0] != "kind") {
    parse_fail(lines[0].number, "group description must start with 'kind'");
  }
  std::size_t cursor = 0;
  Resolver no_refs = [](const std::string& ref, int line) -> GroupPtr {
    parse_fail(line, "named group reference '" + ref +
                         "' is only available inside a product file");
  };
  GroupPtr g = parse_kind(lines, cursor, 1, name, no_refs);
  if (cursor != lines.size()) {
    parse_fail(lines[cursor].number, "unexpected content after the group");
  }
  return g;
}

FactorFamily parse_product_text(const std::string& text,
                                const std::filesystem::path& base_dir) {
  std::vector<Line> lines = lex(text);
  std::optional<long long> n;
  std::optional<bool> strict;
  std::vector<FactorInfo> factors;
  std::map<std::string, GroupPtr> named;

  Resolver resolve = [&](const std::string& ref, int line) -> GroupPtr {
    auto it = named.find(ref);
    if (it == named.end()) {
      parse_fail(line, "unknown group name '" + ref + "'");
    }
    return it->second;
  };
  auto declare = [&](const std::string& name, const GroupPtr& g, int line) {
    if (!named.emplace(name, g).second) {
      parse_fail(line, "duplicate group name '" + name + "'");
    }
  };

  std::size_t cursor = 0;
  while (cursor < lines.size()) {
    const Line& line = lines[cursor];
    const std::string& directive = line.tokens[0];
    if (directive == "n") {
      if (line.tokens.size() != 2) parse_fail(line.number, "'n' takes one value");
      if (n) parse_fail(line.number, "duplicate 'n'");
      n = parse_int(line.tokens[1], line.number);
      ++cursor;
    } else if (directive == "mode") {
      if (line.tokens.size() != 2 ||
          (line.tokens[1] != "strict" && line.tokens[1] != "lenient")) {
        parse_fail(line.number, "'mode' must be strict or lenient");
      }
      if (strict) parse_fail(line.number, "duplicate 'mode'");
      strict = line.tokens[1] == "strict";
      ++cursor;
    } else if (directive == "group" || directive == "factor") {
      if (line.tokens.size() < 3) {
        parse_fail(line.number,
                   "'" + directive + "' needs a name and a group kind");
      }
      const std::string& name = line.tokens[1];
      GroupPtr g;
      if (line.tokens[2] == "file") {
        if (line.tokens.size() != 4) {
          parse_fail(line.number, "'file' takes one path");
        }
        const std::filesystem::path path = base_dir / line.tokens[3];
        std::ifstream in(path);
        if (!in) {
          parse_fail(line.number,
                     "cannot open group file '" + path.string() + "'");
        }
        std::ostringstream contents;
        contents << in.rdbuf();
        g = parse_group_text(contents.str(), name);
        ++cursor;
      } else {
        g = parse_kind(lines, cursor, 2, name, resolve);
      }
      declare(name, g, line.number);
      if (directive == "factor") factors.push_back(FactorInfo{name, g});
    } else {
      parse_fail(line.number, "unknown directive '" + directive + "'");
    }
  }

  if (!n) fail(ErrorCode::ParseError, "missing 'n' line");
  if (factors.size() < 2) {
    fail(ErrorCode::ParseError, "a product needs at least 2 'factor' lines");
  }
  return FactorFamily(std::move(factors), *n, strict.value_or(true));
}

FactorFamily parse_product_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::ParseError,
         "cannot open product file '" + path.string() + "'");
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_product_text(contents.str(),
                            path.has_parent_path() ? path.parent_path()
                                                   : std::filesystem::path("."));
}

}  // namespace ppl
