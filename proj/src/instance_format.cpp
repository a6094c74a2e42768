#include "mgk/instance_format.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool valid_name(std::string_view s) {
  return !s.empty() && s.find_first_of(":,#") == std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  MultiGroupSpace run() {
    if (lines_.empty()) throw ParseError(1, 1, "no universe declared");
    parse_elements(lines_[0]);
    std::size_t i = 1;
    std::vector<FiniteGroup> groups;
    while (i < lines_.size()) groups.push_back(parse_group(i));
    if (groups.empty()) throw ParseError(lines_[0].number, 1, "no groups declared");
    check_orphans(groups);
    return MultiGroupSpace(names_, std::move(groups));
  }

 private:
  [[noreturn]] static void fail(const Line& line, const Token& tok, const std::string& msg) {
    throw ParseError(line.number, tok.column, msg);
  }

  // Splits "key:" (optionally "key" ":") off the front of the line.
  static std::optional<std::string> key_of(const Line& line, std::size_t& first_value) {
    const auto& t = line.tokens;
    if (t[0].text.size() > 1 && t[0].text.back() == ':') {
      first_value = 1;
      return t[0].text.substr(0, t[0].text.size() - 1);
    }
    if (t.size() > 1 && t[1].text == ":") {
      first_value = 2;
      return t[0].text;
    }
    return std::nullopt;
  }

  void parse_elements(const Line& line) {
    std::size_t first = 0;
    auto key = key_of(line, first);
    if (!key || *key != "elements") fail(line, line.tokens[0], "no universe declared");
    if (first == line.tokens.size()) fail(line, line.tokens[0], "universe is empty");
    for (std::size_t k = first; k < line.tokens.size(); ++k) {
      const auto& tok = line.tokens[k];
      if (!valid_name(tok.text)) fail(line, tok, "invalid element name '" + tok.text + "'");
      if (ids_.count(tok.text)) fail(line, tok, "duplicate element '" + tok.text + "'");
      ids_.emplace(tok.text, ElementId(static_cast<std::uint32_t>(names_.size())));
      names_.push_back(tok.text);
      columns_.push_back(tok.column);
    }
    elements_line_ = line.number;
  }

  ElementId lookup(const Line& line, const Token& tok, const char* where) const {
    auto it = ids_.find(tok.text);
    if (it == ids_.end()) fail(line, tok, "unknown element '" + tok.text + "' in " + where);
    return it->second;
  }

  FiniteGroup parse_group(std::size_t& i) {
    const Line& header = lines_[i];
    std::string op;
    const auto& t = header.tokens;
    if (t[0].text != "group" || t.size() < 2) fail(header, t[0], "expected 'group <op>:'");
    if (t.size() == 2 && t[1].text.size() > 1 && t[1].text.back() == ':') {
      op = t[1].text.substr(0, t[1].text.size() - 1);
    } else if (t.size() == 3 && t[2].text == ":") {
      op = t[1].text;
    } else {
      fail(header, t[1], "expected 'group <op>:'");
    }
    if (!valid_name(op)) fail(header, t[1], "invalid operation id '" + op + "'");
    for (const auto& seen : ops_)
      if (seen == op) fail(header, t[1], "duplicate operation '" + op + "'");
    ops_.push_back(op);
    ++i;

    std::vector<ElementId> carrier;
    std::optional<ElementId> identity;
    bool have_carrier = false;
    while (true) {
      if (i >= lines_.size()) fail(header, t[0], "group '" + op + "' has no table");
      const Line& line = lines_[i];
      std::size_t first = 0;
      auto key = key_of(line, first);
      if (!key) fail(line, line.tokens[0], "expected 'carrier:', 'identity:' or 'table:'");
      if (*key == "carrier") {
        if (have_carrier) fail(line, line.tokens[0], "carrier declared twice");
        have_carrier = true;
        ElementSet seen(names_.size());
        for (std::size_t k = first; k < line.tokens.size(); ++k) {
          ElementId e = lookup(line, line.tokens[k], "carrier");
          if (seen.contains(e))
            fail(line, line.tokens[k], "duplicate element '" + line.tokens[k].text + "' in carrier");
          seen.insert(e);
          carrier.push_back(e);
        }
        if (carrier.empty()) fail(line, line.tokens[0], "carrier is empty");
        ++i;
      } else if (*key == "identity") {
        if (identity) fail(line, line.tokens[0], "identity declared twice");
        if (line.tokens.size() != first + 1)
          fail(line, line.tokens[0], "identity takes exactly one element");
        identity = lookup(line, line.tokens[first], "identity");
        ++i;
      } else if (*key == "table") {
        if (!have_carrier) fail(line, line.tokens[0], "table before carrier");
        if (!identity) fail(line, line.tokens[0], "table before identity");
        if (line.tokens.size() != first) fail(line, line.tokens[first], "unexpected token after 'table:'");
        ++i;
        break;
      } else {
        fail(line, line.tokens[0], "unexpected key '" + *key + "'");
      }
    }

    const std::size_t n = carrier.size();
    std::map<ElementId, std::size_t> position;
    for (std::size_t k = 0; k < n; ++k) position.emplace(carrier[k], k);
    std::vector<ElementId> table(n * n);
    std::vector<bool> filled(n, false);
    for (std::size_t row = 1; row <= n; ++row) {
      if (i >= lines_.size() || lines_[i].tokens[0].text == "group")
        throw ParseError(i < lines_.size() ? lines_[i].number : lines_.back().number, 1,
                         "table of '" + op + "' has " + std::to_string(row - 1) +
                             " rows, expected " + std::to_string(n));
      const Line& line = lines_[i++];
      std::size_t first = 0;
      auto label = key_of(line, first);
      if (!label) fail(line, line.tokens[0], "table row " + std::to_string(row) + " has no label");
      Token label_tok{*label, line.tokens[0].column};
      ElementId left = lookup(line, label_tok, "table row label");
      auto it = position.find(left);
      if (it == position.end())
        fail(line, label_tok, "row label '" + *label + "' is not in the carrier");
      if (filled[it->second]) fail(line, label_tok, "duplicate row for '" + *label + "'");
      filled[it->second] = true;
      const std::size_t arity = line.tokens.size() - first;
      if (arity != n)
        fail(line, line.tokens[0],
             "table row " + std::to_string(row) + " has " + std::to_string(arity) +
                 " entries, expected " + std::to_string(n));
      for (std::size_t k = 0; k < n; ++k)
        table[it->second * n + k] = lookup(line, line.tokens[first + k], "table");
    }
    return FiniteGroup(op, std::move(carrier), *identity, std::move(table), names_.size());
  }

  void check_orphans(const std::vector<FiniteGroup>& groups) const {
    for (std::size_t k = 0; k < names_.size(); ++k) {
      ElementId e(static_cast<std::uint32_t>(k));
      bool covered = false;
      for (const auto& g : groups) covered = covered || g.contains(e);
      if (!covered)
        throw ParseError(elements_line_, columns_[k],
                         "element '" + names_[k] + "' belongs to no carrier");
    }
  }

  std::vector<Line> lines_;
  std::vector<std::string> names_;
  std::vector<std::size_t> columns_;
  std::map<std::string, ElementId, std::less<>> ids_;
  std::vector<std::string> ops_;
  std::size_t elements_line_ = 1;
};

}  // namespace

MultiGroupSpace parse_instance(std::string_view text) { return Parser(text).run(); }

std::string serialize_instance(const MultiGroupSpace& ms) {
  std::ostringstream out;
  out << "elements:";
  ms.universe().for_each([&](ElementId e) { out << ' ' << ms.name(e); });
  out << '\n';
  for (const auto& g : ms.groups()) {
    out << "group " << g.op() << ":\n";
    out << "  carrier:";
    for (ElementId e : g.carrier()) out << ' ' << ms.name(e);
    out << "\n  identity: " << ms.name(g.identity()) << "\n  table:\n";
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
      out << "    " << ms.name(g.carrier()[i]) << ':';
      for (std::size_t j = 0; j < n; ++j) out << ' ' << ms.name(g.table()[i * n + j]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace mgk
