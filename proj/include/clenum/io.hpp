// Textual formats: instance files (vector families) and truth-table files.
//
// Instance file grammar:
//   - '#' starts a comment that runs to end of line; blank lines are skipped
//   - an optional first significant line "domain d" sets d (default 2)
//   - every other significant line is one vector, one digit per coordinate
// Duplicate vectors are dropped, keeping first-seen order.
//
// Truth-table file grammar: one or more blocks of
//   op <name> <d> <arity>
//   <input-tuple-string> <output-digit>     (exactly d^arity rows, each once)
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/operation.hpp"
#include "clenum/vector.hpp"

namespace clenum {

namespace detail {

inline std::string strip_line(const std::string& raw) {
  std::string s = raw;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline Family parse_family(std::istream& in) {
  int d = 2;
  bool saw_vector = false;
  bool saw_domain = false;
  Family family = Family::empty(d);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_line(raw);
    if (line.empty()) continue;
    if (!saw_vector && !saw_domain && line.rfind("domain", 0) == 0) {
      std::istringstream hs(line);
      std::string kw;
      long value = -1;
      hs >> kw >> value;
      std::string tail;
      if (!(hs >> tail).fail())
        throw ParseError("line " + std::to_string(lineno) + ": malformed domain header");
      if (value < 2 || value > 10)
        throw ParseError("line " + std::to_string(lineno) + ": domain size must be in [2, 10]");
      d = static_cast<int>(value);
      family = Family::empty(d);
      saw_domain = true;
      continue;
    }
    Vector v = [&] {
      try {
        return Vector::from_string(line, d);
      } catch (const SpecError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }();
    if (saw_vector && v.size() != family.n())
      throw ParseError("line " + std::to_string(lineno) + ": vector length " +
                       std::to_string(v.size()) + " differs from earlier length " +
                       std::to_string(family.n()));
    family.insert(v);
    saw_vector = true;
  }
  return family;
}

inline Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

inline void render_family(const Family& family, std::ostream& out) {
  if (family.domain() != 2) out << "domain " << family.domain() << "\n";
  for (const auto& v : family) out << v.to_string() << "\n";
}

inline std::string render_family(const Family& family) {
  std::ostringstream out;
  render_family(family, out);
  return out.str();
}

inline std::vector<Operation> parse_operations(std::istream& in) {
  std::vector<Operation> result;
  std::string raw;
  int lineno = 0;

  auto read_significant = [&](std::string& out_line) -> bool {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = detail::strip_line(raw);
      if (line.empty()) continue;
      out_line = line;
      return true;
    }
    return false;
  };

  std::string line;
  while (read_significant(line)) {
    std::istringstream hs(line);
    std::string kw, name;
    int d = 0, arity = 0;
    hs >> kw >> name >> d >> arity;
    if (kw != "op" || hs.fail())
      throw ParseError("line " + std::to_string(lineno) + ": expected 'op <name> <d> <arity>'");
    if (d < 2 || d > 10)
      throw ParseError("line " + std::to_string(lineno) + ": domain size must be in [2, 10]");
    if (arity < 1 || arity > 13)
      throw ParseError("line " + std::to_string(lineno) + ": arity must be in [1, 13]");
    std::size_t rows = 1;
    for (int i = 0; i < arity; ++i) rows *= static_cast<std::size_t>(d);
    std::vector<std::uint8_t> table(rows, 255);
    std::size_t filled = 0;
    while (filled < rows) {
      if (!read_significant(line))
        throw ParseError("truth table '" + name + "': expected " + std::to_string(rows) +
                         " rows, got " + std::to_string(filled));
      std::istringstream rs(line);
      std::string input;
      std::string output;
      rs >> input >> output;
      std::string tail;
      if (rs.fail() || !(rs >> tail).fail())
        throw ParseError("line " + std::to_string(lineno) + ": expected '<inputs> <output>'");
      if (static_cast<int>(input.size()) != arity)
        throw ParseError("line " + std::to_string(lineno) + ": input tuple needs " +
                         std::to_string(arity) + " digits");
      std::size_t idx = 0;
      for (char c : input) {
        if (c < '0' || c >= '0' + d)
          throw ParseError("line " + std::to_string(lineno) + ": input digit out of domain");
        idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(c - '0');
      }
      if (output.size() != 1 || output[0] < '0' || output[0] >= '0' + d)
        throw ParseError("line " + std::to_string(lineno) + ": output digit out of domain");
      if (table[idx] != 255)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate input tuple " + input);
      table[idx] = static_cast<std::uint8_t>(output[0] - '0');
      ++filled;
    }
    result.emplace_back(name, d, arity, std::move(table));
  }
  return result;
}

inline std::vector<Operation> parse_operations(const std::string& text) {
  std::istringstream in(text);
  return parse_operations(in);
}

inline void render_operation(const Operation& f, std::ostream& out) {
  out << "op " << f.name() << " " << f.domain() << " " << f.arity() << "\n";
  std::size_t rows = f.rows();
  for (std::size_t row = 0; row < rows; ++row) {
    std::string input(static_cast<std::size_t>(f.arity()), '0');
    std::size_t rest = row;
    for (int i = f.arity() - 1; i >= 0; --i) {
      input[static_cast<std::size_t>(i)] =
          static_cast<char>('0' + static_cast<int>(rest % static_cast<std::size_t>(f.domain())));
      rest /= static_cast<std::size_t>(f.domain());
    }
    out << input << " " << f.eval_index(row) << "\n";
  }
}

}  // namespace clenum
