#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace hypershrink {

/// Malformed input text. line and column are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(where(line, column) + what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string where(std::size_t line, std::size_t column) {
    if (line == 0) return "";
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": ";
  }
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline Vertex vertex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned())
    throw parse_error(where + ": vertex ids must be non-negative integers", 0);
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<Vertex>::max())
    throw parse_error(where + ": vertex id " + std::to_string(v) + " is too large", 0);
  return static_cast<Vertex>(v);
}

}  // namespace detail

// -- hypergraph files -----------------------------------------------------------

/// Parses {"n": <int>, "edges": [[v, ...], ...]}. Hyperedges are sorted but
/// otherwise left as written; run validate() on the result.
inline Hypergraph parse_json_hypergraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw parse_error("invalid JSON", line, column);
  }
  if (!doc.is_object()) throw parse_error("expected a JSON object", 1, 1);
  if (!doc.contains("n") || !doc["n"].is_number_unsigned())
    throw parse_error("\"n\" must be a non-negative integer", 0);
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw parse_error("\"edges\" must be an array", 0);

  Hypergraph h;
  h.n = doc["n"].get<std::size_t>();
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& je = doc["edges"][i];
    const std::string where = "edge " + std::to_string(i);
    if (!je.is_array()) throw parse_error(where + ": expected an array of vertex ids", 0);
    Hyperedge e;
    for (const auto& jv : je) e.push_back(detail::vertex_from_json(jv, where));
    std::sort(e.begin(), e.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

/// Parses the text format: a header line "n m", then m lines of
/// space-separated vertex ids. Blank lines and lines starting with '#' are
/// skipped.
inline Hypergraph parse_text_hypergraph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] != '#') lines.emplace_back(number, line);
      start = end + 1;
    }
  }
  if (lines.empty()) throw parse_error("empty input, expected header \"n m\"", 1);

  auto read_numbers = [](const std::pair<std::size_t, std::string>& l) {
    std::vector<std::uint64_t> out;
    const std::string& s = l.second;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == ' ' || s[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t begin = i;
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("expected a non-negative integer", l.first, begin + 1);
      std::uint64_t value = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        const auto digit = static_cast<std::uint64_t>(s[i] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw parse_error("integer too large", l.first, begin + 1);
        value = value * 10 + digit;
        ++i;
      }
      if (i < s.size() && s[i] != ' ' && s[i] != '\t')
        throw parse_error("unexpected character", l.first, i + 1);
      out.push_back(value);
    }
    return out;
  };

  const auto header = read_numbers(lines.front());
  if (header.size() != 2) throw parse_error("header must be \"n m\"", lines.front().first);
  const std::size_t m = header[1];
  if (lines.size() - 1 != m)
    throw parse_error("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(lines.size() - 1),
                      lines.size() - 1 < m ? lines.back().first : lines[m + 1].first);

  Hypergraph h;
  h.n = header[0];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Hyperedge e;
    for (auto v : read_numbers(lines[i])) {
      if (v > std::numeric_limits<Vertex>::max())
        throw parse_error("vertex id too large", lines[i].first);
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

/// JSON when the first non-blank character is '{', text format otherwise.
inline Hypergraph parse_hypergraph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_hypergraph(text);
  return parse_text_hypergraph(text);
}

inline std::string to_json(const Hypergraph& h) {
  std::ostringstream out;
  out << "{\n  \"n\": " << h.n << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t j = 0; j < h.edges[i].size(); ++j) out << (j ? ", " : "") << h.edges[i][j];
    out << ']';
  }
  out << (h.edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

inline std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
  return out.str();
}

// -- demand files ---------------------------------------------------------------

/// A JSON array of non-negative integers, or whitespace-separated integers.
inline DemandFunction parse_demands(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  DemandFunction f;
  if (first != std::string_view::npos && text[first] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      throw parse_error("invalid JSON", line, column);
    }
    if (!doc.is_array()) throw parse_error("expected an array of demands", 0);
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& x = doc[i];
      if (!x.is_number_unsigned())
        throw parse_error("demand " + std::to_string(i) + " must be a non-negative integer", 0);
      f.values.push_back(x.get<std::size_t>());
    }
    return f;
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("demand \"" + token + "\" must be a non-negative integer", 0);
    f.values.push_back(std::stoull(token));
  }
  return f;
}

}  // namespace hypershrink
