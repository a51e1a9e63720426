#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphtask/errors.hpp"
#include "graphtask/graph.hpp"

namespace graphtask {

// The single wire format for graphs inside prompts and dataset records:
// "(u, v)" or "(u, v, w)" tokens separated by commas and/or whitespace,
// e.g. "(0, 1), (1, 2)". Encoding is deterministic (ascending (u, v))
// so that parse(encode(g)) == g and re-encoding is byte-stable.

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r'))
    ++i;
}

inline long long parse_int(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == start || (i == start + 1 && !(s[start] >= '0' && s[start] <= '9')))
    throw ParseError("expected an integer", start);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
  if (ec != std::errc() || ptr != s.data() + i)
    throw ParseError("invalid integer", start);
  return value;
}

inline double parse_number(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false;
  while (i < s.size() && ((s[i] >= '0' && s[i] <= '9') || s[i] == '.')) {
    if (s[i] != '.') digits = true;
    ++i;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  }
  if (!digits) throw ParseError("expected a number", start);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
  if (ec != std::errc() || ptr != s.data() + i)
    throw ParseError("invalid number", start);
  return value;
}

// Integral weights print without a decimal point; others use the shortest
// representation that round-trips.
inline std::string format_number(double x) {
  if (x == std::floor(x) && std::abs(x) < 1e15) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), static_cast<long long>(x));
    return std::string(buf, ptr);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace detail

// Parses edge-list text into a Graph. node_count is 1 + the largest node id
// mentioned (0 for empty text); duplicate edges are collapsed.
inline Graph parse_edge_list(std::string_view text, bool directed, bool weighted) {
  std::vector<Edge> edges;
  long long max_id = -1;
  std::size_t i = 0;
  detail::skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    long long u = detail::parse_int(text, i);
    detail::skip_ws(text, i);
    if (i >= text.size() || text[i] != ',') throw ParseError("expected ','", i);
    ++i;
    long long v = detail::parse_int(text, i);
    detail::skip_ws(text, i);
    double w = 1.0;
    bool has_weight = false;
    if (i < text.size() && text[i] == ',') {
      ++i;
      w = detail::parse_number(text, i);
      has_weight = true;
      detail::skip_ws(text, i);
    }
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    if (u < 0 || v < 0) throw ParseError("node ids must be non-negative", i);
    if (has_weight && !weighted)
      throw SchemaError("weight given for an unweighted graph");
    if (!has_weight && weighted)
      throw SchemaError("missing weight for a weighted graph");
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), w});
    max_id = std::max(max_id, std::max(u, v));
    // Edges are separated by a comma, whitespace, or both.
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      detail::skip_ws(text, i);
    }
  }
  return Graph(static_cast<int>(max_id + 1), std::move(edges), directed, weighted);
}

// Canonical text form: edges in ascending (u, v) order, ", " separators.
inline std::string encode_edge_list(const Graph& g) {
  std::string out;
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ", ";
    first = false;
    out += '(';
    out += std::to_string(e.u);
    out += ", ";
    out += std::to_string(e.v);
    if (g.weighted()) {
      out += ", ";
      out += detail::format_number(e.weight);
    }
    out += ')';
  }
  return out;
}

}  // namespace graphtask
