#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "graphtask/errors.hpp"

namespace graphtask {

enum class AnswerType {
  Boolean,
  Integer,
  Float,
  NodeList,
  NodeSet,
  EdgeSet,
  NodeMapping,
};

inline const char* answer_type_name(AnswerType t) {
  switch (t) {
    case AnswerType::Boolean: return "boolean";
    case AnswerType::Integer: return "integer";
    case AnswerType::Float: return "float";
    case AnswerType::NodeList: return "node_list";
    case AnswerType::NodeSet: return "node_set";
    case AnswerType::EdgeSet: return "edge_set";
    case AnswerType::NodeMapping: return "node_mapping";
  }
  return "?";
}

inline AnswerType answer_type_from_name(const std::string& s) {
  if (s == "boolean") return AnswerType::Boolean;
  if (s == "integer") return AnswerType::Integer;
  if (s == "float") return AnswerType::Float;
  if (s == "node_list") return AnswerType::NodeList;
  if (s == "node_set") return AnswerType::NodeSet;
  if (s == "edge_set") return AnswerType::EdgeSet;
  if (s == "node_mapping") return AnswerType::NodeMapping;
  throw DomainError("unknown answer type: " + s);
}

// One task answer. Sets are kept sorted and deduplicated, edge pairs
// canonicalized with u < v, so equality is plain field comparison.
struct Answer {
  using NodeList = std::vector<int>;
  using NodeSet = std::vector<int>;                    // sorted unique
  using EdgeSet = std::vector<std::pair<int, int>>;    // sorted, u < v
  using NodeMapping = std::map<int, int>;

  std::variant<bool, long long, double, NodeList, NodeSet, EdgeSet, NodeMapping> value;
  AnswerType type = AnswerType::Boolean;

  static Answer boolean(bool b) { return {decltype(value)(std::in_place_index<0>, b), AnswerType::Boolean}; }
  static Answer integer(long long i) { return {decltype(value)(std::in_place_index<1>, i), AnswerType::Integer}; }
  static Answer real(double x) { return {decltype(value)(std::in_place_index<2>, x), AnswerType::Float}; }
  static Answer node_list(NodeList v) {
    return {decltype(value)(std::in_place_index<3>, std::move(v)), AnswerType::NodeList};
  }
  static Answer node_set(NodeSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return {decltype(value)(std::in_place_index<4>, std::move(v)), AnswerType::NodeSet};
  }
  static Answer edge_set(EdgeSet v) {
    for (auto& [u, w] : v)
      if (u > w) std::swap(u, w);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return {decltype(value)(std::in_place_index<5>, std::move(v)), AnswerType::EdgeSet};
  }
  static Answer node_mapping(NodeMapping m) {
    return {decltype(value)(std::in_place_index<6>, std::move(m)), AnswerType::NodeMapping};
  }

  bool as_bool() const { return std::get<0>(value); }
  long long as_int() const { return std::get<1>(value); }
  double as_float() const { return std::get<2>(value); }
  const NodeList& as_node_list() const { return std::get<3>(value); }
  const NodeSet& as_node_set() const { return std::get<4>(value); }
  const EdgeSet& as_edge_set() const { return std::get<5>(value); }
  const NodeMapping& as_node_mapping() const { return std::get<6>(value); }
};

// Fixed 4-decimal float formatting, locale-independent. Gold floats are
// published in this form and compared at 1e-4 absolute tolerance.
inline std::string format_float_4dp(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 4);
  if (ec != std::errc()) throw DomainError("float formatting failed");
  return std::string(buf, ptr);
}

// Canonical text form, the exact syntax the prompt asks the model for.
// serialize(a) always parses back to an equal Answer.
inline std::string serialize_answer(const Answer& a) {
  switch (a.type) {
    case AnswerType::Boolean:
      return a.as_bool() ? "True" : "False";
    case AnswerType::Integer:
      return std::to_string(a.as_int());
    case AnswerType::Float:
      return format_float_4dp(a.as_float());
    case AnswerType::NodeList:
    case AnswerType::NodeSet: {
      const auto& v = a.type == AnswerType::NodeList ? a.as_node_list() : a.as_node_set();
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
      }
      out += "]";
      return out;
    }
    case AnswerType::EdgeSet: {
      std::string out = "[";
      const auto& v = a.as_edge_set();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::to_string(v[i].first) + ", " + std::to_string(v[i].second) + ")";
      }
      out += "]";
      return out;
    }
    case AnswerType::NodeMapping: {
      std::string out = "{";
      bool first = true;
      for (const auto& [k, v] : a.as_node_mapping()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(k) + ": " + std::to_string(v);
      }
      out += "}";
      return out;
    }
  }
  throw DomainError("unreachable answer type");
}

}  // namespace graphtask
