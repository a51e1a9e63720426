#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphtask/answer.hpp"

// Type-directed normalization of a raw boxed answer into an Answer value.
// The accepted grammar (documented in the README) covers the forms models
// actually produce: LaTeX fractions, plain fractions, bracketed or bare
// integer lists, parenthesized edge pairs, and `k: v` / `k -> v` mappings.
// parse_answer returns nullopt instead of throwing; a failed parse is a
// zero-reward outcome, not an error.

namespace graphtask {
namespace parsing {

inline void trim(std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
}

// Strips repeated layers of surrounding markup: math delimiters, quotes,
// \text{...} wrappers, trailing periods.
inline std::string strip_markup(std::string s) {
  for (;;) {
    trim(s);
    bool changed = false;
    auto wrapped_by = [&](std::string_view open, std::string_view close) {
      return s.size() >= open.size() + close.size() &&
             s.compare(0, open.size(), open) == 0 &&
             s.compare(s.size() - close.size(), close.size(), close) == 0;
    };
    for (auto [open, close] : {std::pair<std::string_view, std::string_view>{"$$", "$$"},
                               {"$", "$"},
                               {"\\(", "\\)"},
                               {"\\[", "\\]"},
                               {"`", "`"},
                               {"\"", "\""},
                               {"'", "'"}}) {
      if (wrapped_by(open, close)) {
        s = s.substr(open.size(), s.size() - open.size() - close.size());
        changed = true;
        break;
      }
    }
    if (!changed && s.size() > 7 && s.compare(0, 6, "\\text{") == 0 && s.back() == '}') {
      s = s.substr(6, s.size() - 7);
      changed = true;
    }
    if (!changed && !s.empty() && s.back() == '.') {
      s.pop_back();
      changed = true;
    }
    if (!changed) return s;
  }
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::optional<double> parse_plain_number(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Numbers in any of the accepted shapes: 0.5, 1/2, \frac{1}{2}, \dfrac{1}{2}.
inline std::optional<double> parse_number(const std::string& raw) {
  std::string s = strip_markup(raw);
  if (s.empty()) return std::nullopt;
  bool negate = false;
  while (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') negate = !negate;
    s.erase(s.begin());
    trim(s);
  }
  for (std::string_view frac : {std::string_view("\\frac"), std::string_view("\\dfrac"),
                                std::string_view("\\tfrac")}) {
    if (s.size() > frac.size() && s.compare(0, frac.size(), frac) == 0) {
      std::size_t i = frac.size();
      auto read_group = [&]() -> std::optional<std::string> {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || s[i] != '{') return std::nullopt;
        int depth = 1;
        std::string group;
        ++i;
        while (i < s.size() && depth > 0) {
          if (s[i] == '{') ++depth;
          if (s[i] == '}') {
            --depth;
            if (depth == 0) break;
          }
          group += s[i++];
        }
        if (depth != 0) return std::nullopt;
        ++i;
        return group;
      };
      auto num = read_group();
      auto den = read_group();
      if (!num || !den) return std::nullopt;
      auto a = parse_number(*num);
      auto b = parse_number(*den);
      if (!a || !b || *b == 0.0) return std::nullopt;
      double v = *a / *b;
      return negate ? -v : v;
    }
  }
  // Plain fraction a/b.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto a = parse_plain_number(std::string_view(s).substr(0, slash));
    auto b = parse_plain_number(std::string_view(s).substr(slash + 1));
    if (!a || !b || *b == 0.0) return std::nullopt;
    double v = *a / *b;
    return negate ? -v : v;
  }
  auto v = parse_plain_number(s);
  if (!v) return std::nullopt;
  return negate ? -*v : *v;
}

inline std::optional<std::vector<int>> parse_int_list(const std::string& raw) {
  std::string s = strip_markup(raw);
  if (!s.empty() && (s.front() == '[' || s.front() == '{' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : s.front() == '{' ? '}' : ')';
    if (s.back() != close) return std::nullopt;
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    if (s[i] == '+' || s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
    if (ec != std::errc() || ptr != s.data() + i) return std::nullopt;
    out.push_back(value);
  }
  return out;
}

inline std::optional<Answer::EdgeSet> parse_edge_pairs(const std::string& raw) {
  std::string s = strip_markup(raw);
  if (!s.empty() && (s.front() == '[' || s.front() == '{') ) {
    char close = s.front() == '[' ? ']' : '}';
    if (s.back() != close) return std::nullopt;
    s = s.substr(1, s.size() - 2);
  }
  Answer::EdgeSet out;
  std::size_t i = 0;
  auto skip_sep = [&]() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
  };
  skip_sep();
  while (i < s.size()) {
    if (s[i] != '(') return std::nullopt;
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) return std::nullopt;
    auto pair = parse_int_list(s.substr(i + 1, close - i - 1));
    if (!pair || pair->size() != 2) return std::nullopt;
    out.emplace_back((*pair)[0], (*pair)[1]);
    i = close + 1;
    skip_sep();
  }
  return out;
}

inline std::optional<Answer::NodeMapping> parse_mapping(const std::string& raw) {
  std::string s = strip_markup(raw);
  if (!s.empty() && (s.front() == '{' || s.front() == '[')) {
    char close = s.front() == '{' ? '}' : ']';
    if (s.back() != close) return std::nullopt;
    s = s.substr(1, s.size() - 2);
  }
  Answer::NodeMapping out;
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&]() -> std::optional<int> {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
    if (ec != std::errc() || ptr != s.data() + i) return std::nullopt;
    return value;
  };
  skip_ws();
  while (i < s.size()) {
    auto key = read_int();
    if (!key) return std::nullopt;
    skip_ws();
    // "k: v", "k -> v", and "k = v" all mean the same pair.
    if (i < s.size() && s[i] == ':') {
      ++i;
    } else if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
      i += 2;
    } else if (i < s.size() && s[i] == '=') {
      ++i;
    } else {
      return std::nullopt;
    }
    auto value = read_int();
    if (!value) return std::nullopt;
    if (out.count(*key)) return std::nullopt;  // duplicate key
    out[*key] = *value;
    skip_ws();
    if (i < s.size()) {
      if (s[i] != ',' && s[i] != ';') return std::nullopt;
      ++i;
      skip_ws();
    }
  }
  return out;
}

}  // namespace parsing

// Parses a raw boxed answer under the expected type. nullopt = parse failure
// (scored as reward 0 with parse_failed diagnostics downstream).
inline std::optional<Answer> parse_answer(const std::string& raw, AnswerType expected) {
  using namespace parsing;
  switch (expected) {
    case AnswerType::Boolean: {
      std::string s = lower(strip_markup(raw));
      if (s == "true" || s == "yes") return Answer::boolean(true);
      if (s == "false" || s == "no") return Answer::boolean(false);
      return std::nullopt;
    }
    case AnswerType::Integer: {
      auto v = parse_number(raw);
      if (!v || !std::isfinite(*v)) return std::nullopt;
      double rounded = std::round(*v);
      if (std::abs(*v - rounded) > 1e-9) return std::nullopt;
      return Answer::integer(static_cast<long long>(rounded));
    }
    case AnswerType::Float: {
      auto v = parse_number(raw);
      if (!v || !std::isfinite(*v)) return std::nullopt;
      return Answer::real(*v);
    }
    case AnswerType::NodeList: {
      auto v = parse_int_list(raw);
      if (!v) return std::nullopt;
      return Answer::node_list(std::move(*v));
    }
    case AnswerType::NodeSet: {
      auto v = parse_int_list(raw);
      if (!v) return std::nullopt;
      return Answer::node_set(std::move(*v));
    }
    case AnswerType::EdgeSet: {
      auto v = parse_edge_pairs(raw);
      if (!v) return std::nullopt;
      return Answer::edge_set(std::move(*v));
    }
    case AnswerType::NodeMapping: {
      auto v = parse_mapping(raw);
      if (!v) return std::nullopt;
      return Answer::node_mapping(std::move(*v));
    }
  }
  return std::nullopt;
}

}  // namespace graphtask
