#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace graphtask {

// Extracts the content of the last \boxed{...} in a response, handling
// nested braces. Returns nullopt when no box exists or the braces never
// balance. Total over arbitrary byte strings.
inline std::optional<std::string> extract_boxed(std::string_view response) {
  constexpr std::string_view kMacro = "\\boxed{";
  std::size_t pos = response.rfind(kMacro);
  if (pos == std::string_view::npos) return std::nullopt;
  std::size_t i = pos + kMacro.size();
  int depth = 1;
  std::string content;
  while (i < response.size()) {
    char c = response[i];
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (depth == 0) return content;
    }
    content += c;
    ++i;
  }
  return std::nullopt;  // ran out of input before the braces balanced
}

}  // namespace graphtask
