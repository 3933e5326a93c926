#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "veritag/error.hpp"

namespace veritag {

/// Binary reliability class. The integer value is the class id used by every
/// classifier; ties resolve toward id 0.
enum class Label : int { unreliable = 0, reliable = 1 };

inline constexpr int class_id(Label l) { return static_cast<int>(l); }

inline Label label_from_id(int id) {
  if (id != 0 && id != 1) throw InvariantError("class id out of range");
  return static_cast<Label>(id);
}

inline std::string_view to_string(Label l) {
  return l == Label::reliable ? "reliable" : "unreliable";
}

inline std::optional<Label> parse_label(std::string_view s) {
  if (s == "reliable") return Label::reliable;
  if (s == "unreliable") return Label::unreliable;
  return std::nullopt;
}

}  // namespace veritag
