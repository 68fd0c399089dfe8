#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace janus {

/// Cardinality range. An absent max means "unbounded".
struct Occurrence {
  std::uint32_t min = 1;
  std::optional<std::uint32_t> max = 1;

  bool unbounded() const { return !max.has_value(); }

  /// Widest range covering both inputs.
  static Occurrence merged(const Occurrence& a, const Occurrence& b) {
    Occurrence out;
    out.min = a.min < b.min ? a.min : b.min;
    if (a.unbounded() || b.unbounded())
      out.max = std::nullopt;
    else
      out.max = *a.max > *b.max ? *a.max : *b.max;
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

}  // namespace janus
