#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace wot {

/// Opaque user identifier as it appears in the input. Never re-indexed.
using UserId = std::int64_t;

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

/// Cutoff meaning "every event".
inline constexpr Timestamp kEndOfTime = std::numeric_limits<Timestamp>::max();

enum class Layer : std::uint8_t { rewarding, punitive };

constexpr std::string_view to_string(Layer layer) {
    return layer == Layer::rewarding ? "rewarding" : "punitive";
}

}  // namespace wot
