#pragma once

#include <cstdint>

namespace twisted_h1 {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Upper bound on the size of any explicitly enumerated set. Reads
/// TWISTED_H1_ENUM_CAP on every call; falls back to the default when the
/// variable is unset or not a positive integer.
std::uint64_t enumeration_cap();

}  // namespace twisted_h1
