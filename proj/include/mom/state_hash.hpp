#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mom/signature.hpp"

namespace mom {

using StateKey = std::vector<Entry>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ key.size();
    for (Entry e : key) {
      std::uint64_t z = static_cast<std::uint64_t>(e) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
      h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mom
