// Mixed-radix indexing over tuples of small discrete variables.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace repairc {

// Number of joint states of a tuple with the given cardinalities.
inline std::int64_t joint_size(std::span<const int> cards) {
  std::int64_t n = 1;
  for (int c : cards) n *= c;
  return n;
}

// Row-major rank of a value tuple (last index varies fastest).
inline std::int64_t ravel(std::span<const int> cards, std::span<const int> values) {
  std::int64_t r = 0;
  for (std::size_t k = 0; k < cards.size(); ++k) r = r * cards[k] + values[k];
  return r;
}

inline void unravel(std::span<const int> cards, std::int64_t rank, std::span<int> out) {
  for (std::size_t k = cards.size(); k-- > 0;) {
    out[k] = static_cast<int>(rank % cards[k]);
    rank /= cards[k];
  }
}

// Advances `values` to the next tuple in row-major order; false after the last.
inline bool next_tuple(std::span<const int> cards, std::span<int> values) {
  for (std::size_t k = cards.size(); k-- > 0;) {
    if (++values[k] < cards[k]) return true;
    values[k] = 0;
  }
  return false;
}

}  // namespace repairc
