#pragma once

#include <cstdint>
#include <vector>

namespace deltamix {

// Boolean square matrix over at most 64 states, one uint64 row mask each.
// Used for transition adjacency and gap reachability.
struct BitMat {
  int n = 0;
  std::vector<uint64_t> rows;

  BitMat() = default;
  explicit BitMat(int size) : n(size), rows(static_cast<size_t>(size), 0) {}

  static BitMat identity(int size) {
    BitMat m(size);
    for (int i = 0; i < size; ++i) m.rows[i] = 1ull << i;
    return m;
  }

  bool get(int i, int j) const { return (rows[i] >> j) & 1ull; }
  void set(int i, int j) { rows[i] |= 1ull << j; }

  BitMat multiply(const BitMat& other) const {
    BitMat out(n);
    for (int i = 0; i < n; ++i) {
      uint64_t row = rows[i];
      uint64_t acc = 0;
      while (row) {
        int j = __builtin_ctzll(row);
        row &= row - 1;
        acc |= other.rows[j];
      }
      out.rows[i] = acc;
    }
    return out;
  }

  // set of states reachable from `from` in one step
  uint64_t forward(uint64_t from) const {
    uint64_t acc = 0;
    while (from) {
      int i = __builtin_ctzll(from);
      from &= from - 1;
      acc |= rows[i];
    }
    return acc;
  }

  // set of states that reach some state in `to` in one step
  uint64_t backward(uint64_t to) const {
    uint64_t acc = 0;
    for (int i = 0; i < n; ++i)
      if (rows[i] & to) acc |= 1ull << i;
    return acc;
  }

  uint64_t full_mask() const {
    return n == 64 ? ~0ull : ((1ull << n) - 1);
  }
};

}  // namespace deltamix
