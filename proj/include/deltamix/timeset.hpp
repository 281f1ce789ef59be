#pragma once

#include <map>
#include <string>
#include <vector>

#include "deltamix/word.hpp"

namespace deltamix {

// A finite-horizon truncation of a time set. Absence of n <= horizon is
// certified; nothing is claimed beyond the horizon.
struct TimeSet {
  int horizon = 0;
  std::vector<int> members;        // sorted, within [1, horizon]
  std::map<int, Word> witnesses;   // optional, n -> realizing word

  bool contains(int n) const {
    return std::binary_search(members.begin(), members.end(), n);
  }
  bool subset_of(const TimeSet& other) const {
    for (int n : members)
      if (n <= other.horizon && !other.contains(n)) return false;
    return true;
  }

  std::string text() const;  // stable serialization for golden tests
};

}  // namespace deltamix
