#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "deltamix/timeset.hpp"

namespace deltamix {

struct Rational {
  long long num = 0, den = 1;
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  double value() const { return double(num) / double(den); }
  std::string text() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  bool operator==(const Rational&) const = default;
};

// prefix-ratio report: value at the window, min/max over the tail
// (window/2, window] as liminf/limsup proxies
struct DensityReport {
  Rational value;
  Rational lower;  // tail prefix minimum
  Rational upper;  // tail prefix maximum
  int window = 0;
  std::string text() const {
    return "window " + std::to_string(window) + " value " + value.text() +
           " lower " + lower.text() + " upper " + upper.text();
  }
};

// F as a sorted set of non-negative integers; ratio(n) = |F ∩ [0,n)| / n
DensityReport density_bounds(const std::vector<int>& f, int window);
DensityReport density_bounds(const TimeSet& f, int window);

// smallest (a, n) in lexicographic order with {a, a+n, ..., a+(d-1)n} ⊆ f
std::optional<std::pair<int, int>> find_ap(const std::vector<int>& f, int d);

}  // namespace deltamix
