#include "deltamix/density.hpp"

#include <algorithm>
#include <set>

#include "deltamix/errors.hpp"

namespace deltamix {

DensityReport density_bounds(const std::vector<int>& f, int window) {
  if (window < 1) throw InvalidArgument("window must be >= 1");
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] >= f[i + 1]) throw InvalidArgument("set must be sorted and unique");
  if (!f.empty() && f.front() < 0)
    throw InvalidArgument("set elements must be non-negative");

  auto less = [](const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;  // denominators positive
  };

  DensityReport rep;
  rep.window = window;
  long long count = 0;
  size_t idx = 0;
  Rational lo, hi;
  bool tail_seen = false;
  for (int n = 1; n <= window; ++n) {
    while (idx < f.size() && f[idx] < n) { ++count; ++idx; }
    if (2 * n > window) {
      Rational r{count, n};
      if (!tail_seen) { lo = r; hi = r; tail_seen = true; }
      if (less(r, lo)) lo = r;
      if (less(hi, r)) hi = r;
    }
    if (n == window) rep.value = Rational{count, n};
  }
  rep.value.reduce();
  lo.reduce();
  hi.reduce();
  rep.lower = lo;
  rep.upper = hi;
  return rep;
}

DensityReport density_bounds(const TimeSet& f, int window) {
  if (window > f.horizon)
    throw HorizonExceeded("density window exceeds the time-set horizon");
  return density_bounds(f.members, window);
}

std::optional<std::pair<int, int>> find_ap(const std::vector<int>& f, int d) {
  if (d < 2) throw InvalidArgument("progression length must be >= 2");
  std::set<int> members(f.begin(), f.end());
  if (members.empty()) return std::nullopt;
  int max = *members.rbegin();
  for (int a : members) {
    if (a + d - 1 > max) break;
    for (int n = 1; a + (d - 1) * n <= max; ++n) {
      bool ok = true;
      for (int t = 1; t < d && ok; ++t)
        if (!members.count(a + t * n)) ok = false;
      if (ok) return std::make_pair(a, n);
    }
  }
  return std::nullopt;
}

}  // namespace deltamix
