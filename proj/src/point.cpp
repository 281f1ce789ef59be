#include "deltamix/point.hpp"

#include <cmath>
#include <sstream>

#include "deltamix/errors.hpp"

namespace deltamix {

PointGen PointGen::eventually_periodic(Word preperiod, Word period,
                                       long long horizon) {
  if (period.empty()) throw InvalidArgument("period word must be non-empty");
  PointGen p;
  p.kind_ = Kind::EventuallyPeriodic;
  p.pre_ = std::move(preperiod);
  p.per_ = std::move(period);
  p.horizon_ = horizon;
  return p;
}

PointGen PointGen::power_blocks(long long base, long long mult,
                                long long horizon) {
  if (base < 2 || mult < 2 || mult > base)
    throw InvalidArgument("power_blocks needs 2 <= mult <= base");
  PointGen p;
  p.kind_ = Kind::PowerBlocks;
  p.base_ = base;
  p.mult_ = mult;
  p.horizon_ = horizon;
  return p;
}

Symbol PointGen::at(long long i) const {
  if (i < 0) throw InvalidArgument("negative point index");
  if (i >= horizon_)
    throw HorizonExceeded("point index " + std::to_string(i) +
                          " beyond declared horizon");
  if (kind_ == Kind::EventuallyPeriodic) {
    if (i < pre_.size()) return pre_[static_cast<int>(i)];
    return per_[static_cast<int>((i - pre_.size()) % per_.size())];
  }
  // power blocks: 1 iff base^k <= i < mult*base^k for some k
  for (long long p = 1; p <= i; p *= base_)
    if (i < mult_ * p) return 1;
  return 0;
}

Word PointGen::window(long long start, int len) const {
  std::vector<Symbol> syms;
  syms.reserve(len);
  for (int t = 0; t < len; ++t) syms.push_back(at(start + t));
  return Word{std::move(syms)};
}

std::string PointGen::text() const {
  if (kind_ == Kind::EventuallyPeriodic)
    return "ep:" + (pre_.empty() ? std::string() : pre_.text()) + ":" + per_.text();
  return "rule:power_blocks:" + std::to_string(base_) + ":" + std::to_string(mult_);
}

PointGen PointGen::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ':')) parts.push_back(cur);
  if (parts.size() == 3 && parts[0] == "ep") {
    Word pre = parts[1].empty() ? Word() : Word::parse(parts[1]);
    return eventually_periodic(pre, Word::parse(parts[2]));
  }
  if (parts.size() == 4 && parts[0] == "rule" && parts[1] == "power_blocks")
    return power_blocks(std::stoll(parts[2]), std::stoll(parts[3]));
  throw InvalidArgument("cannot parse point description: " + text);
}

void PointGen::validate_in(const SubshiftSpec& spec, long long up_to) const {
  int c = spec.context_len() + 1;  // longest constraint window
  long long limit = std::min(up_to, horizon_);
  std::vector<Symbol> buf;
  for (long long i = 0; i < limit; ++i) {
    Symbol s = at(i);
    if (!spec.symbol_alive(s))
      throw InvalidArgument("point emits symbol outside the subshift at index " +
                            std::to_string(i));
    buf.push_back(s);
    if (static_cast<int>(buf.size()) > c) buf.erase(buf.begin());
    if (!spec.word_allowed(Word{buf}))
      throw InvalidArgument("point emits a forbidden factor ending at index " +
                            std::to_string(i));
  }
}

DyadicDistance shift_distance(const PointGen& x, const PointGen& y, long long n,
                              int r, int s, int window) {
  if (n < 0 || r < 1 || s < 1 || window < 1)
    throw InvalidArgument("shift_distance needs n >= 0, r,s >= 1, window >= 1");
  DyadicDistance d;
  d.window = window;
  for (int t = 0; t < window; ++t) {
    if (x.at(r * n + t) != y.at(s * n + t)) {
      d.zero = false;
      d.exponent = t;
      return d;
    }
  }
  d.zero = true;
  return d;
}

}  // namespace deltamix
