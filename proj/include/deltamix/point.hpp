#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "deltamix/subshift.hpp"
#include "deltamix/word.hpp"

namespace deltamix {

// Exact dyadic orbit distance 2^-exponent, or zero when two windows agree
// throughout. `window` records how far the comparison looked, so a reported
// zero means "<= 2^-window", never a claim about the infinite tail.
struct DyadicDistance {
  bool zero = true;
  int exponent = 0;
  int window = 0;

  double value() const { return zero ? 0.0 : std::exp2(-double(exponent)); }
  std::string text() const {
    if (zero) return "0";
    if (exponent == 0) return "1";
    return "2^-" + std::to_string(exponent);
  }
  // ordering by value; zero is the smallest
  bool less_than(const DyadicDistance& other) const {
    if (zero) return !other.zero;
    if (other.zero) return false;
    return exponent > other.exponent;
  }
  bool at_most_exp(int e) const { return zero || exponent >= e; }   // <= 2^-e
  bool at_least_exp(int e) const { return !zero && exponent <= e; }  // >= 2^-e
};

// A point of the shift space with symbol access up to a declared horizon.
// Either eventually periodic or one of a few built-in deterministic rules.
class PointGen {
 public:
  PointGen() : per_(Word{{0}}) {}  // the all-zero point

  static PointGen eventually_periodic(Word preperiod, Word period,
                                      long long horizon = kDefaultHorizon);
  // symbol 1 exactly on the blocks [base^k, mult*base^k), k >= 0
  static PointGen power_blocks(long long base, long long mult,
                               long long horizon = kDefaultHorizon);
  static PointGen parse(const std::string& text);  // "ep:<pre>:<per>" | "rule:power_blocks:<b>:<c>"

  Symbol at(long long i) const;
  Word window(long long start, int len) const;
  long long horizon() const { return horizon_; }
  std::string text() const;

  // every window of the prefix [0, up_to) must lie in the spec's language
  void validate_in(const SubshiftSpec& spec, long long up_to) const;

  static constexpr long long kDefaultHorizon = 1ll << 40;

 private:
  enum class Kind { EventuallyPeriodic, PowerBlocks };
  Kind kind_ = Kind::EventuallyPeriodic;
  Word pre_, per_;
  long long base_ = 0, mult_ = 0;
  long long horizon_ = kDefaultHorizon;
};

// rho(T^{rn}x, T^{sn}y) in the fixed metric 2^-(first disagreement)
DyadicDistance shift_distance(const PointGen& x, const PointGen& y, long long n,
                              int r, int s, int window);

}  // namespace deltamix
