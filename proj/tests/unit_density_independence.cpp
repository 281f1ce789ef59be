#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "deltamix/density.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/independence.hpp"

using namespace deltamix;

namespace {

SubshiftSpec full2() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 1}}, "full2");
}
SubshiftSpec golden() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
}

// independent counting oracle for the block set {n : 4^k <= n < 2*4^k}
long long blocks_below(long long n) {
  long long count = 0;
  for (long long p = 1; p < n; p *= 4)
    count += std::min(n, 2 * p) - p;
  return count;
}

}  // namespace

TEST_CASE("density of the even numbers") {
  std::vector<int> evens;
  for (int n = 0; n < 1000; n += 2) evens.push_back(n);
  auto rep = density_bounds(evens, 1000);
  CHECK(rep.value == Rational{1, 2});
  CHECK(rep.lower == Rational{1, 2});
  // odd prefixes overshoot by exactly one element
  CHECK(rep.upper.value() <= 0.5 + 1.0 / 500);
  CHECK(rep.lower.value() <= rep.value.value());
  CHECK(rep.value.value() <= rep.upper.value());
}

TEST_CASE("density of dyadic blocks oscillates") {
  std::vector<int> f;
  for (int n = 0; n < 1024; ++n) {
    bool in = false;
    for (long long p = 1; p <= n; p *= 4)
      if (n < 2 * p) in = true;
    if (in) f.push_back(n);
  }
  // frozen expected values from the explicit block count
  CHECK(blocks_below(1024) == 341);
  auto rep = density_bounds(f, 1024);
  CHECK(rep.value == Rational{341, 1024});
  CHECK(rep.lower == Rational{341, 1024});   // minimum right at the window
  CHECK(rep.upper == Rational{341, 513});    // maximum right after the tail starts
  CHECK(rep.lower.value() <= 1.0 / 3);
  CHECK(rep.upper.value() >= 0.66);
}

TEST_CASE("density of the empty set") {
  auto rep = density_bounds(std::vector<int>{}, 100);
  CHECK(rep.value == Rational{0, 1});
  CHECK(rep.upper == Rational{0, 1});
}

TEST_CASE("find_ap on the stated examples") {
  CHECK(find_ap({1, 2, 3, 5, 7, 9}, 3) == std::make_pair(1, 1));
  CHECK_FALSE(find_ap({1, 2, 4, 8, 16}, 3).has_value());
  CHECK_FALSE(find_ap({5}, 2).has_value());
  CHECK(find_ap({0, 4, 8, 12}, 4) == std::make_pair(0, 4));
  CHECK_THROWS_AS(find_ap({1, 2}, 1), InvalidArgument);
}

TEST_CASE("find_ap cross-checked exhaustively on small sets") {
  // every subset of {0..7}, all lengths up to 4
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<int> f;
    for (int b = 0; b < 8; ++b)
      if (mask & (1 << b)) f.push_back(b);
    for (int d = 2; d <= 4; ++d) {
      auto got = find_ap(f, d);
      // reference: scan all (start, gap) pairs directly
      std::optional<std::pair<int, int>> expect;
      std::set<int> s(f.begin(), f.end());
      for (int a : f) {
        for (int n = 1; n <= 8 && !expect; ++n) {
          bool ok = true;
          for (int t = 0; t < d; ++t)
            if (!s.count(a + t * n)) { ok = false; break; }
          if (ok) expect = std::make_pair(a, n);
        }
        if (expect) break;
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("independence check on the stock examples") {
  auto res = independence_check(full2(),
                                {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                                {0, 1, 2});
  REQUIRE(res.ok());
  CHECK(res.certificate->witnesses.size() == 8);
  CHECK(res.certificate->covers_all_selectors());

  res = independence_check(golden(),
                           {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                           {0, 1});
  REQUIRE_FALSE(res.ok());
  CHECK(res.failure->selector == Selector{2, 2});  // forces "11"

  res = independence_check(golden(),
                           {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                           {0, 2});
  REQUIRE(res.ok());
  CHECK(res.certificate->witnesses.size() == 4);

  CHECK_THROWS_AS(independence_check(full2(),
                                     {CylinderUnion::parse("0"),
                                      CylinderUnion::parse("1")},
                                     {0, 1, 2}, 4),
                  CapExceeded);
}

TEST_CASE("witnesses replay") {
  auto res = independence_check(golden(),
                                {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                                {0, 2, 4});
  REQUIRE(res.ok());
  for (const auto& [s, w] : res.certificate->witnesses)
    CHECK(replay_independence_witness(golden(), *res.certificate, s, w));
}

TEST_CASE("greedy extension") {
  auto ext = independence_extend(full2(),
                                 {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                                 {}, 20, 5);
  CHECK(ext.certificate.J == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(ext.density.value == Rational{1, 4});  // 5 of 20

  // golden value for the golden-mean pair: gaps of two
  ext = independence_extend(golden(),
                            {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                            {}, 20, 4);
  CHECK(ext.certificate.J == std::vector<int>{0, 2, 4, 6});

  CHECK_THROWS_AS(independence_extend(full2(),
                                      {CylinderUnion::parse("0"),
                                       CylinderUnion::parse("1")},
                                      {}, 20, 13),
                  CapExceeded);
}

TEST_CASE("hereditary and translation properties") {
  auto ext = independence_extend(golden(),
                                 {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                                 {}, 24, 5);
  const auto& J = ext.certificate.J;
  REQUIRE(J.size() == 5);
  // every subset obtained by dropping one or two elements stays certified
  for (size_t drop = 0; drop < J.size(); ++drop) {
    std::vector<int> sub;
    for (size_t i = 0; i < J.size(); ++i)
      if (i != drop) sub.push_back(J[i]);
    CHECK(independence_check(golden(), ext.certificate.tuple, sub).ok());
    for (size_t drop2 = drop + 1; drop2 < J.size(); ++drop2) {
      std::vector<int> sub2;
      for (size_t i = 0; i < J.size(); ++i)
        if (i != drop && i != drop2) sub2.push_back(J[i]);
      CHECK(independence_check(golden(), ext.certificate.tuple, sub2).ok());
    }
  }
  // translation to base zero
  std::vector<int> shifted = {2, 4, 8};
  REQUIRE(independence_check(golden(), ext.certificate.tuple, shifted).ok());
  std::vector<int> translated = {0, 2, 6};
  CHECK(independence_check(golden(), ext.certificate.tuple, translated).ok());
}

TEST_CASE("split tuple") {
  // full shift: either half keeps the full J
  auto res = split_tuple(full2(),
                         {CylinderUnion::parse("0,1"), CylinderUnion::parse("0")},
                         CylinderUnion::parse("0"), CylinderUnion::parse("1"),
                         {0, 1});
  CHECK(res.chosen == 1);
  CHECK(res.certificate.J == std::vector<int>{0, 1});

  // golden mean: split {01,10} over the pair with rest ([0])
  res = split_tuple(golden(),
                    {CylinderUnion::parse("01,10"), CylinderUnion::parse("0")},
                    CylinderUnion::parse("01"), CylinderUnion::parse("10"),
                    {0, 2});
  CHECK(res.chosen == 1);
  CHECK(res.certificate.J == std::vector<int>{0, 2});
  // the returned certificate re-validates
  auto recheck = independence_check(golden(), res.certificate.tuple,
                                    res.certificate.J);
  CHECK(recheck.ok());

  // degenerate split: first half is the whole set
  res = split_tuple(full2(),
                    {CylinderUnion::parse("0"), CylinderUnion::parse("1")},
                    CylinderUnion::parse("0"), CylinderUnion::parse("11"),
                    {0, 1});
  CHECK(res.chosen == 1);
}
