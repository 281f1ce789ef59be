#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "deltamix/entropy.hpp"
#include "deltamix/errors.hpp"

using namespace deltamix;

namespace {

SubshiftSpec full_shift(int k) {
  std::vector<std::vector<int>> rows(k, std::vector<int>(k, 1));
  return SubshiftSpec::from_matrix(k, rows, "full" + std::to_string(k));
}
SubshiftSpec golden() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
}

// independent oracle: the positive root of x^2 = x + 1 by bisection
double golden_ratio_by_bisection() {
  double lo = 1.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid * mid - mid - 1.0 > 0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("full shifts hit log k") {
  for (int k : {2, 3, 4}) {
    auto rep = sft_entropy(full_shift(k));
    CHECK(std::abs(rep.value - std::log(double(k))) <= 1e-9);
    CHECK(rep.converged);
  }
}

TEST_CASE("golden mean shift against the root oracle") {
  auto rep = sft_entropy(golden(), 1e-9);
  double expected = std::log(golden_ratio_by_bisection());
  CHECK(std::abs(rep.value - expected) <= 1e-6);
  CHECK(std::abs(rep.value - 0.481211825) <= 1e-6);
}

TEST_CASE("degenerate systems have entropy zero") {
  auto fixed = SubshiftSpec::from_matrix(1, {{1}}, "fixed-point");
  CHECK(sft_entropy(fixed).value == 0.0);

  auto cycle = SubshiftSpec::from_matrix(2, {{0, 1}, {1, 0}}, "cycle2");
  CHECK(sft_entropy(cycle).value <= 1e-12);

  CHECK_THROWS_AS(sft_entropy(golden(), 0.0), InvalidTolerance);
  CHECK_THROWS_AS(sft_entropy(golden(), -1.0), InvalidTolerance);
}

TEST_CASE("reducible specs take the largest component") {
  // 0,1 form a full 2-shift; 2 only feeds into it
  auto spec = SubshiftSpec::from_matrix(3, {{1, 1, 0}, {1, 1, 0}, {1, 1, 1}});
  auto rep = sft_entropy(spec);
  CHECK(std::abs(rep.value - std::log(2.0)) <= 1e-9);
  CHECK_FALSE(spec.validate().irreducible);
}

TEST_CASE("word count entropy") {
  auto rep = word_count_entropy(full_shift(2), 10);
  for (double h : rep.sequence) CHECK(std::abs(h - std::log(2.0)) <= 1e-12);

  rep = word_count_entropy(golden(), 16);
  double target = sft_entropy(golden()).value;
  // decreasing sequence upper-bounding the Perron value
  for (size_t i = 1; i < rep.sequence.size(); ++i)
    CHECK(rep.sequence[i] <= rep.sequence[i - 1] + 1e-12);
  for (double h : rep.sequence) CHECK(h >= target - 1e-12);
  CHECK(rep.value - target <= 0.05);

  // Fibonacci counts F_{n+2}
  unsigned long long a = 1, b = 2;
  for (int n = 1; n <= 16; ++n) {
    CHECK(golden().language_count(n) == b);
    unsigned long long c = a + b;
    a = b;
    b = c;
  }

  auto fixed = SubshiftSpec::from_matrix(1, {{1}});
  rep = word_count_entropy(fixed, 8);
  for (double h : rep.sequence) CHECK(h == 0.0);

  CHECK_THROWS_AS(word_count_entropy(golden(), 40), CapExceeded);
}

TEST_CASE("entropy tuple candidates") {
  auto cand = entropy_tuple_candidate(
      full_shift(2), {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 20,
      5);
  REQUIRE(cand.has_value());
  CHECK(cand->certificate.J == std::vector<int>{0, 1, 2, 3, 4});

  cand = entropy_tuple_candidate(
      golden(), {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 30, 4);
  REQUIRE(cand.has_value());
  CHECK(cand->certificate.J == std::vector<int>{0, 2, 4, 6});

  // the 2-cycle admits no size-3 independence set: parity blocks it
  auto cycle = SubshiftSpec::from_matrix(2, {{0, 1}, {1, 0}}, "cycle2");
  cand = entropy_tuple_candidate(
      cycle, {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 30, 3);
  CHECK_FALSE(cand.has_value());

  CHECK_THROWS_AS(entropy_tuple_candidate(
                      full_shift(2),
                      {CylinderUnion::parse("0"), CylinderUnion::parse("0,1")},
                      20, 3),
                  InvalidArgument);
}

TEST_CASE("positive entropy specs admit large candidates, cycles none") {
  std::vector<SubshiftSpec> positive = {full_shift(2), full_shift(3), golden()};
  for (const auto& spec : positive) {
    auto cand = entropy_tuple_candidate(
        spec, {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 40, 5);
    REQUIRE(cand.has_value());
    CHECK(cand->certificate.J.size() >= 5);
  }
  auto cycle3 = SubshiftSpec::from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  auto cand = entropy_tuple_candidate(
      cycle3, {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 40, 3);
  CHECK_FALSE(cand.has_value());
}
