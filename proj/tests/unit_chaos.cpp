#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltamix/chaos.hpp"
#include "deltamix/errors.hpp"

using namespace deltamix;

namespace {

SubshiftSpec full2() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 1}}, "full2");
}
SubshiftSpec golden() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
}

PointGen zeros() { return PointGen::eventually_periodic(Word(), Word::parse("0")); }
PointGen alternating() {
  return PointGen::eventually_periodic(Word(), Word::parse("01"));
}
PointGen blocks() { return PointGen::power_blocks(4, 2); }

}  // namespace

TEST_CASE("distance profiles") {
  auto profile = orbit_distance_profile(zeros(), zeros(), 1, 1, 32, 32);
  for (const auto& [n, d] : profile) CHECK(d.zero);

  // 0^inf against (01)^inf: 1 at odd n, 1/2 at even n
  profile = orbit_distance_profile(zeros(), alternating(), 1, 1, 32, 32);
  for (const auto& [n, d] : profile) {
    REQUIRE_FALSE(d.zero);
    CHECK(d.exponent == (n % 2 == 0 ? 1 : 0));
  }

  // the block pair swings between full agreement and distance one
  auto reps = scrambled_report(zeros(), blocks(), "blocks", 1, 1, 4096, 64,
                               ScrambledThresholds{});
  CHECK(reps.min_tail.at_most_exp(10));
  CHECK(reps.max_tail.text() == "1");
}

TEST_CASE("verdicts") {
  ScrambledThresholds th;
  auto rep = scrambled_report(zeros(), zeros(), "same", 1, 1, 128, 64, th);
  CHECK(rep.verdict == Verdict::AsymptoticEvidence);
  CHECK(rep.min_tail.zero);
  CHECK(rep.max_tail.zero);

  th.eps_min_exp = 1;  // separation threshold 1/2
  rep = scrambled_report(zeros(), blocks(), "blocks", 1, 1, 4096, 64, th);
  CHECK(rep.verdict == Verdict::ScrambledEvidence);

  rep = scrambled_report(zeros(), alternating(), "alt", 1, 1, 128, 64, th);
  CHECK(rep.verdict == Verdict::Inconclusive);  // never close, never apart? apart
}

TEST_CASE("report symmetry in (x,y,r,s) vs (y,x,s,r)") {
  ScrambledThresholds th;
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}}) {
    auto a = scrambled_report(zeros(), blocks(), "a", r, s, 512, 64, th);
    auto b = scrambled_report(blocks(), zeros(), "b", s, r, 512, 64, th);
    CHECK(a.min_tail.zero == b.min_tail.zero);
    CHECK(a.max_tail.zero == b.max_tail.zero);
    if (!a.min_tail.zero) CHECK(a.min_tail.exponent == b.min_tail.exponent);
    if (!a.max_tail.zero) CHECK(a.max_tail.exponent == b.max_tail.exponent);
  }
}

TEST_CASE("longer horizons never raise the tail minimum at a fixed anchor") {
  int anchor = 257;
  auto short_profile = orbit_distance_profile(zeros(), blocks(), 1, 1, 512, 64);
  auto long_profile = orbit_distance_profile(zeros(), blocks(), 1, 1, 2048, 64);
  auto tail_min = [&](const auto& profile) {
    DyadicDistance best;
    bool first = true;
    for (const auto& [n, d] : profile) {
      if (n < anchor) continue;
      if (first || d.less_than(best)) { best = d; first = false; }
    }
    return best;
  };
  auto a = tail_min(short_profile);
  auto b = tail_min(long_profile);
  CHECK((b.less_than(a) || (a.zero == b.zero && a.exponent == b.exponent)));
}

TEST_CASE("subsampling identity holds exactly for small powers") {
  std::vector<NamedPair> pairs = {{"zb", zeros(), blocks()},
                                  {"za", zeros(), alternating()}};
  for (const NamedPair& p : pairs)
    for (int k = 1; k <= 4; ++k)
      for (long long n = 1; k * n <= 256; ++n) {
        auto a = shift_distance(p.x, p.y, n, k, k, 64);
        auto b = shift_distance(p.x, p.y, k * n, 1, 1, 64);
        CHECK(a.zero == b.zero);
        if (!a.zero) CHECK(a.exponent == b.exponent);
      }
}

TEST_CASE("grid sweeps") {
  std::vector<NamedPair> pairs = {{"same", zeros(), zeros()}};
  std::vector<std::pair<int, int>> rs = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  auto reports = prox_asy_grid(pairs, rs, 128, 64, ScrambledThresholds{});
  REQUIRE(reports.size() == 4);
  for (const auto& rep : reports)
    CHECK(rep.verdict == Verdict::AsymptoticEvidence);

  // block pair at (1,1) and (2,2): the even-index subsequence relation is
  // checked inside the grid; both verdicts come out scrambled at eps 1/2
  ScrambledThresholds th;
  th.eps_min_exp = 1;
  pairs = {{"blocks", zeros(), blocks()}};
  reports = prox_asy_grid(pairs, {{1, 1}, {2, 2}}, 4096, 64, th);
  for (const auto& rep : reports)
    CHECK(rep.verdict == Verdict::ScrambledEvidence);
}

TEST_CASE("tree branch pairs are scrambled at the listed speeds") {
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 3, 512);
  ScrambledThresholds th;  // p_min 10, eps 1/4
  std::vector<std::pair<int, int>> rs = {{1, 1}, {1, 2}, {2, 3}};
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 63}, {5, 40}}) {
    TreePair tp = pair_from_tree(golden(), tree, a, b, rs, th);
    for (auto [r, s] : rs) {
      auto rep = scrambled_report(tp.x, tp.y, "tree", r, s,
                                  tp.suggested_horizon, 64, th);
      CHECK(rep.verdict == Verdict::ScrambledEvidence);
      CHECK(rep.min_tail.at_most_exp(10));
      CHECK(rep.max_tail.at_least_exp(2));
    }
  }
}

TEST_CASE("any two depth-2 branches give a proximal non-asymptotic pair") {
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 2, 128);
  ScrambledThresholds th;
  int leaves = static_cast<int>(tree.levels.back().words.size());
  for (int a = 0; a < leaves; ++a)
    for (int b = a + 1; b < leaves; ++b) {
      TreePair tp = pair_from_tree(golden(), tree, a, b, {{1, 1}}, th);
      auto rep = scrambled_report(tp.x, tp.y, "pair", 1, 1,
                                  tp.suggested_horizon, 64, th);
      CHECK(rep.min_tail.at_most_exp(th.p_min));       // proximal evidence
      CHECK(rep.max_tail.at_least_exp(th.eps_min_exp));  // not asymptotic
    }
}

TEST_CASE("tree pair points stay inside the language") {
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 3, 512);
  TreePair tp = pair_from_tree(golden(), tree, 3, 60, {{1, 2}, {2, 3}},
                               ScrambledThresholds{});
  tp.x.validate_in(golden(), 4 * tp.period);
  tp.y.validate_in(golden(), 4 * tp.period);
  // schedule events replay: shared windows agree, distal windows split
  for (const TreePairEvent& ev : tp.schedule) {
    auto d = shift_distance(tp.x, tp.y, ev.n, ev.r, ev.s, 64);
    if (ev.proximal) CHECK(d.at_most_exp(10));
    else CHECK(d.at_least_exp(2));
  }
}
