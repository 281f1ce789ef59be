#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltamix/errors.hpp"
#include "deltamix/hitting.hpp"
#include "deltamix/mixing.hpp"
#include "deltamix/serialize.hpp"

using namespace deltamix;

namespace {

SubshiftSpec full2() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 1}}, "full2");
}
SubshiftSpec golden() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
}
SubshiftSpec cycle2() {
  return SubshiftSpec::from_matrix(2, {{0, 1}, {1, 0}}, "cycle2");
}

}  // namespace

TEST_CASE("diagonal transitivity certificates") {
  auto cert = delta_transitive_certificate(
      full2(),
      {CylinderUnion::parse("0"), CylinderUnion::parse("1"),
       CylinderUnion::parse("0")},
      8);
  CHECK(cert.n == 1);

  cert = delta_transitive_certificate(
      golden(),
      {CylinderUnion::parse("1"), CylinderUnion::parse("1"),
       CylinderUnion::parse("1")},
      8);
  CHECK(cert.n == 2);

  // the 2-cycle cannot place 0 at both 0 and n with 1 at 2n: parity
  CHECK_THROWS_AS(delta_transitive_certificate(
                      cycle2(),
                      {CylinderUnion::parse("0"), CylinderUnion::parse("0"),
                       CylinderUnion::parse("1")},
                      16),
                  NoWitnessInHorizon);
}

TEST_CASE("system-level grid report") {
  auto rep = delta_transitive_system_report(full2(), 2, 2, 16);
  CHECK(rep.failed == 0);
  CHECK(rep.certified == 36);  // six words of length <= 2, squared

  rep = delta_transitive_system_report(cycle2(), 1, 2, 16);
  CHECK(rep.failed == 0);  // pairs are fine on the cycle; parity breaks at d=3
  rep = delta_transitive_system_report(cycle2(), 1, 3, 16);
  CHECK(rep.failed > 0);
}

TEST_CASE("weak mixing certificates") {
  auto whole = CylinderUnion::whole_space();
  auto cert = delta_wm_certificate(
      full2(), whole, {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 8);
  CHECK(cert.n == 1);

  cert = delta_wm_certificate(
      golden(), whole, {CylinderUnion::parse("0"), CylinderUnion::parse("1")}, 8);
  CHECK(cert.n == 2);

  cert = delta_wm_certificate(full2(), whole,
                              {CylinderUnion::parse("0"), CylinderUnion::parse("1"),
                               CylinderUnion::parse("0")},
                              8);
  CHECK(cert.n == 1);
  CHECK(cert.independence->witnesses.size() == 27);
}

TEST_CASE("weak mixing certificates replay through hitting sets") {
  auto whole = CylinderUnion::whole_space();
  struct Query {
    SubshiftSpec spec;
    std::vector<CylinderUnion> us;
  };
  std::vector<Query> corpus = {
      {full2(), {CylinderUnion::parse("0"), CylinderUnion::parse("1")}},
      {full2(),
       {CylinderUnion::parse("01"), CylinderUnion::parse("10"),
        CylinderUnion::parse("0")}},
      {golden(), {CylinderUnion::parse("0"), CylinderUnion::parse("1")}},
      {golden(), {CylinderUnion::parse("10"), CylinderUnion::parse("01")}},
  };
  for (const Query& q : corpus) {
    auto cert = delta_wm_certificate(q.spec, whole, q.us, 32);
    // n must lie in N(U_1 ∩ A, U_2, ..., U_d)
    std::vector<CylinderUnion> relativized(q.us);
    auto gh = generalized_hitting_set(q.spec, relativized, 32, false);
    CHECK(gh.contains(cert.n));
    // embedded certificate re-validates
    auto again = independence_check(q.spec, cert.independence->tuple,
                                    cert.independence->J, 4096,
                                    cert.independence->relative_to);
    CHECK(again.ok());
    CHECK(again.certificate->witnesses.size() ==
          cert.independence->witnesses.size());
  }
}

TEST_CASE("A_m membership certificates") {
  auto e = CylinderUnion::parse("0,1");
  auto cert = a_m_membership(full2(), e, 1, 8);
  CHECK(cert.n == 1);
  CHECK(cert.cover.size() == 2);
  CHECK(cert.independence->witnesses.size() == 4);

  // length-2 cover windows overlap at n=1 (selector (00,11,..) clashes), so
  // the least certified spacing is 2
  cert = a_m_membership(full2(), e, 2, 8);
  CHECK(cert.n == 2);
  CHECK(cert.cover.size() == 4);
  CHECK(cert.independence->witnesses.size() == 256);

  cert = a_m_membership(golden(), e, 1, 8);
  CHECK(cert.n == 2);

  // m = 3 on the full shift needs 8^8 selectors
  CHECK_THROWS_AS(a_m_membership(full2(), e, 3, 8), CapExceeded);
}

TEST_CASE("A_m chain: success at m implies success below") {
  auto e = CylinderUnion::parse("0,1");
  for (const SubshiftSpec& spec : {full2(), golden()}) {
    auto at2 = a_m_membership(spec, e, 2, 16);
    CHECK(at2.n >= 1);
    auto at1 = a_m_membership(spec, e, 1, 16);
    CHECK(at1.n >= 1);
  }
}

TEST_CASE("construction on the full shift, depth two") {
  auto tree = theorem_b_construct(full2(), {Word::parse("0"), Word::parse("1")},
                                  2, 64);
  REQUIRE(tree.levels.size() == 2);
  CHECK(tree.levels[0].J == std::vector<int>{0, 1, 2, 3});
  CHECK(tree.levels[1].n_k == 1);
  std::vector<std::string> words;
  for (const Word& w : tree.levels[1].words) words.push_back(w.text());
  CHECK(words == std::vector<std::string>{"000", "010", "100", "110"});
  check_tree_invariants(full2(), tree);
}

TEST_CASE("construction on the golden mean shift, depth three") {
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 3, 512);
  REQUIRE(tree.levels.size() == 3);
  CHECK(tree.levels[0].J == std::vector<int>{0, 2, 4, 6});
  CHECK(tree.levels[1].n_k == 2);
  CHECK(tree.levels[1].words.size() == 4);
  CHECK(tree.levels[1].J == std::vector<int>{0, 4, 8, 12, 16, 20});
  CHECK(tree.levels[2].n_k == 4);
  CHECK(tree.levels[2].words.size() == 64);
  CHECK(tree.levels[2].J.size() == 2);
  for (const Word& w : tree.levels[2].words) CHECK(w.size() == 12);
  check_tree_invariants(golden(), tree);
}

TEST_CASE("construction refuses zero entropy and bad seeds") {
  CHECK_THROWS_AS(theorem_b_construct(cycle2(),
                                      {Word::parse("0"), Word::parse("1")}, 2,
                                      64),
                  EntropyZero);
  CHECK_THROWS_AS(theorem_b_construct(full2(),
                                      {Word::parse("0"), Word::parse("01")}, 2,
                                      64),
                  InvalidArgument);  // not disjoint
  CHECK_THROWS_AS(theorem_b_construct(full2(), {Word::parse("0")}, 2, 64),
                  InvalidArgument);
  RunConfig config;
  CHECK_THROWS_AS(theorem_b_construct(full2(),
                                      {Word::parse("0"), Word::parse("1")}, 4,
                                      64, config),
                  CapExceeded);
}

TEST_CASE("tree documents round-trip and verify") {
  RunConfig config;
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 2, 128,
                                  config);
  std::string text = write_tree(tree, config);
  auto lines = verify_tree_text(text);
  CHECK(lines.size() == 3);  // structure + two levels

  std::vector<uint64_t> digests;
  auto back = parse_tree(text, digests);
  CHECK(back.depth == 2);
  CHECK(back.seeds.size() == 2);
  CHECK(back.levels[1].words == tree.levels[1].words);
  // re-serializing the parse gives the same bytes
  for (size_t k = 0; k < back.levels.size(); ++k) {
    std::vector<CylinderUnion> tuple;
    for (const Word& w : back.levels[k].words)
      tuple.push_back(CylinderUnion({w}));
    auto res = independence_check(parse_spec_json(back.spec_json), tuple,
                                  back.levels[k].J, back.selector_cap);
    REQUIRE(res.ok());
    back.levels[k].certificate = std::move(*res.certificate);
    back.levels[k].density = tree.levels[k].density;
  }
  CHECK(write_tree(back, config) == text);
}

TEST_CASE("tampered trees are rejected") {
  RunConfig config;
  auto tree = theorem_b_construct(golden(),
                                  {Word::parse("0"), Word::parse("10")}, 2, 128,
                                  config);
  std::string text = write_tree(tree, config);

  // flip one cylinder symbol inside the level-2 words
  auto pos = text.find("words 0000");
  REQUIRE(pos != std::string::npos);
  std::string tampered = text;
  tampered[pos + 6] = '1';
  CHECK_THROWS_AS(verify_tree_text(tampered), DomainError);

  // change the spacing
  pos = text.find("n 2");
  REQUIRE(pos != std::string::npos);
  tampered = text;
  tampered[pos + 2] = '3';
  CHECK_THROWS_AS(verify_tree_text(tampered), InvariantViolation);

  // corrupt the digest
  pos = text.find("digest ");
  REQUIRE(pos != std::string::npos);
  tampered = text;
  tampered[pos + 7] = tampered[pos + 7] == '0' ? '1' : '0';
  CHECK_THROWS_AS(verify_tree_text(tampered), InvariantViolation);
}

TEST_CASE("spread witnesses") {
  // constrained family: leaves of the depth-3 full-shift tree force their
  // windows, so the level spacing is a spread time
  auto tree = theorem_b_construct(full2(), {Word::parse("0"), Word::parse("1")},
                                  3, 128);
  int step = tree.levels[2].n_k;
  const auto& leaves = tree.levels[2].words;
  const auto& parents = tree.levels[1].words;
  std::vector<Word> e_words = leaves;
  CylinderUnion e{e_words};

  std::vector<Word> zs;
  std::vector<std::vector<Word>> targets;
  for (size_t idx = 0; idx < leaves.size(); ++idx) {
    size_t c1 = (idx / parents.size()) % parents.size();
    size_t c2 = idx % parents.size();
    zs.push_back(leaves[idx]);
    targets.push_back({Word{{parents[c1][0]}}, Word{{parents[c2][0]}}});
  }
  auto witness = spread_witness(full2(), e, zs, targets, 64);
  CHECK(witness.k == step);
  CHECK(witness.d == 2);

  // unconstrained ambient set: free symbols break containment
  CHECK_THROWS_AS(spread_witness(full2(), CylinderUnion::whole_space(),
                                 {Word::parse("01")}, {{Word::parse("0")}}, 32),
                  NoWitnessInHorizon);

  // degenerate single fixed point: everything is forced
  auto fixed = SubshiftSpec::from_matrix(1, {{1}});
  auto w = spread_witness(fixed, CylinderUnion::parse("0"), {Word::parse("0")},
                          {{Word::parse("0")}}, 16);
  CHECK(w.k == 3);  // least k with 1/k < 1/2
}

TEST_CASE("transitive point scheduling") {
  auto res = delta_transitive_point(
      2, {{2, {Word::parse("01"), Word::parse("10")}}}, 100);
  REQUIRE(res.schedule.size() == 1);
  int n = res.schedule[0].second;
  CHECK(res.prefix.size() >= 2 * n + 2);
  for (int j = 1; j <= 2; ++j) {
    Word w = j == 1 ? Word::parse("01") : Word::parse("10");
    for (int t = 0; t < w.size(); ++t) CHECK(res.prefix[j * n + t] == w[t]);
  }

  res = delta_transitive_point(2, {}, 10);
  CHECK(res.prefix.size() == 0);
  CHECK(res.schedule.empty());

  res = delta_transitive_point(
      2, {{3, {Word::parse("0"), Word::parse("1"), Word::parse("0")}}}, 100);
  REQUIRE(res.schedule.size() == 1);
  CHECK(res.schedule[0].second <= 33);

  // replay through entering-time checks
  auto spec = full2();
  PointGen x = PointGen::eventually_periodic(res.prefix, Word::parse("0"));
  std::vector<Word> words = {Word::parse("0"), Word::parse("1"),
                             Word::parse("0")};
  for (int j = 1; j <= 3; ++j) {
    auto t = entering_time_set(spec, x, CylinderUnion({words[j - 1]}),
                               3 * res.schedule[0].second + 2);
    CHECK(t.contains(j * res.schedule[0].second));
  }

  CHECK_THROWS_AS(
      delta_transitive_point(
          2, {{3, {Word::parse("0"), Word::parse("1"), Word::parse("0")}}}, 3),
      BudgetExceeded);
}

TEST_CASE("multiple requirements stack without conflicts") {
  std::vector<TransitivePointRequirement> reqs = {
      {2, {Word::parse("01"), Word::parse("10")}},
      {2, {Word::parse("11"), Word::parse("00")}},
      {3, {Word::parse("1"), Word::parse("1"), Word::parse("1")}},
  };
  auto res = delta_transitive_point(2, reqs, 400);
  REQUIRE(res.schedule.size() == 3);
  PointGen x = PointGen::eventually_periodic(res.prefix, Word::parse("0"));
  for (size_t i = 0; i < reqs.size(); ++i) {
    int n = res.schedule[i].second;
    for (int j = 1; j <= reqs[i].d; ++j) {
      const Word& w = reqs[i].words[j - 1];
      CHECK(x.window(j * n, w.size()) == w);
    }
  }
  // schedules are strictly increasing in placement
  CHECK(res.schedule[0].second < res.schedule[1].second);
}
