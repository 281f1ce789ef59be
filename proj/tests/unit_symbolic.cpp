#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltamix/cylinder.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/point.hpp"
#include "deltamix/subshift.hpp"

using namespace deltamix;

namespace {

SubshiftSpec full2() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 1}}, "full2");
}
SubshiftSpec golden() {
  return SubshiftSpec::from_matrix(2, {{1, 1}, {1, 0}}, "golden-mean");
}

// reference filter: words over the full alphabet with no forbidden factor
std::vector<Word> filter_language(int k, const std::vector<Word>& forbidden,
                                  int n) {
  std::vector<Word> out;
  std::vector<Symbol> buf(n, 0);
  while (true) {
    Word w{buf};
    bool ok = true;
    for (const Word& f : forbidden) {
      for (int i = 0; i + f.size() <= n && ok; ++i) {
        bool match = true;
        for (int t = 0; t < f.size(); ++t)
          if (w[i + t] != f[t]) { match = false; break; }
        if (match) ok = false;
      }
    }
    if (ok) out.push_back(w);
    int pos = n - 1;
    while (pos >= 0 && ++buf[pos] == k) buf[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("validation of the stock examples") {
  auto rep = full2().validate();
  CHECK(rep.irreducible);
  CHECK(rep.period == 1);
  CHECK(rep.essential_input);

  rep = golden().validate();
  CHECK(rep.irreducible);
  CHECK(rep.period == 1);

  auto cycle = SubshiftSpec::from_matrix(2, {{0, 1}, {1, 0}});
  rep = cycle.validate();
  CHECK(rep.irreducible);
  CHECK(rep.period == 2);

  CHECK_THROWS_AS(SubshiftSpec::from_matrix(2, {{0, 1}, {0, 0}}),
                  InvalidSubshift);
}

TEST_CASE("trimming keeps the essential core") {
  // symbol 1 has no outgoing edge; only 0^inf survives
  auto spec = SubshiftSpec::from_matrix(2, {{1, 1}, {0, 0}});
  CHECK_FALSE(spec.symbol_alive(1));
  CHECK(spec.word_allowed(Word::parse("000")));
  CHECK_FALSE(spec.word_allowed(Word::parse("01")));
  CHECK_FALSE(spec.validate().essential_input);
}

TEST_CASE("language counts") {
  CHECK(full2().language(3).size() == 8);
  CHECK(golden().language(4).size() == 8);  // Fibonacci F_6
  auto l1 = golden().language(1);
  REQUIRE(l1.size() == 2);
  CHECK(l1[0].text() == "0");
  CHECK(l1[1].text() == "1");
  CHECK_THROWS_AS(golden().language(40), CapExceeded);
}

TEST_CASE("prefixes and suffixes of longer words stay in the language") {
  for (const SubshiftSpec& spec : {full2(), golden()}) {
    for (int n = 1; n <= 6; ++n) {
      auto shorter = spec.language(n);
      for (const Word& w : spec.language(n + 1)) {
        CHECK(std::binary_search(shorter.begin(), shorter.end(), w.prefix(n)));
        CHECK(std::binary_search(shorter.begin(), shorter.end(),
                                 w.suffix_from(1)));
      }
    }
  }
}

TEST_CASE("word counts are submultiplicative") {
  for (const SubshiftSpec& spec : {full2(), golden()}) {
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n)
        CHECK(spec.language_count(m + n) <=
              spec.language_count(m) * spec.language_count(n));
  }
}

TEST_CASE("recoding equivalence against direct forbidden-word filtering") {
  struct Case {
    int k;
    std::vector<Word> forbidden;
  };
  std::vector<Case> cases = {
      {2, {Word::parse("11")}},
      {2, {Word::parse("111")}},
      {2, {Word::parse("00"), Word::parse("111")}},
      {3, {Word::parse("012")}},
  };
  for (const Case& c : cases) {
    auto spec = SubshiftSpec::from_forbidden_words(c.k, c.forbidden);
    for (int n = 1; n <= 8; ++n) {
      auto direct = filter_language(c.k, c.forbidden, n);
      auto graph = spec.language(n);
      CHECK(direct == graph);
    }
  }
}

TEST_CASE("forbidden words of length two match the matrix construction") {
  auto via_words = SubshiftSpec::from_forbidden_words(2, {Word::parse("11")});
  for (int n = 1; n <= 8; ++n)
    CHECK(via_words.language(n) == golden().language(n));
}

TEST_CASE("cylinder unions") {
  auto g = golden();
  CylinderUnion u = CylinderUnion::parse("0,10");
  CHECK(u.nonempty_in(g));
  CHECK(CylinderUnion::parse("11").nonempty_in(g) == false);
  CHECK(u.disjoint_from(CylinderUnion::parse("11")));
  CHECK_FALSE(u.disjoint_from(CylinderUnion::parse("00")));
  // shadowed longer words collapse
  CylinderUnion v = CylinderUnion::parse("0,01");
  CHECK(v.cylinders.size() == 1);
  // whole space
  CHECK(CylinderUnion::whole_space().contains_word_prefix(Word::parse("10")));
}

TEST_CASE("spec files round-trip byte for byte") {
  auto g = golden();
  std::string text = spec_to_json_text(g);
  SubshiftSpec back = parse_spec_json(text);
  CHECK(back == g);
  CHECK(spec_to_json_text(back) == text);

  auto f = SubshiftSpec::from_forbidden_words(2, {Word::parse("111")}, "no111");
  text = spec_to_json_text(f);
  CHECK(spec_to_json_text(parse_spec_json(text)) == text);
}

TEST_CASE("point generators") {
  PointGen x = PointGen::eventually_periodic(Word(), Word::parse("01"));
  CHECK(x.at(0) == 0);
  CHECK(x.at(1) == 1);
  CHECK(x.at(100) == 0);
  PointGen y = PointGen::eventually_periodic(Word::parse("1"), Word::parse("0"));
  CHECK(y.at(0) == 1);
  CHECK(y.at(5) == 0);

  PointGen b = PointGen::power_blocks(4, 2);
  CHECK(b.at(0) == 0);
  CHECK(b.at(1) == 1);   // [1,2)
  CHECK(b.at(2) == 0);
  CHECK(b.at(4) == 1);   // [4,8)
  CHECK(b.at(7) == 1);
  CHECK(b.at(8) == 0);
  CHECK(b.at(16) == 1);  // [16,32)

  CHECK(PointGen::parse("ep:1:0").text() == "ep:1:0");
  CHECK(PointGen::parse("rule:power_blocks:4:2").at(5) == 1);

  PointGen capped = PointGen::eventually_periodic(Word(), Word::parse("0"), 10);
  CHECK_THROWS_AS(capped.at(10), HorizonExceeded);

  // (01)^inf is fine in the golden-mean shift, (10)* with prefix 1 is not: "11"
  PointGen ok = PointGen::eventually_periodic(Word(), Word::parse("01"));
  ok.validate_in(golden(), 50);
  PointGen bad = PointGen::eventually_periodic(Word::parse("1"), Word::parse("10"));
  CHECK_THROWS_AS(bad.validate_in(golden(), 50), InvalidArgument);
}

TEST_CASE("shift distance basics") {
  PointGen zeros = PointGen::eventually_periodic(Word(), Word::parse("0"));
  PointGen one_zero = PointGen::eventually_periodic(Word::parse("1"), Word::parse("0"));
  CHECK(shift_distance(zeros, zeros, 5, 1, 1, 32).zero);
  auto d = shift_distance(zeros, one_zero, 0, 1, 1, 32);
  CHECK(d.text() == "1");
  CHECK(shift_distance(zeros, one_zero, 1, 1, 1, 32).zero);
}

TEST_CASE("shift distance is a symmetric ultrametric on sampled triples") {
  std::vector<PointGen> points = {
      PointGen::eventually_periodic(Word(), Word::parse("0")),
      PointGen::eventually_periodic(Word(), Word::parse("01")),
      PointGen::eventually_periodic(Word::parse("1"), Word::parse("0")),
      PointGen::eventually_periodic(Word(), Word::parse("0011")),
      PointGen::power_blocks(4, 2),
  };
  for (int n : {0, 1, 2, 7}) {
    for (const PointGen& x : points)
      for (const PointGen& y : points) {
        auto dxy = shift_distance(x, y, n, 1, 1, 32);
        auto dyx = shift_distance(y, x, n, 1, 1, 32);
        CHECK(dxy.zero == dyx.zero);
        if (!dxy.zero) CHECK(dxy.exponent == dyx.exponent);
        for (const PointGen& z : points) {
          auto dxz = shift_distance(x, z, n, 1, 1, 32);
          auto dyz = shift_distance(y, z, n, 1, 1, 32);
          // rho(x,z) <= max(rho(x,y), rho(y,z))
          DyadicDistance lhs = dxz;
          DyadicDistance rhs = dxy.less_than(dyz) ? dyz : dxy;
          CHECK((lhs.less_than(rhs) || (lhs.zero == rhs.zero &&
                                        lhs.exponent == rhs.exponent)));
        }
      }
  }
}
