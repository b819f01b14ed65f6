#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "khopos/catalog.hpp"
#include "khopos/obstruct.hpp"
#include "khopos/seifert.hpp"
#include "oracles.hpp"

using namespace khopos;

namespace {

KhTable full(const BraidWord& b, Ring r = Ring::integers()) { return khovanov_full(parse_braid(b), r); }

bool has_pattern(const ObstructionReport& r, const std::string& p) {
  for (const auto& v : r.violations)
    if (v.pattern == p) return true;
  return false;
}

}  // namespace

TEST_CASE("trefoil is consistent") {
  const auto r = positive_pattern_check(full({2, {1, 1, 1}}));
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(r.feasibleChi == -1);
  CHECK(r.feasibleP1 == 0);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.fieldStrength);
  CHECK(r.to_json()["verdict"] == "consistent");
  const auto q = positive_pattern_check(full({2, {1, 1, 1}}, Ring::rationals()));
  CHECK(q.verdict == Verdict::Consistent);
  CHECK(q.fieldStrength);
}

TEST_CASE("figure-eight is obstructed") {
  const auto r = positive_pattern_check(full({3, {1, -2, 1, -2}}));
  CHECK(r.verdict == Verdict::Obstructed);
  CHECK(has_pattern(r, "vanishing-negative-i"));
  CHECK_FALSE(r.feasibleChi.has_value());
  CHECK(r.summary.find("not positive") == 0);
}

TEST_CASE("torsion in the first homology is obstructed") {
  KhTable t(Ring::integers(), Window::full());
  t.set(0, 1, {1, {}});
  t.set(0, 3, {1, {}});
  t.set(1, 3, {1, {mpz_class(2)}});
  const auto r = positive_pattern_check(t);
  CHECK(r.verdict == Verdict::Obstructed);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].pattern == "kh1-free");
  CHECK(r.violations[0].i == 1);
  CHECK(r.violations[0].j == 3);
}

TEST_CASE("other pattern violations") {
  KhTable t(Ring::integers(), Window::full());
  t.set(0, 1, {1, {}});
  t.set(0, 3, {1, {}});
  t.set(0, 5, {1, {}});
  t.set(1, 7, {1, {}});
  t.set(2, 1, {1, {}});
  t.set(3, 3, {1, {}});
  const auto r = positive_pattern_check(t);
  CHECK(r.verdict == Verdict::Obstructed);
  CHECK(has_pattern(r, "kh0-support"));
  CHECK(has_pattern(r, "kh1-support"));
  CHECK(has_pattern(r, "bottom-row"));
  CHECK(has_pattern(r, "second-row"));
  KhTable e(Ring::integers(), Window::full());
  CHECK(positive_pattern_check(e).verdict == Verdict::Obstructed);
}

TEST_CASE("windowed tables are never falsely obstructed") {
  const auto d = parse_braid({2, {1, 1, 1, 1, 1}});
  CHECK(positive_pattern_check(khovanov_window(d, 0, 1, Ring::integers())).verdict == Verdict::Consistent);
  const auto high = positive_pattern_check(khovanov_window(d, 2, 3, Ring::integers()));
  CHECK(high.verdict == Verdict::Inconclusive);
  CHECK_FALSE(high.notes.empty());
  CHECK(positive_pattern_check(khovanov_window(d, 0, 0, Ring::integers())).verdict == Verdict::Inconclusive);
  // a window that misses i < 0 on a diagram with negative crossings
  const auto b1 = parse_braid({3, {1, 2, 1, 2, -1}});
  const auto w = positive_pattern_check(khovanov_window(b1, 0, 1, Ring::integers()));
  CHECK(w.verdict != Verdict::Obstructed);
}

TEST_CASE("positivity or negativity") {
  const auto t = parse_braid({2, {1, 1, 1}});
  const auto r = positivity_or_negativity_check(khovanov_full(t, Ring::integers()), khovanov_full(mirror(t), Ring::integers()));
  CHECK(r.positive.verdict == Verdict::Consistent);
  CHECK(r.negative.verdict == Verdict::Obstructed);
  CHECK(r.verdict == Verdict::Consistent);
  const auto f = parse_braid({3, {1, -2, 1, -2}});
  CHECK(positivity_or_negativity_check(khovanov_full(f, Ring::integers()), khovanov_full(mirror(f), Ring::integers())).verdict ==
        Verdict::Obstructed);
  const auto u = khovanov_full(LinkDiagram::unknot(), Ring::integers());
  const auto ur = positivity_or_negativity_check(u, u);
  CHECK(ur.positive.verdict == Verdict::Consistent);
  CHECK(ur.negative.verdict == Verdict::Consistent);
  CHECK(ur.positive.feasibleChi == 1);
  CHECK(ur.positive.feasibleP1 == 0);
}

TEST_CASE("property: positive catalog diagrams satisfy the pattern") {
  for (const auto& e : catalog()) {
    const auto d = e.diagram();
    if (!d.is_positive() || d.crossing_count() > 12 || !diagram_connected(d)) continue;
    CAPTURE(e.name);
    const auto r = positive_pattern_check(khovanov_full(d, Ring::integers()));
    CHECK(r.verdict == Verdict::Consistent);
    CHECK(r.feasibleChi == euler_char(d));
    CHECK(r.feasibleP1 == p1(d));
  }
}

TEST_CASE("property: random positive braids satisfy the pattern") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    BraidWord b{strands, {}};
    for (int i = 1; i < strands; ++i) b.letters.push_back(i);
    for (int k = 0; k < 4; ++k) b.letters.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1)));
    const auto d = parse_braid(b);
    const auto r = positive_pattern_check(khovanov_full(d, Ring::integers()));
    CHECK(r.verdict == Verdict::Consistent);
    CHECK(r.feasibleChi == euler_char(d));
    CHECK(r.feasibleP1 == 0);
  }
}

TEST_CASE("crosschecks of first homology") {
  const auto t = theorem12_crosscheck(parse_braid({2, {1, 1, 1}}), Ring::integers());
  CHECK(t.verdict == Verdict::Consistent);
  CHECK(t.fibered);
  CHECK(t.p1 == 0);
  CHECK(t.kh1.groups().empty());

  const auto c = theorem12_crosscheck(catalog_lookup("4-cycle").diagram(), Ring::integers());
  CHECK(c.verdict == Verdict::Consistent);
  CHECK_FALSE(c.fibered);
  CHECK(c.p1 == 1);
  CHECK(c.chi == 0);
  CHECK(c.kh1.known(1, 2) == AbelianGroup{1, {}});

  const auto d5 = parse_braid({2, {1, 1, 1, 1, 1}});
  const auto f = theorem12_crosscheck(d5, Ring::integers());
  CHECK(f.verdict == Verdict::Consistent);
  CHECK(f.fibered);
  const auto t5 = khovanov_window(d5, 0, 0, Ring::integers());
  CHECK(t5.known(0, 3) == AbelianGroup{1, {}});
  CHECK(t5.known(0, 5) == AbelianGroup{1, {}});

  CHECK_THROWS_AS(theorem12_crosscheck(parse_braid({3, {1, -2, 1, -2}}), Ring::integers()), PreconditionError);
  CHECK_THROWS_AS(theorem12_crosscheck(parse_braid({3, {1}}), Ring::integers()), PreconditionError);
}

TEST_CASE("exact triangle on a kinked trefoil") {
  const auto d = parse_braid({2, {1, 1, 1, -1}});
  REQUIRE(d.crossings()[3].sign < 0);
  const auto r = skein_les_verify(d, 3, Ring::rationals(), {-2, 4});
  CHECK(r.ok());
  CHECK(r.checks > 0);
  CHECK(r.shiftI == (r.writhe0 - r.writhe + 1) / 2);
  CHECK(r.to_json()["ok"] == true);
  CHECK_THROWS_AS(skein_les_verify(d, 0, Ring::rationals(), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(skein_les_verify(d, 3, Ring::integers(), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(skein_les_verify(d, 7, Ring::rationals(), {0, 1}), PreconditionError);
}

TEST_CASE("property: exact triangle rank constraints on random diagrams") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 25) {
    const auto d = parse_braid(oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 6)));
    int v = -1;
    for (int c = 0; c < d.crossing_count(); ++c)
      if (d.crossings()[static_cast<std::size_t>(c)].sign < 0) v = c;
    if (v < 0) continue;
    ++tested;
    for (const auto& f : {Ring::rationals(), Ring::mod(2)}) {
      const auto r = skein_les_verify(d, v, f, {-d.n_minus() - 1, d.n_plus() + 1});
      CHECK(r.ok());
      for (const auto& msg : r.failures) MESSAGE(msg);
    }
  }
}

TEST_CASE("exceptional gradings") {
  CHECK(exceptional_gradings(7, 0) == std::set<std::pair<int, int>>{{3, 10}, {3, 12}, {4, 10}, {4, 12}});
  CHECK(exceptional_gradings(1, 0) == std::set<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 1}, {1, 3}});
  CHECK_THROWS_AS(exceptional_gradings(0, 0), PreconditionError);
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Obstructed) == "obstructed");
  CHECK(to_string(Verdict::Consistent) == "consistent");
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}
