#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "khopos/cables.hpp"
#include "khopos/seifert.hpp"

using namespace khopos;

namespace {

const BraidWord trefoil{2, {1, 1, 1}};

}  // namespace

TEST_CASE("torus braids") {
  CHECK(torus_braid(2, 3) == BraidWord{2, {1, 1, 1}});
  CHECK(torus_braid(3, 0) == BraidWord{3, {}});
  CHECK(parse_braid(torus_braid(3, 0)).component_count() == 3);
  const auto t34 = torus_braid(3, 4);
  CHECK(t34 == BraidWord{3, {1, 2, 1, 2, 1, 2, 1, 2}});
  CHECK(parse_braid(t34).writhe() == 8);
  CHECK(parse_braid(t34).component_count() == 1);
  CHECK_THROWS_AS(torus_braid(1, 3), PreconditionError);
}

TEST_CASE("cable of the trefoil") {
  const CableParams c{2, 1, 0};
  CHECK(cable_twist_count(trefoil, c) == 5);
  const auto b = cable_braid(trefoil, c);
  BraidWord expect{4, {}};
  for (int k = 0; k < 3; ++k) expect.letters.insert(expect.letters.end(), {2, 1, 3, 2});
  for (int k = 0; k < 5; ++k) expect.letters.push_back(-1);
  CHECK(b == expect);
  CHECK(b.letters.size() == 17);
  CHECK(b.exponent_sum() == 7);
  CHECK(parse_braid(b).component_count() == 1);

  const auto pos = cable_braid(trefoil, {2, 6, 0});
  CHECK(pos.letters.size() == 12);
  CHECK(parse_braid(pos).n_minus() == 0);
  CHECK(pos.exponent_sum() == 12);

  // n < 0 appends positive twist blocks
  const auto more = cable_braid(trefoil, {2, 8, 0});
  CHECK(more.exponent_sum() == 14);
  CHECK(parse_braid(more).n_minus() == 0);
}

TEST_CASE("cable errors") {
  CHECK_THROWS_AS(cable_braid({2, {1, 1}}, {2, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(cable_braid(trefoil, {1, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(cable_braid(trefoil, {2, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(cable_braid(trefoil, {2, 1, -1}), PreconditionError);
}

TEST_CASE("the last twist can be written as a partial twist") {
  for (int p = 2; p <= 4; ++p)
    for (int q = -2; q <= 8; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto a = cable_braid(trefoil, {p, q, 0});
      const auto b = cable_braid(trefoil, {p, q + 1, p - 1});
      if (cable_twist_count(trefoil, {p, q, 0}) > 0) CHECK(a == b);
      CHECK(a.exponent_sum() == b.exponent_sum());
      CHECK(parse_braid(a).component_count() == parse_braid(b).component_count());
    }
}

TEST_CASE("exponent sums and Seifert data") {
  const std::vector<BraidWord> companions{trefoil, {2, {1, 1, 1, 1, 1}}, {3, {1, 2, 1, 2, 1, 2, 1, 2}}, {3, {1, -2, 1, -2}}};
  for (const auto& k : companions)
    for (int p = 2; p <= 3; ++p)
      for (int q = -3; q <= 3 * p * k.exponent_sum() + 1; q += 2)
        for (int m = 0; m < p; ++m) {
          const CableParams c{p, q, m};
          const auto b = cable_braid(k, c);
          const int w = k.exponent_sum(), n = cable_twist_count(k, c);
          CHECK(b.exponent_sum() == p * p * w - n * (p - 1) - m);
          CHECK(b.strands == p * k.strands);
          const auto d = parse_braid(b);
          if (q >= p * w && k.negative_letters() == 0 && m == 0) {
            CHECK(d.n_minus() == 0);
            CHECK(seifert_graph(d).vertexCount == p * seifert_graph(parse_braid(k)).vertexCount);
            CHECK(p1(d) == p1(parse_braid(k)));
          }
        }
}

TEST_CASE("Schubert and the predicted grading") {
  CHECK(schubert_chi(-1, 2, 3) == -5);
  CHECK(schubert_chi(-1, 2, 1) == -3);
  for (int p = 2; p < 5; ++p)
    for (int q = 0; q < 6; ++q) CHECK(schubert_chi(1, p, q) == p - q * (p - 1));
  CHECK(predicted_kh1_grading(-1, {2, 1, 0}) == 5);
  CHECK(predicted_kh1_grading(-1, {2, 3, 1}) == 6);
}

TEST_CASE("condition flags") {
  const auto f = cable_condition_report(1, 3, 2, 3);
  CHECK(f.lspaceCompatible);
  CHECK_FALSE(f.positivityGuaranteed);
  CHECK(f.khTheoremApplies);
  CHECK(cable_condition_report(1, 3, 2, 6).positivityGuaranteed);
  CHECK_FALSE(cable_condition_report(1, 3, 3, 2).khTheoremApplies);
}

TEST_CASE("beta family") {
  const auto b1 = beta_n(1);
  CHECK(b1.letters.size() == 17);
  CHECK(b1.exponent_sum() == 15);
  CHECK(b1.negative_letters() == 1);
  const auto d1 = parse_braid(b1);
  CHECK(d1.n_minus() == 1);
  CHECK(d1.component_count() == 1);
  const auto b2 = beta_n(2);
  CHECK(b2.letters.size() == 25);
  CHECK(b2.exponent_sum() == 23);
  for (int n = 1; n <= 5; ++n) {
    CHECK(beta_n(n).negative_letters() == 1);
    CHECK(beta_n(n).exponent_sum() == 8 * n + 7);
    CHECK(static_cast<int>(beta_n(n).letters.size()) == 4 * (2 * n + 1) + 5);
  }
  CHECK_THROWS_AS(beta_n(0), PreconditionError);
}
