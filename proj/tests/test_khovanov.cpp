#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "khopos/catalog.hpp"
#include "khopos/khovanov.hpp"
#include "oracles.hpp"

using namespace khopos;

namespace {

std::map<std::pair<int, int>, oracle::Group> as_map(const KhTable& t) {
  std::map<std::pair<int, int>, oracle::Group> out;
  for (const auto& [k, g] : t.groups()) out[k] = oracle::Group{g.freeRank, g.torsion};
  return out;
}

AbelianGroup free(std::int64_t r) { return AbelianGroup{r, {}}; }
AbelianGroup tor(std::int64_t r, long t) { return AbelianGroup{r, {mpz_class(t)}}; }

}  // namespace

TEST_CASE("grading conversion round trips") {
  for (int r = 0; r < 5; ++r)
    for (int q = -6; q <= 6; ++q) {
      const auto [i, j] = to_ij(r, q, 3, 2);
      CHECK(i == r - 2);
      CHECK(j == q + 3 - 4);
      CHECK(to_rq(i, j, 3, 2) == std::pair{r, q});
    }
}

TEST_CASE("slices of the trefoil cube") {
  const auto t = parse_braid({2, {1, 1, 1}});
  // height 0 has two circles, so degrees -2, 0, 2 with 1, 2, 1 generators
  CHECK(build_slice(t, 0, -2).basis.size() == 1);
  CHECK(build_slice(t, 0, 0).basis.size() == 2);
  CHECK(build_slice(t, 0, 2).basis.size() == 1);
  CHECK(build_slice(t, 0, 1).basis.empty());
  // height 3: three circles, internal degree q = deg + 3
  CHECK(build_slice(t, 3, 4).basis.size() == 3);
  CHECK_THROWS_AS(build_slice(t, 4, 0), PreconditionError);
  const auto d0 = differential(t, 0, 0);
  CHECK(d0.cols() == 2);
  CHECK(d0.rows() == static_cast<std::int64_t>(build_slice(t, 1, 0).basis.size()));
}

TEST_CASE("differentials square to zero") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d = parse_braid(oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 6)));
    const int n = d.crossing_count();
    for (int r = 0; r + 1 < n; ++r)
      for (int q = -n - 4; q <= 2 * n + 4; ++q) {
        const auto a = differential(d, r, q);
        const auto b = differential(d, r + 1, q);
        if (a.cols() == 0 || b.rows() == 0) continue;
        CHECK(b.multiply(a).is_zero());
      }
  }
}

TEST_CASE("frozen tables") {
  const auto t = khovanov_full(parse_braid({2, {1, 1, 1}}), Ring::integers());
  CHECK(t.window().is_full());
  CHECK(t.groups().size() == 5);
  CHECK(t.known(0, 1) == free(1));
  CHECK(t.known(0, 3) == free(1));
  CHECK(t.known(2, 5) == free(1));
  CHECK(t.known(3, 9) == free(1));
  CHECK(t.known(3, 7) == tor(0, 2));
  CHECK(t.total_rank() == 4);

  const auto u = khovanov_full(LinkDiagram::unknot(), Ring::integers());
  CHECK(u.groups().size() == 2);
  CHECK(u.known(0, 1) == free(1));
  CHECK(u.known(0, -1) == free(1));

  const auto hopf = khovanov_full(parse_braid({2, {1, 1}}), Ring::integers());
  CHECK(hopf.groups().size() == 4);
  for (auto ij : {std::pair{0, 0}, {0, 2}, {2, 4}, {2, 6}}) CHECK(hopf.known(ij.first, ij.second) == free(1));

  const auto f8 = khovanov_full(parse_braid({3, {1, -2, 1, -2}}), Ring::integers());
  CHECK(f8.total_rank() == 6);
  CHECK(f8.known(0, 1) == free(1));
  CHECK(f8.known(0, -1) == free(1));
  CHECK(f8.known(-2, -5) == free(1));
  CHECK(f8.known(2, 5) == free(1));
  CHECK(f8.known(-1, -1) == free(1));
  CHECK(f8.known(1, 1) == free(1));
  CHECK(f8.known(-1, -3) == tor(0, 2));
  CHECK(f8.known(2, 3) == tor(0, 2));

  CHECK_THROWS_AS(khovanov_full(LinkDiagram(), Ring::integers()), PreconditionError);
}

TEST_CASE("engine against the dense oracle") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const auto b = oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 8));
    const auto d = parse_braid(b);
    CAPTURE(to_braid_text(b));
    CHECK(as_map(khovanov_full(d, Ring::integers())) == oracle::khovanov(d));
    CHECK(as_map(khovanov_full(d, Ring::mod(2))) == oracle::khovanov(d, 2));
    CHECK(as_map(khovanov_full(d, Ring::mod(3))) == oracle::khovanov(d, 3));
  }
  const auto c4 = catalog_lookup("4-cycle").diagram();
  CHECK(as_map(khovanov_full(c4, Ring::integers())) == oracle::khovanov(c4));
  const auto pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(as_map(khovanov_full(pd, Ring::integers())) == oracle::khovanov(pd));
}

TEST_CASE("windows agree with the full computation") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = parse_braid(oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 7)));
    const auto full = khovanov_full(d, Ring::integers());
    const int lo = -d.n_minus() - 1, hi = d.n_plus() + 1;
    const int a = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    const int b = a + static_cast<int>(rng() % 3);
    const auto w = khovanov_window(d, a, b, Ring::integers());
    for (int i = a; i <= b; ++i)
      for (int j = -3 * d.crossing_count() - 6; j <= 3 * d.crossing_count() + 6; ++j) {
        REQUIRE(w.at(i, j).has_value());
        CHECK(*w.at(i, j) == full.known(i, j));
      }
    CHECK(w.window().lo.has_value() == (a > -d.n_minus()));
    CHECK(w.window().hi.has_value() == (b < d.n_plus()));
    CHECK_FALSE(w.at(b + 1, 0).has_value() == w.window().hi.has_value());
  }
  CHECK_THROWS_AS(khovanov_window(parse_braid({2, {1}}), 2, 1, Ring::integers()), PreconditionError);
}

TEST_CASE("mirror duality") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = parse_braid(oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 6)));
    const auto a = khovanov_full(d, Ring::rationals());
    const auto b = khovanov_full(mirror(d), Ring::rationals());
    CHECK(a.groups().size() == b.groups().size());
    for (const auto& [k, g] : a.groups()) CHECK(b.known(-k.first, -k.second) == g);
    // over Z the torsion moves down one homological degree
    const auto za = khovanov_full(d, Ring::integers());
    const auto zb = khovanov_full(mirror(d), Ring::integers());
    for (const auto& [k, g] : za.groups())
      if (!g.torsion.empty()) CHECK(zb.known(-k.first + 1, -k.second).torsion == g.torsion);
  }
}

TEST_CASE("universal coefficients over Z/2") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = parse_braid(oracle::random_braid(rng, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 7)));
    const auto z = khovanov_full(d, Ring::integers());
    const auto f = khovanov_full(d, Ring::mod(2));
    std::map<std::pair<int, int>, std::int64_t> expect;
    for (const auto& [k, g] : z.groups()) {
      std::int64_t even = 0;
      for (const auto& t : g.torsion) even += (t % 2 == 0);
      expect[k] += g.freeRank + even;
      expect[{k.first - 1, k.second}] += even;
    }
    for (const auto& [k, v] : expect) CHECK(f.known(k.first, k.second).freeRank == v);
    for (const auto& [k, g] : f.groups()) CHECK(expect.count(k));
  }
}

TEST_CASE("a split unknot doubles the table") {
  const auto t = parse_braid({2, {1, 1, 1}});
  const auto a = khovanov_full(t, Ring::rationals());
  const auto b = khovanov_full(disjoint_union(t, LinkDiagram::unknot()), Ring::rationals());
  for (const auto& [k, g] : b.groups())
    CHECK(g.freeRank == a.known(k.first, k.second - 1).freeRank + a.known(k.first, k.second + 1).freeRank);
  CHECK(b.total_rank() == 2 * a.total_rank());
}

TEST_CASE("Euler characteristic is the Jones polynomial up to normalization") {
  // Trefoil: q + q^3 + q^5 - q^9 for the unnormalized version
  const auto e = khovanov_full(parse_braid({2, {1, 1, 1}}), Ring::rationals()).graded_euler();
  CHECK(e == std::map<int, std::int64_t>{{1, 1}, {3, 1}, {5, 1}, {9, -1}});
}

TEST_CASE("workers and verification do not change the answer") {
  const auto d = parse_braid({3, {1, 2, 1, 2, 1, 2, 1, 2}});
  KhOptions one, four;
  four.workers = 4;
  four.verifySquareZero = true;
  CHECK(khovanov_full(d, Ring::integers(), one) == khovanov_full(d, Ring::integers(), four));
}

TEST_CASE("resource limits") {
  KhOptions tight;
  tight.maxStatesPerLevel = 3;
  CHECK_THROWS_AS(khovanov_full(parse_braid({2, {1, 1, 1, 1}}), Ring::integers(), tight), ResourceError);
}
