#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "khopos/linalg.hpp"
#include "oracles.hpp"

using namespace khopos;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

oracle::Dense dense_of(const SparseExactMatrix& m) {
  oracle::Dense d;
  for (const auto& row : m.to_dense()) {
    d.emplace_back();
    for (auto v : row) d.back().emplace_back(static_cast<long>(v));
  }
  return d;
}

SparseExactMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi, double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
  for (auto& row : a)
    for (auto& x : row) x = u(rng) < density ? val(rng) : 0;
  return SparseExactMatrix::from_dense(a);
}

}  // namespace

TEST_CASE("matrix construction") {
  const auto m = SparseExactMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, -1}, {1, 0, 4}, {1, 0, -4}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 1) == 5);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.dump() == "2 3\n0 1 5\n1 2 -1\n");
  CHECK(m.transpose().at(1, 0) == 5);
  CHECK_THROWS_AS(SparseExactMatrix::from_triplets(1, 1, {{1, 0, 1}}), std::logic_error);
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(SparseExactMatrix::from_dense({{2, 4}, {6, 8}})) == z({2, 4}));
  CHECK(smith_normal_form(SparseExactMatrix::identity(4)) == z({1, 1, 1, 1}));
  CHECK(smith_normal_form(SparseExactMatrix(3, 3)).empty());
  CHECK(smith_normal_form(SparseExactMatrix::from_dense({{2, 0}, {0, 3}})) == z({1, 6}));
  CHECK(smith_normal_form(SparseExactMatrix::from_dense({{4, 0, 0}, {0, 6, 0}, {0, 0, 10}})) == z({2, 2, 60}));
}

TEST_CASE("rank over fields") {
  CHECK(rank_over_field(SparseExactMatrix::identity(3), Ring::rationals()) == 3);
  CHECK(rank_over_field(SparseExactMatrix::from_dense({{2}}), Ring::mod(2)) == 0);
  CHECK(rank_over_field(SparseExactMatrix::from_dense({{2}}), Ring::mod(3)) == 1);
  CHECK(rank_over_field(SparseExactMatrix::from_dense({{2, 4}, {1, 2}}), Ring::rationals()) == 1);
}

TEST_CASE("rings") {
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Q") == Ring::rationals());
  CHECK(Ring::parse("Z/2") == Ring::mod(2));
  CHECK(Ring::parse("Z7") == Ring::mod(7));
  CHECK(Ring::mod(5).name() == "Z/5");
  CHECK_THROWS(Ring::mod(4));
  CHECK_THROWS(Ring::parse("R"));
}

TEST_CASE("homology of a pair") {
  const SparseExactMatrix in(5, 0), out(0, 5);
  const auto g = homology_of_pair(in, out, Ring::integers());
  CHECK(g.freeRank == 5);
  CHECK(g.torsion.empty());
  const auto t = homology_of_pair(SparseExactMatrix::from_dense({{2}}), SparseExactMatrix(0, 1), Ring::integers());
  CHECK(t.freeRank == 0);
  CHECK(t.torsion == z({2}));
  CHECK(t.to_string() == "Z/2");
  const auto q = homology_of_pair(SparseExactMatrix::from_dense({{2}}), SparseExactMatrix(0, 1), Ring::rationals());
  CHECK(q.is_zero());
  const auto f2 = homology_of_pair(SparseExactMatrix::from_dense({{2}}), SparseExactMatrix(0, 1), Ring::mod(2));
  CHECK(f2.freeRank == 1);
  CHECK_THROWS_AS(homology_of_pair(SparseExactMatrix::identity(1), SparseExactMatrix::identity(1), Ring::integers()),
                  std::logic_error);
  CHECK_THROWS_AS(homology_of_pair(SparseExactMatrix(2, 1), SparseExactMatrix(1, 3), Ring::integers()), std::logic_error);
}

TEST_CASE("invariant factor normalization") {
  CHECK(invariant_factors(z({6, 4})) == z({2, 12}));
  CHECK(invariant_factors(z({-3, 1, 0, 9})) == z({1, 3, 9}));
}

TEST_CASE("group formatting") {
  AbelianGroup g{2, z({2, 2, 4})};
  CHECK(g.to_string() == "Z^2+Z/2^2+Z/4");
  CHECK(AbelianGroup{}.to_string() == "0");
}

TEST_CASE("property: SNF against gcd of minors") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    const auto m = random_matrix(rng, r, c, -9, 9, 0.7);
    const auto ref = oracle::snf_by_minors(dense_of(m));
    CHECK(smith_normal_form(m) == ref);
    CHECK(oracle::snf_dense(dense_of(m)) == ref);
    CHECK(rank_over_field(m, Ring::rationals()) == static_cast<std::int64_t>(ref.size()));
    CHECK(rank_over_field(m, Ring::mod(3)) == oracle::rank_mod(dense_of(m), 3));
  }
}

TEST_CASE("property: larger sparse matrices against the dense oracle") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 5 + static_cast<int>(rng() % 30), c = 5 + static_cast<int>(rng() % 30);
    const auto m = random_matrix(rng, r, c, -3, 3, 0.15);
    const auto ref = oracle::snf_dense(dense_of(m));
    CHECK(smith_normal_form(m) == ref);
    const auto rq = rank_over_field(m, Ring::rationals());
    CHECK(rq == static_cast<std::int64_t>(ref.size()));
    CHECK(rank_over_field(m, Ring::mod(2)) == oracle::rank_mod(dense_of(m), 2));
    // rank-nullity on the transpose as well
    CHECK(rank_over_field(m.transpose(), Ring::rationals()) == rq);
  }
}

TEST_CASE("entries beyond 64 bits are handled") {
  // repeated elimination doubles the entries; they must be promoted, not wrap
  const int n = 70;
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (i + 1 < n) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 2;
    a[static_cast<std::size_t>(i)][0] += (i == 0 ? 0 : 1);
  }
  a[n - 1][n - 1] = 3;
  const auto m = SparseExactMatrix::from_dense(a);
  const auto ref = oracle::snf_dense(dense_of(m));
  CHECK(smith_normal_form(m) == ref);
}
