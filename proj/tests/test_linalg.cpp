#include <doctest.h>

#include "dkh/linalg.hpp"
#include "oracles.hpp"

using namespace dkh;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& a) {
  SparseMatrix m;
  m.rows = a.size();
  m.cols = a.empty() ? 0 : a[0].size();
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (a[r][c]) m.entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), a[r][c]});
  return m;
}

std::vector<mpz_class> factors(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("canonicalize merges and drops zeros") {
  SparseMatrix m;
  m.rows = m.cols = 2;
  m.entries = {{1, 0, 2}, {0, 1, 3}, {1, 0, -2}, {0, 1, 1}};
  m.canonicalize();
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].value == 4);
}

TEST_CASE("multiply") {
  SparseMatrix p = multiply(dense({{1, 2}, {0, 1}}), dense({{1, 0}, {3, 1}}));
  p.canonicalize();
  SparseMatrix want = dense({{7, 2}, {3, 1}});
  want.canonicalize();
  CHECK(p.entries.size() == want.entries.size());
  for (std::size_t k = 0; k < p.entries.size(); ++k) {
    CHECK(p.entries[k].row == want.entries[k].row);
    CHECK(p.entries[k].col == want.entries[k].col);
    CHECK(p.entries[k].value == want.entries[k].value);
  }
}

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(dense({{2, 0}, {0, 3}})).factors == factors({1, 6}));
  CHECK(smith_normal_form(dense({{2, 4}, {6, 8}})).factors == factors({2, 4}));
  CHECK(smith_normal_form(dense({{0, 0}, {0, 0}})).factors.empty());
  CHECK(smith_normal_form(dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).factors == factors({2, 6, 12}));
  CHECK(smith_normal_form_dense({{mpz_class(4), mpz_class(6)}}).factors == factors({2}));
}

TEST_CASE("ranks agree with dense elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long>> a(5, std::vector<long>(6));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 3 == 0 ? static_cast<long>(rng() % 7) - 3 : 0;
    std::vector<std::vector<mpq_class>> q(5, std::vector<mpq_class>(6));
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 6; ++c) q[r][c] = a[r][c];
    std::size_t want = oracle::dense_rank(q);
    CHECK(rational_rank(dense(a)) == want);
    CHECK(smith_normal_form(dense(a)).rank() == want);
  }
}

TEST_CASE("filtered reduction") {
  // Element 2 bounds element 0; element 1 is a cycle that survives.
  FilteredReduction r(3, {{}, {}, {{0, 1}}}, true);
  REQUIRE(r.essential() == std::vector<std::size_t>{1});
  CHECK(r.coordinates({{1, mpq_class(5)}}) == std::vector<mpq_class>{5});
  CHECK(r.coordinates({{0, mpq_class(2)}}) == std::vector<mpq_class>{0});
  CHECK_THROWS(r.coordinates({{2, mpq_class(1)}}));

  // A boundary d(e2) = e0 - e1 identifies the two cycles.
  FilteredReduction s(3, {{}, {}, {{0, 1}, {1, -1}}}, true);
  REQUIRE(s.essential().size() == 1);
  auto a = s.coordinates({{0, mpq_class(1)}}), b = s.coordinates({{1, mpq_class(1)}});
  CHECK(a == b);
  CHECK(a[0] != 0);
}

}
