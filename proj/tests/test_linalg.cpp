#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "extalg/gf.hpp"

using namespace extalg;

namespace {

Mat random_mat(std::mt19937& rng, size_t rows, size_t cols, uint32_t p) {
  Mat m(rows, cols, p);
  std::uniform_int_distribution<uint32_t> coin(0, p - 1);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.set(i, j, coin(rng));
  return m;
}

std::vector<uint32_t> random_vec(std::mt19937& rng, size_t n, uint32_t p) {
  std::vector<uint32_t> v(n);
  std::uniform_int_distribution<uint32_t> coin(0, p - 1);
  for (auto& x : v) x = coin(rng);
  return v;
}

// every solution of A x = b, by exhaustion; only for tiny systems
std::vector<std::vector<uint32_t>> all_solutions(const Mat& a, const std::vector<uint32_t>& b) {
  size_t n = a.cols();
  uint32_t p = a.p();
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> x(n, 0);
  while (true) {
    if (a.apply(x) == b) out.push_back(x);
    size_t i = 0;
    while (i < n && ++x[i] == p) x[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("construction and identity") {
  Mat id = Mat::identity(4, 2);
  CHECK(id.rows() == 4);
  CHECK(id.cols() == 4);
  CHECK(id.rank() == 4);
  CHECK(id.mul(id) == id);
  Mat z(3, 5, 3);
  CHECK(z.is_zero());
  CHECK(z.rank() == 0);
  Mat m = Mat::from_rows({{1, 2}, {2, 2}}, 2, 3);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.rank() == 2);
  // (2, 4) is a scalar multiple of (1, 2) mod 3
  CHECK(Mat::from_rows({{1, 2}, {2, 1}}, 2, 3).rank() == 1);
}

TEST_CASE("arithmetic mod p") {
  Mat m(2, 2, 3);
  m.set(0, 0, 2);
  m.add_at(0, 0, 2);  // 4 = 1 mod 3
  CHECK(m.at(0, 0) == 1);
  Mat s = m.scale(2);
  CHECK(s.at(0, 0) == 2);
  CHECK(m.add(m) == s);
}

TEST_CASE("rank plus nullity") {
  std::mt19937 rng(7);
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat a = random_mat(rng, 5, 8, p);
      Mat ns = a.null_space();
      CHECK(a.rank() + ns.rows() == 8);
      for (size_t i = 0; i < ns.rows(); ++i) {
        auto prod = a.apply(ns.row(i));
        CHECK(std::all_of(prod.begin(), prod.end(), [](uint32_t x) { return x == 0; }));
      }
      // null space rows are independent
      CHECK(ns.rank() == ns.rows());
    }
  }
}

TEST_CASE("rref is idempotent and rank-preserving") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_mat(rng, 6, 6, 2);
    std::vector<size_t> piv;
    Mat r = a.rref(&piv);
    CHECK(r.rank() == a.rank());
    CHECK(piv.size() == a.rank());
    Mat r2 = r.rref(nullptr);
    CHECK(r2 == r);
  }
}

TEST_CASE("transpose involutes and multiplies contravariantly") {
  std::mt19937 rng(13);
  Mat a = random_mat(rng, 4, 6, 3);
  Mat b = random_mat(rng, 6, 5, 3);
  CHECK(a.transpose().transpose() == a);
  CHECK(a.mul(b).transpose() == b.transpose().mul(a.transpose()));
}

TEST_CASE("solve_any finds a solution exactly when one exists") {
  std::mt19937 rng(17);
  for (uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      Mat a = random_mat(rng, 4, 6, p);
      auto x = random_vec(rng, 6, p);
      auto b = a.apply(x);
      auto s = a.solve_any(b);
      REQUIRE(s.has_value());
      CHECK(a.apply(*s) == b);
    }
    // an inconsistent system: 0 x = 1
    Mat z(1, 3, p);
    CHECK(!z.solve_any({1}).has_value());
  }
}

TEST_CASE("solve_lex_min matches exhaustive search") {
  std::mt19937 rng(19);
  for (uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 25; ++trial) {
      Mat a = random_mat(rng, 2, 4, p);
      auto b = a.apply(random_vec(rng, 4, p));
      for (bool rev : {false, true}) {
        auto got = a.solve_lex_min(b, rev);
        REQUIRE(got.has_value());
        auto sols = all_solutions(a, b);
        auto key = [&](const std::vector<uint32_t>& v) {
          std::vector<uint32_t> k = v;
          if (rev) std::reverse(k.begin(), k.end());
          return k;
        };
        auto best = *std::min_element(
            sols.begin(), sols.end(),
            [&](const auto& u, const auto& v) { return key(u) < key(v); });
        CHECK(*got == best);
      }
    }
  }
}

TEST_CASE("subspace insertion and membership") {
  Subspace s(4, 2);
  CHECK(s.insert({1, 1, 0, 0}));
  CHECK(s.insert({0, 0, 1, 1}));
  CHECK(!s.insert({1, 1, 1, 1}));  // dependent
  CHECK(s.rank() == 2);
  CHECK(s.contains({1, 1, 1, 1}));
  CHECK(!s.contains({1, 0, 0, 0}));
  auto r = s.reduce({1, 1, 1, 0});
  CHECK(!s.contains({1, 1, 1, 0}));
  // the reduction differs from the input by a subspace element,
  // so adjoining it is the same as adjoining the original vector
  Subspace t = s;
  CHECK(t.insert(r));
  CHECK(t.contains({1, 1, 1, 0}));
}

TEST_CASE("subspace over GF(3)") {
  Subspace s(3, 3);
  CHECK(s.insert({1, 2, 0}));
  CHECK(!s.insert({2, 1, 0}));  // scalar multiple
  CHECK(s.insert({0, 0, 1}));
  CHECK(s.rank() == 2);
  CHECK(s.basis_row(0).size() == 3);
}
