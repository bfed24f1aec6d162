#include "hf/exactla.hpp"
#include "hf/lp.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hf;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntVector ints(std::initializer_list<long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("hermite_solve identity and parity") {
    auto one = hermite_solve(IntMatrix::from_rows({ints({1})}, 1), ints({0}));
    REQUIRE(one);
    CHECK(one->particular == ints({0}));
    CHECK(one->kernel.empty());
    CHECK_FALSE(hermite_solve(IntMatrix::from_rows({ints({2})}, 1), ints({1})));
  }

  TEST_CASE("hermite_solve rank deficient system is canonical") {
    const IntMatrix a = IntMatrix::from_rows({ints({1, 1}), ints({1, 1})}, 2);
    auto s = hermite_solve(a, ints({2, 2}));
    REQUIRE(s);
    CHECK(a.apply(s->particular) == ints({2, 2}));
    REQUIRE(s->kernel.size() == 1);
    CHECK(s->kernel[0] == ints({1, -1}));
    // Reduced modulo the kernel: first coordinate in [0, 1).
    CHECK(s->particular == ints({0, 2}));
    auto again = hermite_solve(a, ints({2, 2}));
    CHECK(again->particular == s->particular);
  }

  TEST_CASE("hermite_solve agrees with box search") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      const IntMatrix a = random_matrix(rng, rows, cols, 3);
      IntVector b(rows);
      for (auto& v : b) v = static_cast<long>(rng() % 7) - 3;
      const auto fast = hermite_solve(a, b);
      const auto slow = oracle::box_solution(a, b, -6, 6);
      if (slow) CHECK(fast.has_value());
      if (fast) {
        CHECK(a.apply(fast->particular) == b);
        CHECK(fast->kernel.size() == cols - oracle::rational_rank(a));
        for (const auto& k : fast->kernel) CHECK(a.apply(k) == IntVector(rows));
      }
    }
  }

  TEST_CASE("smith invariants match determinantal divisors") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
      const IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
      CHECK(smith_invariants(m) == oracle::determinantal_invariants(m));
      CHECK(rank(m) == oracle::rational_rank(m));
    }
  }

  TEST_CASE("smith invariants with large pivots stay exact") {
    IntMatrix m(2, 2);
    m(0, 0) = BigInt("123456789012345678901234567890");
    m(0, 1) = BigInt("987654321098765432109876543210");
    m(1, 0) = 3;
    m(1, 1) = 7;
    CHECK(smith_invariants(m) == oracle::determinantal_invariants(m));
  }

  TEST_CASE("hermite normal form is canonical for the lattice") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
      const IntMatrix m = random_matrix(rng, 3, 4, 4);
      const IntMatrix h = hermite_normal_form(m);
      // Mixing rows by a unimodular matrix leaves the HNF unchanged.
      IntMatrix mixed = m;
      for (std::size_t j = 0; j < 4; ++j) {
        mixed(0, j) += 2 * m(1, j) - m(2, j);
        mixed(2, j) += mixed(0, j);
      }
      CHECK(hermite_normal_form(mixed) == h);
      std::size_t last = 0;
      for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (h(r, c) == 0) ++c;
        CHECK(h(r, c) > 0);
        if (r > 0) CHECK(c > last);
        for (std::size_t up = 0; up < r; ++up) CHECK((h(up, c) >= 0 && h(up, c) < h(r, c)));
        last = c;
      }
    }
  }

  TEST_CASE("kernel basis spans the integer kernel") {
    const IntMatrix m = IntMatrix::from_rows({ints({2, 4, 6})}, 3);
    const auto k = kernel_basis(m);
    CHECK(k.size() == 2);
    oracle::for_each_box(3, -3, 3, [&](const IntVector& v) {
      if (m.apply(v) != IntVector(1)) return;
      CHECK(reduce_modulo(v, IntMatrix::from_rows(k, 3)) == IntVector(3));
    });
  }

  TEST_CASE("primitive integer vector") {
    CHECK(primitive_integer_vector({Rational(1, 2), Rational(3, 4)}) == ints({2, 3}));
    CHECK(primitive_integer_vector({Rational(-2), Rational(4)}) == ints({-1, 2}));
    CHECK(primitive_integer_vector({Rational(0)}) == ints({0}));
  }
}

TEST_SUITE("lp") {
  TEST_CASE("bounded, unbounded and infeasible") {
    LinearProgram lp;
    lp.variables = 1;
    lp.objective = {1};
    lp.add({1}, Relation::LessEqual, 1);
    lp.add({1}, Relation::GreaterEqual, 0);
    auto r = lp_optimize(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(r));
    CHECK(std::get<LpOptimal>(r).value == 1);
    CHECK(std::get<LpOptimal>(r).point == RatVector{1});

    LinearProgram open;
    open.variables = 1;
    open.objective = {1};
    open.add({1}, Relation::GreaterEqual, 0);
    CHECK(std::holds_alternative<LpUnbounded>(lp_optimize(open)));

    LinearProgram empty;
    empty.variables = 1;
    empty.add({1}, Relation::GreaterEqual, 1);
    empty.add({1}, Relation::LessEqual, 0);
    CHECK(std::holds_alternative<LpInfeasible>(lp_optimize(empty)));
    CHECK_FALSE(lp_feasible_point(empty));
  }

  TEST_CASE("two-variable programs match vertex enumeration") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
      LinearProgram lp;
      lp.variables = 2;
      lp.objective = {Rational(coef(rng)), Rational(coef(rng))};
      lp.maximize = rng() % 2;
      // A box keeps every program bounded.
      lp.add({1, 0}, Relation::LessEqual, 5);
      lp.add({1, 0}, Relation::GreaterEqual, -5);
      lp.add({0, 1}, Relation::LessEqual, 5);
      lp.add({0, 1}, Relation::GreaterEqual, -5);
      for (int k = 0; k < 3; ++k)
        lp.add({Rational(coef(rng)), Rational(coef(rng))}, k == 2 && rng() % 4 == 0 ? Relation::Equal : Relation::LessEqual,
               Rational(coef(rng), 1 + static_cast<int>(rng() % 3)));
      const auto r = lp_optimize(lp);
      const auto best = oracle::vertex_optimum_2d(lp);
      if (!best) {
        CHECK(std::holds_alternative<LpInfeasible>(r));
        continue;
      }
      REQUIRE(std::holds_alternative<LpOptimal>(r));
      const auto& opt = std::get<LpOptimal>(r);
      CHECK(opt.value == *best);
      for (const auto& c : lp.constraints) CHECK(satisfies(c, opt.point));
      CHECK(lp.objective[0] * opt.point[0] + lp.objective[1] * opt.point[1] == opt.value);
      ++compared;
    }
    CHECK(compared > 100);
  }

  TEST_CASE("degenerate program terminates under Bland's rule") {
    // Classic cycling example for largest-coefficient pivoting.
    LinearProgram lp;
    lp.variables = 4;
    lp.objective = {Rational(3, 4), -150, Rational(1, 50), -6};
    lp.add({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::LessEqual, 0);
    lp.add({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::LessEqual, 0);
    lp.add({0, 0, 1, 0}, Relation::LessEqual, 1);
    for (std::size_t i = 0; i < 4; ++i) {
      RatVector e(4);
      e[i] = 1;
      lp.add(e, Relation::GreaterEqual, 0);
    }
    const auto r = lp_optimize(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(r));
    CHECK(std::get<LpOptimal>(r).value == Rational(1, 20));
  }
}
