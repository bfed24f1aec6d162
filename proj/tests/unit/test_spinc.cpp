#include "hf/corpus.hpp"
#include "hf/measures.hpp"
#include "hf/spinc.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hf;

namespace {

std::vector<std::size_t> sizes(const std::vector<SpincClass>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.members.size());
  return out;
}

}  // namespace

TEST_SUITE("spinc") {
  TEST_CASE("partition examples") {
    const AnalyzedDiagram l(lens(5, 1));
    CHECK(sizes(spinc_partition(l)) == std::vector<std::size_t>(5, 1));
    const AnalyzedDiagram s(s1s2_g1());
    const auto cs = spinc_partition(s);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].members.size() == 2);
    CHECK(cs[0].divisor == 0);
    CHECK(cs[0].grading(s.generator({"theta"})) == 1);
    CHECK(cs[0].grading(s.generator({"eta"})) == 0);
  }

  TEST_CASE("lens spaces have p classes") {
    for (int p = 2; p <= 7; ++p)
      for (int q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const AnalyzedDiagram a(lens(p, q));
        const auto cs = spinc_partition(a);
        CHECK(cs.size() == static_cast<std::size_t>(p));
        for (const auto& c : cs) {
          CHECK(c.divisor == 0);
          CHECK(c.gradings == std::vector<BigInt>{0});
        }
      }
  }

  TEST_CASE("partition matches connecting domain solvability") {
    for (const auto& n : standard_corpus()) {
      const AnalyzedDiagram a(build(n));
      const auto cs = spinc_partition(a);
      std::size_t total = 0;
      for (const auto& c : cs) total += c.members.size();
      CHECK(total == a.generators().size());
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
          for (const auto& x : cs[i].members)
            for (const auto& y : cs[j].members) {
              CHECK(connecting_domain(a, x, y).has_value() == (i == j));
              CHECK((spinc_difference(a, x, y) == IntVector(a.point_count())) == (i == j));
            }
    }
  }

  TEST_CASE("gradings of a connected sum") {
    const AnalyzedDiagram a(connected_sum(s1s2_g1(), s1s2_g1()));
    const auto cs = spinc_partition(a);
    REQUIRE(cs.size() == 1);
    auto gr = cs[0].gradings;
    std::sort(gr.begin(), gr.end());
    CHECK(gr == std::vector<BigInt>{0, 1, 1, 2});
  }

  TEST_CASE("grading differences follow connecting domains") {
    for (const auto& n : standard_corpus()) {
      const AnalyzedDiagram a(build(n));
      for (const auto& c : spinc_partition(a))
        for (const auto& x : c.members)
          for (const auto& y : c.members) {
            const BigInt diff = c.grading(x) - c.grading(y) - maslov_index(a, *connecting_domain(a, x, y));
            if (c.divisor == 0)
              CHECK(diff == 0);
            else
              CHECK(diff % c.divisor == 0);
          }
    }
  }

  TEST_CASE("wound diagram has divisor two on both classes") {
    const AnalyzedDiagram w(s1s2_wind());
    const auto cs = spinc_partition(w);
    REQUIRE(cs.size() == 2);
    for (const auto& c : cs) {
      CHECK(c.divisor == 2);
      CHECK(grading_divisor(w, c) == 2);
      CHECK(relative_gradings(w, c) == c.gradings);
    }
  }
}
