#include "hf/analyzed.hpp"
#include "hf/corpus.hpp"
#include "hf/generators.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hf;

TEST_SUITE("generators") {
  TEST_CASE("counts for small diagrams") {
    CHECK(enumerate_generators(s3_g1()).size() == 1);
    CHECK(enumerate_generators(lens(5, 1)).size() == 5);
    CHECK(enumerate_generators(connected_sum(s1s2_g1(), s1s2_g1())).size() == 4);
  }

  TEST_CASE("count equals the permanent of the intersection matrix") {
    auto corpus = standard_corpus();
    std::vector<HeegaardDiagram> diagrams;
    for (const auto& n : corpus) diagrams.push_back(build(n));
    diagrams.push_back(connected_sum(lens(3, 1), lens(2, 1)));
    diagrams.push_back(stabilize(connected_sum(s1s2_g1(), lens(3, 2))));
    for (const auto& d : diagrams) {
      const AnalyzedDiagram a(d);
      if (a.point_count() > 8) continue;
      CHECK(BigInt(a.generators().size()) == oracle::permanent(oracle::intersection_counts(a)));
    }
  }

  TEST_CASE("generators are sorted, distinct and well formed") {
    const AnalyzedDiagram a(s1s2_wind());
    const auto& gens = a.generators();
    CHECK(gens.size() == 8);
    for (std::size_t i = 1; i < gens.size(); ++i) CHECK(gens[i - 1] < gens[i]);
    for (const auto& x : gens) {
      std::set<int> betas(x.sigma.begin(), x.sigma.end());
      CHECK(betas.size() == static_cast<std::size_t>(a.genus()));
      for (std::size_t i = 0; i < x.points.size(); ++i)
        CHECK(a.quadrants().points[static_cast<std::size_t>(x.points[i])].alpha_curve == static_cast<int>(i));
    }
  }

  TEST_CASE("stabilization appends the new point") {
    for (const auto& n : standard_corpus()) {
      const auto d = build(n);
      const auto s = stabilize(d);
      const auto qd = quadrants(d);
      const auto qs = quadrants(s);
      const std::string c = stabilization_point_id(d);
      std::set<std::vector<std::string>> expected;
      for (const auto& x : enumerate_generators(qd, d.genus)) {
        auto ids = generator_ids(qd, x);
        ids.push_back(c);
        std::sort(ids.begin(), ids.end());
        expected.insert(ids);
      }
      std::set<std::vector<std::string>> actual;
      for (const auto& x : enumerate_generators(qs, s.genus)) actual.insert(generator_ids(qs, x));
      CHECK(actual == expected);
    }
  }

  TEST_CASE("lookup by identifiers") {
    const AnalyzedDiagram a(gsph(2));
    CHECK(generator_label(a.quadrants(), a.generator({"theta", "g2.eta"})) == "{g2.eta,theta}");
    CHECK_THROWS(a.generator({"theta", "eta"}));
  }
}
