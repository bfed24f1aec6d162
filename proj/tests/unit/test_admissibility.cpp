#include "hf/admissibility.hpp"
#include "hf/corpus.hpp"
#include "hf/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hf;

namespace {

IntVector ints(std::initializer_list<long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("admissibility") {
  TEST_CASE("lens spaces are vacuously admissible") {
    for (int p = 2; p <= 7; ++p) {
      const AnalyzedDiagram a(lens(p, 1));
      const auto weak = weak_admissible(a);
      CHECK(weak.verdict);
      REQUIRE(weak.certificate);
      CHECK(verify_certificate(a, AdmissibilityKind::Weak, nullptr, *weak.certificate));
      for (const auto& c : spinc_partition(a)) {
        const auto strong = strong_admissible(a, c);
        CHECK(strong.verdict);
        REQUIRE(strong.certificate);
        CHECK(verify_certificate(a, AdmissibilityKind::Strong, &c, *strong.certificate));
      }
    }
  }

  TEST_CASE("s1s2_g1 is weakly and strongly admissible") {
    const AnalyzedDiagram s(s1s2_g1());
    const auto weak = weak_admissible(s);
    CHECK(weak.verdict);
    CHECK_FALSE(weak.witness);
    REQUIRE(weak.certificate);
    CHECK((*weak.certificate)[0] == (*weak.certificate)[1]);
    const auto cs = spinc_partition(s);
    const auto strong = strong_admissible(s, cs[0]);
    CHECK(strong.verdict);
    CHECK(strong.positive_part);
    CHECK(strong.zero_part);
    REQUIRE(strong.certificate);
    CHECK(verify_certificate(s, AdmissibilityKind::Strong, &cs[0], *strong.certificate));
  }

  TEST_CASE("s1s2_bad fails weak admissibility") {
    const AnalyzedDiagram b(s1s2_bad());
    const auto weak = weak_admissible(b);
    CHECK_FALSE(weak.verdict);
    REQUIRE(weak.witness);
    CHECK(*weak.witness == ints({0, 2, 1}));
    CHECK(verify_witness(b, AdmissibilityKind::Weak, nullptr, *weak.witness));
    CHECK_THROWS_AS(area_certificate(b, AdmissibilityKind::Weak), NotAdmissible);
    // The box search finds the same kind of domain.
    CHECK(oracle::nonnegative_periodic_in_box(b, 2).has_value());
  }

  TEST_CASE("wound diagram fails strong admissibility in one class") {
    const AnalyzedDiagram w(s1s2_wind());
    CHECK_FALSE(weak_admissible(w).verdict);
    const auto cs = spinc_partition(w);
    REQUIRE(cs.size() == 2);
    const auto first = strong_admissible(w, cs[0]);
    CHECK(first.verdict);
    REQUIRE(first.certificate);
    CHECK(verify_certificate(w, AdmissibilityKind::Strong, &cs[0], *first.certificate));
    const auto second = strong_admissible(w, cs[1]);
    CHECK_FALSE(second.verdict);
    CHECK_FALSE(second.positive_part);
    REQUIRE(second.witness);
    CHECK(verify_witness(w, AdmissibilityKind::Strong, &cs[1], *second.witness));
    CHECK_THROWS_AS(area_certificate(w, AdmissibilityKind::Strong, &cs[1]), NotAdmissible);
  }

  TEST_CASE("weak verdict agrees with a box search for nonnegative periodic domains") {
    for (const auto& n : standard_corpus()) {
      const AnalyzedDiagram a(build(n));
      if (a.region_count() > 7) continue;
      CAPTURE(n.str());
      CHECK(weak_admissible(a).verdict == !oracle::nonnegative_periodic_in_box(a, 3).has_value());
    }
  }

  TEST_CASE("forged witnesses and certificates are rejected") {
    const AnalyzedDiagram s(s1s2_g1());
    CHECK_FALSE(verify_witness(s, AdmissibilityKind::Weak, nullptr, ints({1, -1, 0})));
    CHECK_FALSE(verify_witness(s, AdmissibilityKind::Weak, nullptr, ints({1, 0, 0})));
    CHECK_FALSE(verify_witness(s, AdmissibilityKind::Weak, nullptr, ints({0, 0, 0})));
    CHECK_FALSE(verify_certificate(s, AdmissibilityKind::Weak, nullptr, {Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
    CHECK(verify_certificate(s, AdmissibilityKind::Weak, nullptr, {Rational(1, 4), Rational(1, 4), Rational(1, 2)}));
  }
}
