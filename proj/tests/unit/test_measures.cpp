#include "hf/corpus.hpp"
#include "hf/errors.hpp"
#include "hf/hfd.hpp"
#include "hf/measures.hpp"

#include <doctest.h>

using namespace hf;

namespace {

IntVector ints(std::initializer_list<long> v) { return IntVector(v.begin(), v.end()); }

IntVector plus_sigma(IntVector v, long k) {
  for (auto& c : v) c += k;
  return v;
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("euler measure of regions and the fundamental class") {
    const AnalyzedDiagram s(s1s2_g1());
    CHECK(euler_measure(s, ints({1, 0, 0})) == Rational(1, 2));
    CHECK(euler_measure(s, ints({0, 0, 1})) == -1);
    const AnalyzedDiagram l(lens(3, 1));
    CHECK(euler_measure(l, ints({1, 0, 0})) == 0);
    for (int g = 1; g <= 3; ++g) {
      const AnalyzedDiagram a(gsph(g));
      CHECK(euler_measure(a, a.lattice().sigma) == 2 - 2 * g);
      const auto& x = a.generators().front();
      CHECK(generator_measure(a, a.lattice().sigma, x) == g);
    }
  }

  TEST_CASE("point measures") {
    const AnalyzedDiagram s(s1s2_g1());
    const int theta = s.quadrants().point_index("theta");
    CHECK(point_measure(s, ints({1, 0, 0}), theta) == Rational(1, 4));
    CHECK(point_measure(s, ints({3, 3, 3}), theta) == 3);
    CHECK(generator_measure(s, ints({1, 0, 0}), s.generator({"theta"})) == Rational(1, 4));
    CHECK(generator_measure(s, ints({0, 0, 0}), s.generator({"theta"})) == 0);
  }

  TEST_CASE("maslov index values") {
    const AnalyzedDiagram s(s1s2_g1());
    const auto& theta = s.generator({"theta"});
    const auto& eta = s.generator({"eta"});
    const Domain d1{ints({1, 0, 0}), theta, eta};
    CHECK(maslov_index(s, d1) == 1);
    CHECK(maslov_index(s, Domain{plus_sigma(d1.coefficients, 1), theta, eta}) == 3);
    for (long k = -2; k <= 2; ++k)
      CHECK(maslov_index(s, Domain{plus_sigma(d1.coefficients, k), theta, eta}) == 1 + 2 * k);

    const AnalyzedDiagram s3(s3_g1());
    const auto& x = s3.generators().front();
    CHECK(maslov_index(s3, Domain{ints({1}), x, x}) == 2);
  }

  TEST_CASE("non-integral index is reported") {
    // A single square seen from one of its corners is not a domain.
    const AnalyzedDiagram l(lens(5, 2));
    const auto& x0 = l.generator({"x0"});
    CHECK(point_measure(l, ints({1, 0, 0, 0, 0}), l.quadrants().point_index("x0")) == Rational(1, 4));
    CHECK_THROWS_AS(maslov_index(l, Domain{ints({1, 0, 0, 0, 0}), x0, x0}), NonIntegral);
  }

  TEST_CASE("embedded euler characteristic") {
    const AnalyzedDiagram s(s1s2_g1());
    CHECK(embedded_euler_char(s, Domain{ints({1, 0, 0}), s.generator({"theta"}), s.generator({"eta"})}) == 1);
    const AnalyzedDiagram s3(s3_g1());
    const auto& x = s3.generators().front();
    CHECK(embedded_euler_char(s3, Domain{ints({1}), x, x}) == -1);
    const AnalyzedDiagram r(read_hfd(HF_FIXTURE_DIR "/rect_g2.hfd.json"));
    const Domain rect{ints({0, 1, 0, 0}), r.generator({"p2", "p3"}), r.generator({"p0", "p4"})};
    CHECK(euler_measure(r, rect.coefficients) == 0);
    CHECK(generator_measure(r, rect.coefficients, rect.from) == Rational(1, 2));
    CHECK(generator_measure(r, rect.coefficients, rect.to) == Rational(1, 2));
    CHECK(embedded_euler_char(r, rect) == 1);
  }

  TEST_CASE("index equals g - chi + 2e") {
    const AnalyzedDiagram s(s1s2_g1());
    const Domain d{ints({2, 1, 1}), s.generator({"theta"}), s.generator({"eta"})};
    CHECK(maslov_index(s, d) ==
          numerator_of(Rational(s.genus()) - Rational(embedded_euler_char(s, d)) + 2 * euler_measure(s, d.coefficients)));
  }

  TEST_CASE("chern pairing and periodic index") {
    const AnalyzedDiagram s(s1s2_g1());
    const auto& theta = s.generator({"theta"});
    CHECK(chern_pairing(s, theta, ints({0, 0, 0})) == 0);
    CHECK(chern_pairing(s, theta, ints({1, -1, 0})) == 0);
    CHECK(periodic_index(s, theta, ints({1, -1, 0})) == 0);
    CHECK(periodic_index(s, theta, ints({1, 1, 1})) == 2);
    CHECK(periodic_index(s, theta, ints({0, 0, 0})) == 0);

    const AnalyzedDiagram w(s1s2_wind());
    const auto& x = w.generator({"theta", "a"});
    for (const auto& p : w.lattice().basis) {
      const BigInt c = chern_pairing(w, x, p);
      CHECK(c % 2 == 0);
      CHECK(c != 0);
    }
    CHECK(chern_pairing(w, x, w.lattice().basis[0]) == 2);
  }
}
