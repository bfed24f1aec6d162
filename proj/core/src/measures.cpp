#include "hf/measures.hpp"

#include "hf/errors.hpp"

#include <stdexcept>

namespace hf {

namespace {

BigInt require_integral(const Rational& v, const char* what) {
  if (!is_integral(v)) throw NonIntegral(std::string(what) + " is not an integer: " + to_string(v), v);
  return numerator_of(v);
}

void check_length(const AnalyzedDiagram& a, std::span<const BigInt> c) {
  if (c.size() != a.region_count()) throw UsageError("coefficient vector length does not match region count");
}

}  // namespace

Rational euler_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients) {
  check_length(a, coefficients);
  Rational e = 0;
  for (std::size_t r = 0; r < coefficients.size(); ++r)
    if (coefficients[r] != 0) e += a.region_euler_measure(r) * coefficients[r];
  return e;
}

Rational point_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, int point) {
  check_length(a, coefficients);
  if (point < 0 || static_cast<std::size_t>(point) >= a.point_count()) throw UsageError("point index out of range");
  BigInt s = 0;
  for (int slot = 0; slot < 4; ++slot) s += coefficients[static_cast<std::size_t>(a.quadrants().region_at(point, slot))];
  return Rational(s, 4);
}

Rational generator_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, const Generator& x) {
  Rational n = 0;
  for (int p : x.points) n += point_measure(a, coefficients, p);
  return n;
}

BigInt maslov_index(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, const Generator& from,
                    const Generator& to) {
  return require_integral(
      euler_measure(a, coefficients) + generator_measure(a, coefficients, from) + generator_measure(a, coefficients, to),
      "Maslov index");
}

BigInt maslov_index(const AnalyzedDiagram& a, const Domain& d) { return maslov_index(a, d.coefficients, d.from, d.to); }

BigInt embedded_euler_char(const AnalyzedDiagram& a, const Domain& d) {
  return require_integral(Rational(a.genus()) - generator_measure(a, d.coefficients, d.from) -
                              generator_measure(a, d.coefficients, d.to) + euler_measure(a, d.coefficients),
                          "embedded Euler characteristic");
}

BigInt chern_pairing(const AnalyzedDiagram& a, const Generator& x, std::span<const BigInt> periodic) {
  check_length(a, periodic);
  IntVector p(periodic.begin(), periodic.end());
  const BigInt nz = p[static_cast<std::size_t>(a.basepoint_region())];
  if (nz != 0)
    for (auto& c : p) c -= nz;
  return require_integral(euler_measure(a, p) + 2 * generator_measure(a, p, x), "Chern pairing");
}

BigInt periodic_index(const AnalyzedDiagram& a, const Generator& x, std::span<const BigInt> periodic) {
  const BigInt nz = periodic[static_cast<std::size_t>(a.basepoint_region())];
  const BigInt value = chern_pairing(a, x, periodic) + 2 * nz;
  if (value != maslov_index(a, periodic, x, x))
    throw std::logic_error("periodic index disagrees with the Maslov index of the periodic domain");
  return value;
}

}  // namespace hf
