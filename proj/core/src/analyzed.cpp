#include "hf/analyzed.hpp"

#include "hf/errors.hpp"

#include <algorithm>

namespace hf {

namespace {

IntMatrix column_lattice(const IntMatrix& m) { return hermite_normal_form(m.transposed()); }

}  // namespace

AnalyzedDiagram::AnalyzedDiagram(HeegaardDiagram d) : diagram_(std::move(d)) {
  require_valid(diagram_);
  quadrants_ = hf::quadrants(diagram_);
  euler_.reserve(diagram_.regions.size());
  for (const auto& r : diagram_.regions)
    euler_.push_back(Rational(region_euler_characteristic(r)) - Rational(region_corner_count(r), 4));
  boundary_ = boundary_system(diagram_, quadrants_);
  lattice_ = periodic_lattice(boundary_, diagram_.basepoint_region);
  image_ = column_lattice(boundary_.alpha);
  generators_ = enumerate_generators(quadrants_, diagram_.genus);
}

IntVector AnalyzedDiagram::point_chain(const Generator& x) const {
  IntVector v(point_count());
  for (int p : x.points) v[static_cast<std::size_t>(p)] += 1;
  return v;
}

const Generator& AnalyzedDiagram::generator(const std::vector<std::string>& ids) const {
  const Generator* x = find_generator(quadrants_, generators_, ids);
  if (!x) {
    std::string joined;
    for (const auto& id : ids) joined += (joined.empty() ? "" : ",") + id;
    throw UsageError("not a generator: {" + joined + "}");
  }
  return *x;
}

std::size_t AnalyzedDiagram::generator_position(const Generator& x) const {
  const auto it = std::lower_bound(generators_.begin(), generators_.end(), x);
  if (it == generators_.end() || !(*it == x)) throw UsageError("generator does not belong to this diagram");
  return static_cast<std::size_t>(it - generators_.begin());
}

}  // namespace hf
