#pragma once

#include "hf/diagram.hpp"

#include <string>
#include <vector>

namespace hf {

/// A g-tuple of intersection points, one on each alpha and each beta curve.
struct Generator {
  std::vector<int> points;  // points[i]: dense index of the point on alpha_i
  std::vector<int> sigma;   // sigma[i]: beta curve through points[i]

  /// Sorted dense point indices; since indices follow identifier order this
  /// is the canonical identifier.
  std::vector<int> key() const;

  bool contains(int point) const;

  friend bool operator==(const Generator& a, const Generator& b) { return a.points == b.points; }
  friend bool operator<(const Generator& a, const Generator& b) { return a.key() < b.key(); }
};

/// Complete, duplicate-free, canonically sorted list of generators.
std::vector<Generator> enumerate_generators(const QuadrantStructure& q, int genus);
std::vector<Generator> enumerate_generators(const HeegaardDiagram& d);

/// Sorted point identifiers, e.g. {"eta","g2.theta"}.
std::vector<std::string> generator_ids(const QuadrantStructure& q, const Generator& x);
std::string generator_label(const QuadrantStructure& q, const Generator& x);

/// Looks up a generator from point identifiers in any order; nullptr if the
/// identifiers do not form a generator of the list.
const Generator* find_generator(const QuadrantStructure& q, const std::vector<Generator>& gens,
                                const std::vector<std::string>& ids);

}  // namespace hf
