#pragma once

#include "hf/diagram.hpp"
#include "hf/domains.hpp"
#include "hf/exactla.hpp"
#include "hf/generators.hpp"

#include <string>
#include <vector>

namespace hf {

/// A validated diagram with its derived data computed once: quadrants,
/// region Euler measures, boundary maps, periodic lattice and generators.
/// Immutable after construction, so it can be shared across threads.
class AnalyzedDiagram {
 public:
  /// Throws InvalidDiagram when `d` fails validation.
  explicit AnalyzedDiagram(HeegaardDiagram d);

  const HeegaardDiagram& diagram() const noexcept { return diagram_; }
  const QuadrantStructure& quadrants() const noexcept { return quadrants_; }
  int genus() const noexcept { return diagram_.genus; }
  std::size_t region_count() const noexcept { return diagram_.regions.size(); }
  std::size_t point_count() const noexcept { return quadrants_.points.size(); }
  int basepoint_region() const noexcept { return diagram_.basepoint_region; }

  const Rational& region_euler_measure(std::size_t r) const { return euler_[r]; }
  const BoundarySystem& boundary() const noexcept { return boundary_; }
  const PeriodicLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  /// HNF of the lattice spanned by the columns of the alpha boundary map.
  const IntMatrix& boundary_image() const noexcept { return image_; }

  /// Indicator 0-chain of the points of x.
  IntVector point_chain(const Generator& x) const;

  /// Generator from point identifiers; throws UsageError if there is none.
  const Generator& generator(const std::vector<std::string>& ids) const;
  std::size_t generator_position(const Generator& x) const;

 private:
  HeegaardDiagram diagram_;
  QuadrantStructure quadrants_;
  RatVector euler_;
  BoundarySystem boundary_;
  PeriodicLattice lattice_;
  IntMatrix image_;
  std::vector<Generator> generators_;
};

}  // namespace hf
