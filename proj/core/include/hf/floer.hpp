#pragma once

#include "hf/errors.hpp"
#include "hf/spinc.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hf {

enum class ShapeTag { Bigon, Rectangle, Other };

const char* shape_name(ShapeTag t);

struct RigidShape {
  ShapeTag tag = ShapeTag::Other;
  std::vector<int> support;  // regions with coefficient 1
  int acute_corners = 0;
  int obtuse_corners = 0;
  int euler_characteristic = 0;  // of the glued support surface
  int boundary_components = 0;
  int components = 0;
  std::string reason;  // why the shape is Other; empty otherwise
};

/// Recognises embedded bigons and rectangles from the combinatorics of the
/// support surface. Anything else is Other.
RigidShape classify_rigid(const AnalyzedDiagram& a, const Domain& d);

/// Some index-one positive domain is neither a bigon nor a counted rectangle.
class NotCombinatorial : public Error {
 public:
  explicit NotCombinatorial(std::vector<Domain> offending)
      : Error("differential needs moduli counts for non-rigid domains"), offending_(std::move(offending)) {}
  const std::vector<Domain>& offending() const noexcept { return offending_; }

 private:
  std::vector<Domain> offending_;
};

struct FloerOptions {
  bool strict_rectangles = false;  // count rectangles as Other
  unsigned threads = 1;
};

struct CountedDomain {
  Domain domain;
  ShapeTag tag = ShapeTag::Other;
};

using F2Matrix = std::vector<std::vector<std::uint8_t>>;

/// Hat complex of one Spin^c class over F2. boundary[i][j] is the
/// coefficient of generator i in the differential of generator j.
struct ClassComplex {
  std::vector<Generator> generators;
  std::vector<BigInt> gradings;
  BigInt divisor;
  F2Matrix boundary;
  std::vector<CountedDomain> audit;
};

ClassComplex differential(const AnalyzedDiagram& a, const SpincClass& c, const FloerOptions& options = {});

std::size_t f2_rank(F2Matrix m);

struct ClassHomology {
  BigInt divisor;
  std::map<BigInt, std::size_t> ranks;  // grading -> dimension
  std::size_t total = 0;
};

ClassHomology class_homology(const ClassComplex& complex);

struct HomologyReport {
  std::vector<SpincClass> classes;
  std::vector<ClassHomology> homology;  // aligned with classes
  std::size_t total_rank = 0;
};

HomologyReport homology(const AnalyzedDiagram& a, const FloerOptions& options = {});

}  // namespace hf
