#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hf {

enum class CurveFamily : std::uint8_t { Alpha, Beta };

inline CurveFamily other(CurveFamily f) { return f == CurveFamily::Alpha ? CurveFamily::Beta : CurveFamily::Alpha; }

/// Oriented reference to the arc from the `arc`-th to the (`arc`+1)-th point
/// of a curve. dir = +1 follows the curve orientation, -1 opposes it.
struct ArcRef {
  CurveFamily family = CurveFamily::Alpha;
  int curve = 0;
  int arc = 0;
  int dir = 1;

  bool operator==(const ArcRef&) const = default;
};

/// One boundary cycle, traversed with the region on the left.
using BoundaryCycle = std::vector<ArcRef>;

struct Region {
  int genus = 0;
  std::vector<BoundaryCycle> boundary;

  bool operator==(const Region&) const = default;
};

/// A pointed Heegaard diagram given purely combinatorially. Curves are cyclic
/// lists of intersection point identifiers in traversal order.
struct HeegaardDiagram {
  int genus = 1;
  std::vector<std::vector<std::string>> alpha;
  std::vector<std::vector<std::string>> beta;
  std::vector<Region> regions;
  int basepoint_region = 0;

  const std::vector<std::vector<std::string>>& curves(CurveFamily f) const { return f == CurveFamily::Alpha ? alpha : beta; }
  std::vector<std::vector<std::string>>& curves(CurveFamily f) { return f == CurveFamily::Alpha ? alpha : beta; }

  bool operator==(const HeegaardDiagram&) const = default;
};

struct Violation {
  std::string invariant;
  std::vector<std::string> ids;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks every structural invariant of a diagram and reports all failures.
ValidationReport validate(const HeegaardDiagram& d);

/// Throws InvalidDiagram carrying the report details when `d` is invalid.
void require_valid(const HeegaardDiagram& d);

// Euler characteristic and corner count of a single region.
int region_euler_characteristic(const Region& r);
int region_corner_count(const Region& r);

/// One of the four half-curves at an intersection point. `outgoing` means the
/// half-curve leaves the point along the curve's orientation.
struct HalfEdge {
  CurveFamily family = CurveFamily::Alpha;
  bool outgoing = true;

  bool operator==(const HalfEdge&) const = default;
};

struct PointInfo {
  std::string id;
  int alpha_curve = -1;
  int alpha_position = -1;
  int beta_curve = -1;
  int beta_position = -1;
  /// +1 when the counterclockwise order is alpha-out, beta-out, alpha-in, beta-in.
  int sign = 0;
};

struct ArcInfo {
  CurveFamily family = CurveFamily::Alpha;
  int curve = 0;
  int index = 0;
  int from = -1;  // dense point index
  int to = -1;
};

/// Where a region boundary cycle turns at a point.
struct CornerIncidence {
  int region = -1;
  int cycle = -1;
  int position = -1;  // junction after the arc at this position
};

/// Derived local structure around each intersection point.
///
/// Points are densely indexed in lexicographic order of their identifiers.
/// At every point the four half-curves, read counterclockwise starting from
/// the outgoing alpha half-curve, are h0..h3; slot k is the quadrant swept
/// from h_k to h_{k+1}.
struct QuadrantStructure {
  std::vector<PointInfo> points;
  std::vector<ArcInfo> arcs;  // alpha arcs first, then beta arcs, curve-major
  std::vector<std::array<HalfEdge, 4>> rotation;
  std::vector<std::array<CornerIncidence, 4>> corners;

  int point_index(const std::string& id) const;  // -1 when absent
  int region_at(int point, int slot) const { return corners[static_cast<std::size_t>(point)][static_cast<std::size_t>(slot)].region; }
  int arc_index(CurveFamily f, int curve, int arc) const;

  std::vector<int> alpha_arc_offset;
  std::vector<int> beta_arc_offset;
};

/// Requires a valid diagram.
QuadrantStructure quadrants(const HeegaardDiagram& d);

/// Connected sum at the basepoints. Point identifiers of `second` that clash
/// with `first` are prefixed with "g<k>." where k is the first new curve number.
HeegaardDiagram connected_sum(const HeegaardDiagram& first, const HeegaardDiagram& second);

/// Connected sum with the standard genus-one diagram of the 3-sphere.
HeegaardDiagram stabilize(const HeegaardDiagram& d);

/// Identifier of the point stabilize() adds to `d`.
std::string stabilization_point_id(const HeegaardDiagram& d);

/// Reverses the orientation of one curve, relabelling arcs accordingly.
HeegaardDiagram reverse_curve(const HeegaardDiagram& d, CurveFamily family, int curve);

/// new curve i = old curve perm[i].
HeegaardDiagram permute_curves(const HeegaardDiagram& d, CurveFamily family, const std::vector<int>& perm);

}  // namespace hf
