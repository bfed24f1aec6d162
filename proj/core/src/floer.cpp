#include "hf/floer.hpp"

#include "hf/measures.hpp"
#include "hf/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hf {

const char* shape_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::Bigon: return "bigon";
    case ShapeTag::Rectangle: return "rectangle";
    case ShapeTag::Other: break;
  }
  return "other";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// One arc reference inside a region boundary. Its junction is the corner
// after the arc, i.e. at the arc's end point.
struct Occurrence {
  int region;
  int arc;  // global arc index
  int dir;
  int end_point;
  std::size_t before;  // occurrence whose junction is this arc's start
};

RigidShape other(RigidShape s, std::string reason) {
  s.tag = ShapeTag::Other;
  s.reason = std::move(reason);
  return s;
}

}  // namespace

RigidShape classify_rigid(const AnalyzedDiagram& a, const Domain& d) {
  RigidShape shape;
  const auto& diagram = a.diagram();
  const auto& q = a.quadrants();
  for (std::size_t r = 0; r < d.coefficients.size(); ++r) {
    if (d.coefficients[r] < 0) return other(shape, "negative coefficient");
    if (d.coefficients[r] > 1) return other(shape, "coefficient at least 2");
    if (d.coefficients[r] == 1) shape.support.push_back(static_cast<int>(r));
  }
  if (shape.support.empty()) return other(shape, "empty support");
  if (d.coefficients[static_cast<std::size_t>(a.basepoint_region())] != 0) return other(shape, "covers the basepoint");
  if (maslov_index(a, d) != 1) return other(shape, "index is not one");

  std::vector<Occurrence> occ;
  for (int r : shape.support) {
    for (const auto& cycle : diagram.regions[static_cast<std::size_t>(r)].boundary) {
      const std::size_t first = occ.size();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& ref = cycle[i];
        const int arc = q.arc_index(ref.family, ref.curve, ref.arc);
        const auto& info = q.arcs[static_cast<std::size_t>(arc)];
        const std::size_t prev = first + (i + cycle.size() - 1) % cycle.size();
        occ.push_back({r, arc, ref.dir, ref.dir > 0 ? info.to : info.from, prev});
      }
    }
  }

  // Pair up the two sides of every arc on the support.
  std::vector<std::size_t> plus(q.arcs.size(), SIZE_MAX), minus(q.arcs.size(), SIZE_MAX);
  for (std::size_t o = 0; o < occ.size(); ++o) (occ[o].dir > 0 ? plus : minus)[static_cast<std::size_t>(occ[o].arc)] = o;

  UnionFind vertices(occ.size());
  UnionFind regions(a.region_count());
  int edges = 0;
  std::vector<std::size_t> boundary_edges;
  for (std::size_t arc = 0; arc < q.arcs.size(); ++arc) {
    const std::size_t p = plus[arc], m = minus[arc];
    if (p == SIZE_MAX && m == SIZE_MAX) continue;
    ++edges;
    if (p == SIZE_MAX || m == SIZE_MAX) {
      boundary_edges.push_back(p == SIZE_MAX ? m : p);
      continue;
    }
    // The start of one side is the end of the other.
    vertices.unite(occ[p].before, m);
    vertices.unite(p, occ[m].before);
    regions.unite(static_cast<std::size_t>(occ[p].region), static_cast<std::size_t>(occ[m].region));
  }

  std::vector<std::size_t> fan(occ.size(), 0);
  int vertex_count = 0;
  for (std::size_t o = 0; o < occ.size(); ++o) {
    const std::size_t root = vertices.find(o);
    if (fan[root]++ == 0) ++vertex_count;
  }
  int chi = vertex_count - edges;
  for (int r : shape.support) chi += region_euler_characteristic(diagram.regions[static_cast<std::size_t>(r)]);
  shape.euler_characteristic = chi;

  std::set<std::size_t> roots;
  for (int r : shape.support) roots.insert(regions.find(static_cast<std::size_t>(r)));
  shape.components = static_cast<int>(roots.size());

  // Boundary circles: boundary edges linked through shared vertex classes.
  UnionFind circles(boundary_edges.size());
  std::vector<std::vector<std::size_t>> ends(occ.size());
  for (std::size_t e = 0; e < boundary_edges.size(); ++e) {
    const std::size_t o = boundary_edges[e];
    ends[vertices.find(o)].push_back(e);
    ends[vertices.find(occ[o].before)].push_back(e);
  }
  for (const auto& list : ends) {
    if (list.empty()) continue;
    if (list.size() != 2) return other(shape, "support is not a surface near a corner");
    circles.unite(list[0], list[1]);
  }
  std::set<std::size_t> circle_roots;
  for (std::size_t e = 0; e < boundary_edges.size(); ++e) circle_roots.insert(circles.find(e));
  shape.boundary_components = static_cast<int>(circle_roots.size());

  std::multiset<int> acute;
  for (std::size_t o = 0; o < occ.size(); ++o) {
    if (vertices.find(o) != o) continue;
    if (fan[o] == 1) acute.insert(occ[o].end_point);
    if (fan[o] == 3) ++shape.obtuse_corners;
  }
  shape.acute_corners = static_cast<int>(acute.size());

  if (shape.components != 1 || shape.euler_characteristic != 1 || shape.boundary_components != 1)
    return other(shape, "support is not a disk");
  if (shape.obtuse_corners != 0) return other(shape, "obtuse corner");

  std::multiset<int> moving;
  for (int p : d.from.points)
    if (!d.to.contains(p)) moving.insert(p);
  const std::size_t half = moving.size();
  for (int p : d.to.points)
    if (!d.from.contains(p)) moving.insert(p);
  if (acute != moving || std::set<int>(moving.begin(), moving.end()).size() != moving.size())
    return other(shape, "corners are not the moving points");
  if (half == 1 && acute.size() == 2) {
    shape.tag = ShapeTag::Bigon;
  } else if (half == 2 && acute.size() == 4) {
    shape.tag = ShapeTag::Rectangle;
  } else {
    return other(shape, "wrong corner census");
  }
  return shape;
}

std::size_t f2_rank(F2Matrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][c]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

namespace {

struct PairResult {
  std::vector<CountedDomain> counted;
  std::vector<Domain> offending;
};

BigInt reduce(const BigInt& v, const BigInt& d) { return d == 0 ? v : v - d * floor_div(v, d); }

}  // namespace

ClassComplex differential(const AnalyzedDiagram& a, const SpincClass& c, const FloerOptions& options) {
  const std::size_t n = c.members.size();
  ClassComplex out;
  out.generators = c.members;
  out.gradings = c.gradings;
  out.divisor = c.divisor;
  out.boundary.assign(n, std::vector<std::uint8_t>(n, 0));

  // Pair index i*n + j holds domains from member j to member i. Index-one
  // domains never start and end at the same generator, since periodic
  // domains have even index.
  auto results = parallel_map(n * n, options.threads, [&](std::size_t k) {
    PairResult r;
    const std::size_t i = k / n, j = k % n;
    if (i == j) return r;
    for (auto& dom : positive_domains(a, c.members[j], c.members[i], 1, 0)) {
      ShapeTag tag = classify_rigid(a, dom).tag;
      if (tag == ShapeTag::Rectangle && options.strict_rectangles) tag = ShapeTag::Other;
      if (tag == ShapeTag::Other)
        r.offending.push_back(std::move(dom));
      else
        r.counted.push_back({std::move(dom), tag});
    }
    return r;
  });

  std::vector<Domain> offending;
  for (std::size_t k = 0; k < results.size(); ++k) {
    auto& r = results[k];
    out.boundary[k / n][k % n] = static_cast<std::uint8_t>(r.counted.size() % 2);
    for (auto& cd : r.counted) out.audit.push_back(std::move(cd));
    for (auto& d : r.offending) offending.push_back(std::move(d));
  }
  if (!offending.empty()) throw NotCombinatorial(std::move(offending));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.boundary[i][j] && reduce(out.gradings[j] - out.gradings[i] - 1, out.divisor) != 0)
        throw std::logic_error("differential does not lower the grading by one");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s ^= out.boundary[i][k] & out.boundary[k][j];
      if (s) throw std::logic_error("differential does not square to zero");
    }
  return out;
}

ClassHomology class_homology(const ClassComplex& complex) {
  ClassHomology h;
  h.divisor = complex.divisor;
  const std::size_t n = complex.generators.size();
  std::map<BigInt, std::vector<std::size_t>> by_grading;
  for (std::size_t i = 0; i < n; ++i) by_grading[complex.gradings[i]].push_back(i);

  // Rank of the block from grading k to grading k-1.
  auto block_rank = [&](const BigInt& k) -> std::size_t {
    const auto src = by_grading.find(k);
    const auto dst = by_grading.find(reduce(k - 1, complex.divisor));
    if (src == by_grading.end() || dst == by_grading.end()) return 0;
    F2Matrix m;
    for (std::size_t r : dst->second) {
      std::vector<std::uint8_t> row;
      for (std::size_t col : src->second) row.push_back(complex.boundary[r][col]);
      m.push_back(std::move(row));
    }
    return f2_rank(std::move(m));
  };

  for (const auto& [k, members] : by_grading) {
    const std::size_t dim = members.size() - block_rank(k) - block_rank(reduce(k + 1, complex.divisor));
    if (dim > 0) h.ranks[k] = dim;
    h.total += dim;
  }
  if (h.total + 2 * f2_rank(complex.boundary) != n) throw std::logic_error("graded ranks disagree with the total rank");
  return h;
}

HomologyReport homology(const AnalyzedDiagram& a, const FloerOptions& options) {
  HomologyReport report;
  report.classes = spinc_partition(a);
  for (const auto& c : report.classes) {
    report.homology.push_back(class_homology(differential(a, c, options)));
    report.total_rank += report.homology.back().total;
  }
  return report;
}

}  // namespace hf
