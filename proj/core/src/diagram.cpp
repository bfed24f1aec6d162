#include "hf/diagram.hpp"

#include "hf/errors.hpp"
#include "hf/exactla.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hf {

namespace {

const char* family_name(CurveFamily f) { return f == CurveFamily::Alpha ? "alpha" : "beta"; }

std::string ref_name(const ArcRef& r) {
  std::ostringstream os;
  os << (r.family == CurveFamily::Alpha ? "a" : "b") << r.curve << "." << r.arc << (r.dir > 0 ? "+" : "-");
  return os.str();
}

int half_edge_index(const HalfEdge& h) { return (h.family == CurveFamily::Alpha ? 0 : 2) + (h.outgoing ? 0 : 1); }

HalfEdge half_edge_from_index(int i) { return {i < 2 ? CurveFamily::Alpha : CurveFamily::Beta, (i % 2) == 0}; }

// Endpoints and half-edges of an oriented arc reference on a structurally
// sound diagram.
struct RefEnds {
  std::string start;
  std::string end;
  HalfEdge start_half;
  HalfEdge end_half;
};

RefEnds ends_of(const HeegaardDiagram& d, const ArcRef& r) {
  const auto& pts = d.curves(r.family)[static_cast<std::size_t>(r.curve)];
  const std::size_t n = pts.size();
  const std::string& tail = pts[static_cast<std::size_t>(r.arc)];
  const std::string& head = pts[(static_cast<std::size_t>(r.arc) + 1) % n];
  if (r.dir > 0) return {tail, head, {r.family, true}, {r.family, false}};
  return {head, tail, {r.family, false}, {r.family, true}};
}

bool ref_in_range(const HeegaardDiagram& d, const ArcRef& r) {
  const auto& cs = d.curves(r.family);
  if (r.curve < 0 || static_cast<std::size_t>(r.curve) >= cs.size()) return false;
  const auto& pts = cs[static_cast<std::size_t>(r.curve)];
  if (pts.empty()) return false;
  return r.arc >= 0 && static_cast<std::size_t>(r.arc) < pts.size() && (r.dir == 1 || r.dir == -1);
}

struct Corner {
  std::string point;
  HalfEdge in;
  HalfEdge out;
  CornerIncidence where;
};

class Reporter {
 public:
  void add(std::string invariant, std::vector<std::string> ids, std::string detail) {
    report_.ok = false;
    report_.violations.push_back({std::move(invariant), std::move(ids), std::move(detail)});
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

int arc_count(const HeegaardDiagram& d) {
  int n = 0;
  for (const auto& c : d.alpha) n += static_cast<int>(c.size());
  for (const auto& c : d.beta) n += static_cast<int>(c.size());
  return n;
}

int global_arc(const HeegaardDiagram& d, const ArcRef& r) {
  int offset = 0;
  if (r.family == CurveFamily::Beta)
    for (const auto& c : d.alpha) offset += static_cast<int>(c.size());
  const auto& cs = d.curves(r.family);
  for (int i = 0; i < r.curve; ++i) offset += static_cast<int>(cs[static_cast<std::size_t>(i)].size());
  return offset + r.arc;
}

}  // namespace

int region_euler_characteristic(const Region& r) {
  return 2 - 2 * r.genus - static_cast<int>(r.boundary.size());
}

int region_corner_count(const Region& r) {
  int n = 0;
  for (const auto& cycle : r.boundary) n += static_cast<int>(cycle.size());
  return n;
}

ValidationReport validate(const HeegaardDiagram& d) {
  Reporter rep;
  const int g = d.genus;
  if (g < 1) rep.add("genus", {}, "genus must be at least 1, got " + std::to_string(g));
  if (static_cast<int>(d.alpha.size()) != g)
    rep.add("curve count", {"alpha"}, "expected " + std::to_string(g) + " alpha curves, got " + std::to_string(d.alpha.size()));
  if (static_cast<int>(d.beta.size()) != g)
    rep.add("curve count", {"beta"}, "expected " + std::to_string(g) + " beta curves, got " + std::to_string(d.beta.size()));

  // Point incidence: exactly one alpha and one beta curve through each point.
  std::map<std::string, std::pair<int, int>> seen;  // id -> (#alpha, #beta)
  for (CurveFamily f : {CurveFamily::Alpha, CurveFamily::Beta}) {
    const auto& cs = d.curves(f);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (cs[c].empty())
        rep.add("curve points", {std::string(family_name(f)) + std::to_string(c)}, "curve carries no intersection points");
      for (const auto& p : cs[c]) {
        if (p.empty()) rep.add("point identifier", {}, "empty point identifier");
        auto& cnt = seen[p];
        (f == CurveFamily::Alpha ? cnt.first : cnt.second) += 1;
      }
    }
  }
  bool incidence_ok = true;
  for (const auto& [id, cnt] : seen) {
    if (cnt.first != 1 || cnt.second != 1) {
      incidence_ok = false;
      rep.add("point incidence", {id},
              "point lies on " + std::to_string(cnt.first) + " alpha and " + std::to_string(cnt.second) +
                  " beta occurrences; exactly one of each required");
    }
  }
  const int V = static_cast<int>(seen.size());

  if (d.regions.empty()) rep.add("regions", {}, "diagram has no regions");
  if (d.basepoint_region < 0 || static_cast<std::size_t>(d.basepoint_region) >= d.regions.size())
    rep.add("basepoint", {std::to_string(d.basepoint_region)}, "basepoint region index out of range");

  // Arc references and cycle continuity.
  bool refs_ok = true;
  for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
    const Region& reg = d.regions[ri];
    const std::string rid = "R" + std::to_string(ri);
    if (reg.genus < 0) rep.add("region genus", {rid}, "negative region genus");
    if (reg.boundary.empty()) rep.add("region boundary", {rid}, "region has no boundary cycle");
    for (std::size_t ci = 0; ci < reg.boundary.size(); ++ci) {
      const auto& cycle = reg.boundary[ci];
      if (cycle.empty()) {
        rep.add("region boundary", {rid}, "empty boundary cycle " + std::to_string(ci));
        refs_ok = false;
        continue;
      }
      for (const auto& r : cycle)
        if (!ref_in_range(d, r)) {
          refs_ok = false;
          rep.add("arc reference", {rid, ref_name(r)}, "arc reference out of range");
        }
    }
  }

  std::vector<Corner> corners;
  if (refs_ok) {
    for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
      const Region& reg = d.regions[ri];
      for (std::size_t ci = 0; ci < reg.boundary.size(); ++ci) {
        const auto& cycle = reg.boundary[ci];
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          const ArcRef& a = cycle[k];
          const ArcRef& b = cycle[(k + 1) % cycle.size()];
          RefEnds ea = ends_of(d, a), eb = ends_of(d, b);
          const std::string rid = "R" + std::to_string(ri);
          if (ea.end != eb.start) {
            rep.add("cycle continuity", {rid, ref_name(a), ref_name(b)},
                    "arc ends at " + ea.end + " but the next arc starts at " + eb.start);
            continue;
          }
          if (a.family == b.family) {
            rep.add("cycle continuity", {rid, ref_name(a), ref_name(b)},
                    "consecutive boundary arcs must alternate between alpha and beta");
            continue;
          }
          corners.push_back({ea.end, ea.end_half, eb.start_half,
                             {static_cast<int>(ri), static_cast<int>(ci), static_cast<int>(k)}});
        }
      }
    }

    // Each arc bounded once from each side.
    std::vector<std::array<int, 2>> sides(static_cast<std::size_t>(arc_count(d)), {0, 0});
    for (const auto& reg : d.regions)
      for (const auto& cycle : reg.boundary)
        for (const auto& r : cycle) sides[static_cast<std::size_t>(global_arc(d, r))][r.dir > 0 ? 0 : 1] += 1;
    for (CurveFamily f : {CurveFamily::Alpha, CurveFamily::Beta}) {
      const auto& cs = d.curves(f);
      for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t k = 0; k < cs[c].size(); ++k) {
          ArcRef r{f, static_cast<int>(c), static_cast<int>(k), 1};
          const auto& s = sides[static_cast<std::size_t>(global_arc(d, r))];
          if (s[0] != 1 || s[1] != 1)
            rep.add("arc sides", {ref_name(r)},
                    "arc referenced " + std::to_string(s[0]) + " time(s) forward and " + std::to_string(s[1]) +
                        " time(s) backward; exactly one of each required");
        }
    }

    // Quadrant closure at each point.
    std::map<std::string, std::vector<const Corner*>> at;
    for (const auto& c : corners) at[c.point].push_back(&c);
    for (const auto& [id, cnt] : seen) {
      (void)cnt;
      auto it = at.find(id);
      const std::size_t k = it == at.end() ? 0 : it->second.size();
      if (k != 4) {
        rep.add("quadrant closure", {id},
                "quadrant closure at point " + id + ": " + std::to_string(k) + " corner incidences, expected 4");
        continue;
      }
      std::array<int, 4> succ{-1, -1, -1, -1};
      std::array<int, 4> into{0, 0, 0, 0};
      bool bad = false;
      for (const Corner* c : it->second) {
        const int o = half_edge_index(c->out), i = half_edge_index(c->in);
        if (c->in.family == c->out.family || succ[static_cast<std::size_t>(o)] != -1) bad = true;
        else succ[static_cast<std::size_t>(o)] = i;
        into[static_cast<std::size_t>(i)] += 1;
      }
      if (!bad) {
        int h = 0, steps = 0;
        do {
          h = succ[static_cast<std::size_t>(h)];
          ++steps;
        } while (h > 0 && steps < 5);
        bad = h != 0 || steps != 4;
      }
      if (bad || into != std::array<int, 4>{1, 1, 1, 1})
        rep.add("quadrant closure", {id}, "quadrant closure at point " + id + ": corners do not form a single 4-cycle");
    }

    // Connectivity of the glued surface.
    if (!d.regions.empty()) {
      std::vector<int> parent(d.regions.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::vector<int> side_region(static_cast<std::size_t>(arc_count(d)), -1);
      for (std::size_t ri = 0; ri < d.regions.size(); ++ri)
        for (const auto& cycle : d.regions[ri].boundary)
          for (const auto& r : cycle) {
            auto& s = side_region[static_cast<std::size_t>(global_arc(d, r))];
            if (s < 0) s = static_cast<int>(ri);
            else parent[static_cast<std::size_t>(find_root(parent, s))] = find_root(parent, static_cast<int>(ri));
          }
      std::set<int> roots;
      for (std::size_t ri = 0; ri < d.regions.size(); ++ri) roots.insert(find_root(parent, static_cast<int>(ri)));
      if (roots.size() != 1)
        rep.add("connectivity", {}, "regions form " + std::to_string(roots.size()) + " components, expected 1");
    }
  }

  // Euler characteristic and Euler measure bookkeeping.
  if (!d.regions.empty() && g >= 1) {
    int chi = 0;
    int corners_total = 0;
    for (const auto& reg : d.regions) {
      chi += region_euler_characteristic(reg);
      corners_total += region_corner_count(reg);
    }
    const int E = arc_count(d);
    if (chi + V - E != 2 - 2 * g)
      rep.add("euler characteristic", {},
              "sum of region Euler characteristics plus V - E is " + std::to_string(chi + V - E) + ", expected " +
                  std::to_string(2 - 2 * g));
    // 4 * sum e = 4 * sum chi - corners
    if (4 * chi - corners_total != 4 * (2 - 2 * g))
      rep.add("euler measure", {},
              "sum of Euler measures is " + Rational(4 * chi - corners_total, 4).str() + ", expected " +
                  std::to_string(2 - 2 * g));
  }

  // Homological independence of each curve family in H_1 of the surface.
  if (refs_ok && incidence_ok && !d.regions.empty()) {
    const std::size_t arcs = static_cast<std::size_t>(arc_count(d));
    std::vector<IntVector> region_rows;
    for (const auto& reg : d.regions) {
      IntVector v(arcs);
      for (const auto& cycle : reg.boundary)
        for (const auto& r : cycle) v[static_cast<std::size_t>(global_arc(d, r))] += r.dir;
      region_rows.push_back(std::move(v));
    }
    const std::size_t base_rank = rank(IntMatrix::from_rows(region_rows, arcs));
    for (CurveFamily f : {CurveFamily::Alpha, CurveFamily::Beta}) {
      auto rows = region_rows;
      const auto& cs = d.curves(f);
      for (std::size_t c = 0; c < cs.size(); ++c) {
        IntVector v(arcs);
        for (std::size_t k = 0; k < cs[c].size(); ++k)
          v[static_cast<std::size_t>(global_arc(d, {f, static_cast<int>(c), static_cast<int>(k), 1}))] = 1;
        rows.push_back(std::move(v));
      }
      const std::size_t r = rank(IntMatrix::from_rows(rows, arcs));
      if (r != base_rank + cs.size() || static_cast<int>(cs.size()) != g)
        rep.add(std::string(family_name(f)) + " independence", {},
                std::string(family_name(f)) + " curves span rank " + std::to_string(r - base_rank) +
                    " in H_1 of the surface, expected " + std::to_string(g));
    }
  }

  return rep.take();
}

void require_valid(const HeegaardDiagram& d) {
  ValidationReport r = validate(d);
  if (r.ok) return;
  std::vector<std::string> details;
  for (const auto& v : r.violations) details.push_back(v.invariant + ": " + v.detail);
  throw InvalidDiagram("invalid Heegaard diagram (" + std::to_string(r.violations.size()) + " violation(s))",
                       std::move(details));
}

int QuadrantStructure::point_index(const std::string& id) const {
  auto it = std::lower_bound(points.begin(), points.end(), id,
                             [](const PointInfo& p, const std::string& s) { return p.id < s; });
  if (it == points.end() || it->id != id) return -1;
  return static_cast<int>(it - points.begin());
}

int QuadrantStructure::arc_index(CurveFamily f, int curve, int arc) const {
  const auto& off = f == CurveFamily::Alpha ? alpha_arc_offset : beta_arc_offset;
  return off[static_cast<std::size_t>(curve)] + arc;
}

QuadrantStructure quadrants(const HeegaardDiagram& d) {
  require_valid(d);
  QuadrantStructure q;
  std::set<std::string> ids;
  for (const auto& c : d.alpha) ids.insert(c.begin(), c.end());
  for (const auto& id : ids) q.points.push_back({id, -1, -1, -1, -1, 0});

  for (CurveFamily f : {CurveFamily::Alpha, CurveFamily::Beta}) {
    const auto& cs = d.curves(f);
    auto& offsets = f == CurveFamily::Alpha ? q.alpha_arc_offset : q.beta_arc_offset;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      offsets.push_back(static_cast<int>(q.arcs.size()));
      for (std::size_t k = 0; k < cs[c].size(); ++k) {
        PointInfo& p = q.points[static_cast<std::size_t>(q.point_index(cs[c][k]))];
        if (f == CurveFamily::Alpha) p.alpha_curve = static_cast<int>(c), p.alpha_position = static_cast<int>(k);
        else p.beta_curve = static_cast<int>(c), p.beta_position = static_cast<int>(k);
        q.arcs.push_back({f, static_cast<int>(c), static_cast<int>(k), q.point_index(cs[c][k]),
                          q.point_index(cs[c][(k + 1) % cs[c].size()])});
      }
    }
  }

  const std::size_t V = q.points.size();
  std::vector<std::array<std::pair<int, CornerIncidence>, 4>> by_out(V);  // indexed by h_out
  for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
    const Region& reg = d.regions[ri];
    for (std::size_t ci = 0; ci < reg.boundary.size(); ++ci) {
      const auto& cycle = reg.boundary[ci];
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        RefEnds ea = ends_of(d, cycle[k]), eb = ends_of(d, cycle[(k + 1) % cycle.size()]);
        const auto p = static_cast<std::size_t>(q.point_index(ea.end));
        by_out[p][static_cast<std::size_t>(half_edge_index(eb.start_half))] = {
            half_edge_index(ea.end_half), {static_cast<int>(ri), static_cast<int>(ci), static_cast<int>(k)}};
      }
    }
  }
  q.rotation.resize(V);
  q.corners.resize(V);
  for (std::size_t p = 0; p < V; ++p) {
    int h = 0;  // alpha outgoing
    for (std::size_t slot = 0; slot < 4; ++slot) {
      q.rotation[p][slot] = half_edge_from_index(h);
      q.corners[p][slot] = by_out[p][static_cast<std::size_t>(h)].second;
      h = by_out[p][static_cast<std::size_t>(h)].first;
    }
    q.points[p].sign = q.rotation[p][1] == HalfEdge{CurveFamily::Beta, true} ? 1 : -1;
  }
  return q;
}

namespace {

std::set<std::string> point_ids(const HeegaardDiagram& d) {
  std::set<std::string> ids;
  for (const auto& c : d.alpha) ids.insert(c.begin(), c.end());
  for (const auto& c : d.beta) ids.insert(c.begin(), c.end());
  return ids;
}

HeegaardDiagram standard_torus(const std::string& point) {
  HeegaardDiagram t;
  t.genus = 1;
  t.alpha = {{point}};
  t.beta = {{point}};
  t.regions = {Region{0, {{{CurveFamily::Alpha, 0, 0, 1},
                           {CurveFamily::Beta, 0, 0, 1},
                           {CurveFamily::Alpha, 0, 0, -1},
                           {CurveFamily::Beta, 0, 0, -1}}}}};
  t.basepoint_region = 0;
  return t;
}

}  // namespace

HeegaardDiagram connected_sum(const HeegaardDiagram& first, const HeegaardDiagram& second) {
  require_valid(first);
  require_valid(second);
  const auto first_ids = point_ids(first);
  auto second_ids = point_ids(second);
  std::string prefix;
  auto clashes = [&]() {
    for (const auto& id : second_ids)
      if (first_ids.count(prefix + id)) return true;
    return false;
  };
  while (clashes()) prefix = "g" + std::to_string(first.genus + 1) + "." + prefix;

  HeegaardDiagram out;
  out.genus = first.genus + second.genus;
  out.alpha = first.alpha;
  out.beta = first.beta;
  for (CurveFamily f : {CurveFamily::Alpha, CurveFamily::Beta})
    for (auto c : second.curves(f)) {
      for (auto& p : c) p = prefix + p;
      out.curves(f).push_back(std::move(c));
    }

  auto shift = [&](BoundaryCycle cycle) {
    for (auto& r : cycle) r.curve += first.genus;
    return cycle;
  };
  out.regions = first.regions;
  Region& merged = out.regions[static_cast<std::size_t>(first.basepoint_region)];
  const Region& other_z = second.regions[static_cast<std::size_t>(second.basepoint_region)];
  merged.genus += other_z.genus;
  for (const auto& cycle : other_z.boundary) merged.boundary.push_back(shift(cycle));
  for (std::size_t i = 0; i < second.regions.size(); ++i) {
    if (static_cast<int>(i) == second.basepoint_region) continue;
    Region r = second.regions[i];
    for (auto& cycle : r.boundary) cycle = shift(cycle);
    out.regions.push_back(std::move(r));
  }
  out.basepoint_region = first.basepoint_region;
  return out;
}

std::string stabilization_point_id(const HeegaardDiagram& d) {
  const auto ids = point_ids(d);
  std::string id = "c";
  for (int k = 1; ids.count(id); ++k) id = "c" + std::to_string(k);
  return id;
}

HeegaardDiagram stabilize(const HeegaardDiagram& d) { return connected_sum(d, standard_torus(stabilization_point_id(d))); }

HeegaardDiagram reverse_curve(const HeegaardDiagram& d, CurveFamily family, int curve) {
  HeegaardDiagram out = d;
  auto& pts = out.curves(family)[static_cast<std::size_t>(curve)];
  const int n = static_cast<int>(pts.size());
  std::reverse(pts.begin() + 1, pts.end());
  for (auto& reg : out.regions)
    for (auto& cycle : reg.boundary)
      for (auto& r : cycle)
        if (r.family == family && r.curve == curve) {
          r.arc = n - 1 - r.arc;
          r.dir = -r.dir;
        }
  return out;
}

HeegaardDiagram permute_curves(const HeegaardDiagram& d, CurveFamily family, const std::vector<int>& perm) {
  HeegaardDiagram out = d;
  auto& cs = out.curves(family);
  if (perm.size() != cs.size()) throw UsageError("permute_curves: permutation size mismatch");
  std::vector<int> inverse(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    cs[i] = d.curves(family)[static_cast<std::size_t>(perm[i])];
    inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  }
  for (auto& reg : out.regions)
    for (auto& cycle : reg.boundary)
      for (auto& r : cycle)
        if (r.family == family) r.curve = inverse[static_cast<std::size_t>(r.curve)];
  return out;
}

}  // namespace hf
