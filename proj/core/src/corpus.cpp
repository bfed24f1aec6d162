#include "hf/corpus.hpp"

#include "hf/errors.hpp"

#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace hf {

namespace {

constexpr CurveFamily A = CurveFamily::Alpha;
constexpr CurveFamily B = CurveFamily::Beta;

ArcRef ref(CurveFamily f, int arc, int dir, int curve = 0) { return {f, curve, arc, dir}; }

// Half-edge index: 0 alpha-out, 1 alpha-in, 2 beta-out, 3 beta-in.
struct Endpoint {
  CurveFamily family;
  int curve;
  int position;
};

}  // namespace

HeegaardDiagram trace_diagram(int genus, std::vector<std::vector<std::string>> alpha,
                              std::vector<std::vector<std::string>> beta, const std::map<std::string, int>& signs,
                              const ArcRef& basepoint_side) {
  HeegaardDiagram d;
  d.genus = genus;
  d.alpha = std::move(alpha);
  d.beta = std::move(beta);

  std::map<std::string, std::array<Endpoint, 2>> where;  // alpha, beta
  for (CurveFamily f : {A, B})
    for (std::size_t c = 0; c < d.curves(f).size(); ++c)
      for (std::size_t k = 0; k < d.curves(f)[c].size(); ++k)
        where[d.curves(f)[c][k]][f == A ? 0 : 1] = {f, static_cast<int>(c), static_cast<int>(k)};

  auto rotation = [&](const std::string& p) -> std::array<int, 4> {
    const auto it = signs.find(p);
    if (it == signs.end()) throw std::logic_error("no sign for point " + p);
    return it->second > 0 ? std::array<int, 4>{0, 2, 1, 3} : std::array<int, 4>{0, 3, 1, 2};
  };

  // Every oriented arc is used by exactly one face.
  std::map<std::tuple<int, int, int, int>, bool> used;
  auto key = [](const ArcRef& r) { return std::make_tuple(static_cast<int>(r.family), r.curve, r.arc, r.dir); };
  int basepoint = -1;
  for (CurveFamily f : {A, B}) {
    for (std::size_t c = 0; c < d.curves(f).size(); ++c) {
      for (std::size_t k = 0; k < d.curves(f)[c].size(); ++k) {
        for (int dir : {1, -1}) {
          ArcRef start{f, static_cast<int>(c), static_cast<int>(k), dir};
          if (used[key(start)]) continue;
          BoundaryCycle cycle;
          ArcRef cur = start;
          while (!used[key(cur)]) {
            used[key(cur)] = true;
            cycle.push_back(cur);
            if (cur == basepoint_side) basepoint = static_cast<int>(d.regions.size());
            const auto& pts = d.curves(cur.family)[static_cast<std::size_t>(cur.curve)];
            const std::size_t n = pts.size();
            const std::size_t head = cur.dir > 0 ? (static_cast<std::size_t>(cur.arc) + 1) % n
                                                 : static_cast<std::size_t>(cur.arc);
            const std::string& p = pts[head];
            const int h_in = (cur.family == A ? 0 : 2) + (cur.dir > 0 ? 1 : 0);
            const auto rot = rotation(p);
            const int slot = static_cast<int>(std::find(rot.begin(), rot.end(), h_in) - rot.begin());
            const int h_out = rot[static_cast<std::size_t>((slot + 3) % 4)];
            const Endpoint& e = where.at(p)[h_out < 2 ? 0 : 1];
            const std::size_t m = d.curves(e.family)[static_cast<std::size_t>(e.curve)].size();
            if (h_out % 2 == 0)
              cur = {e.family, e.curve, e.position, 1};
            else
              cur = {e.family, e.curve, static_cast<int>((static_cast<std::size_t>(e.position) + m - 1) % m), -1};
          }
          if (!(cur == start)) throw std::logic_error("face tracing did not close up");
          d.regions.push_back({0, {std::move(cycle)}});
        }
      }
    }
  }
  if (basepoint < 0) throw std::logic_error("basepoint side is not an arc of the diagram");
  d.basepoint_region = basepoint;
  require_valid(d);
  return d;
}

HeegaardDiagram s3_g1() {
  HeegaardDiagram d;
  d.genus = 1;
  d.alpha = {{"x"}};
  d.beta = {{"x"}};
  d.regions = {{0, {{ref(A, 0, 1), ref(B, 0, 1), ref(A, 0, -1), ref(B, 0, -1)}}}};
  d.basepoint_region = 0;
  return d;
}

HeegaardDiagram s1s2_g1() {
  HeegaardDiagram d;
  d.genus = 1;
  d.alpha = {{"theta", "eta"}};
  d.beta = {{"theta", "eta"}};
  d.regions = {
      {0, {{ref(A, 0, 1), ref(B, 0, -1)}}},
      {0, {{ref(B, 1, 1), ref(A, 1, -1)}}},
      {0, {{ref(B, 0, 1), ref(A, 1, 1)}, {ref(B, 1, -1), ref(A, 0, -1)}}},
  };
  d.basepoint_region = 2;
  return d;
}

HeegaardDiagram s1s2_bad() {
  HeegaardDiagram d = s1s2_g1();
  d.basepoint_region = 0;
  return d;
}

HeegaardDiagram finger_torus() {
  return trace_diagram(1, {{"a", "b", "c", "d"}}, {{"a", "b", "c", "d"}}, {{"a", 1}, {"b", 1}, {"c", -1}, {"d", -1}},
                       ref(A, 3, -1));
}

HeegaardDiagram s1s2_wind() { return connected_sum(s1s2_bad(), finger_torus()); }

HeegaardDiagram lens(int p, int q) {
  if (p < 2 || p > 64 || q < 1 || q >= p || std::gcd(p, q) != 1)
    throw UsageError("lens(p,q) needs 2 <= p <= 64, 1 <= q < p, gcd(p,q) = 1");
  std::vector<std::string> a, b;
  for (int k = 0; k < p; ++k) a.push_back("x" + std::to_string(k));
  for (int k = 0; k < p; ++k) b.push_back("x" + std::to_string((k * q) % p));
  std::map<std::string, int> signs;
  for (const auto& id : a) signs[id] = 1;
  // The square with corners x0, x1, xq, x(q+1) lies on the left of a0.
  return trace_diagram(1, {a}, {b}, signs, ref(A, 0, 1));
}

HeegaardDiagram gsph(int g) {
  if (g < 1 || g > 5) throw UsageError("gsph(g) needs 1 <= g <= 5");
  HeegaardDiagram d = s1s2_g1();
  for (int i = 1; i < g; ++i) d = connected_sum(d, s1s2_g1());
  return d;
}

CorpusName CorpusName::parse(const std::string& text) {
  static const std::regex lens_re(R"(lens\((\d+),(\d+)\))");
  static const std::regex gsph_re(R"(gsph\((\d+)\))");
  std::smatch m;
  CorpusName n;
  if (std::regex_match(text, m, lens_re)) {
    n.family = "lens";
    n.p = std::stoi(m[1]);
    n.q = std::stoi(m[2]);
  } else if (std::regex_match(text, m, gsph_re)) {
    n.family = "gsph";
    n.g = std::stoi(m[1]);
  } else {
    n.family = text;
  }
  return n;
}

std::string CorpusName::str() const {
  if (family == "lens") return "lens(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (family == "gsph") return "gsph(" + std::to_string(g) + ")";
  return family;
}

HeegaardDiagram build(const CorpusName& name) {
  if (name.family == "s3_g1") return s3_g1();
  if (name.family == "s1s2_g1") return s1s2_g1();
  if (name.family == "s1s2_bad") return s1s2_bad();
  if (name.family == "s1s2_wind") return s1s2_wind();
  if (name.family == "lens") return lens(name.p, name.q);
  if (name.family == "gsph") return gsph(name.g);
  throw UsageError("unknown corpus name: " + name.family);
}

HeegaardDiagram build(const std::string& name) { return build(CorpusName::parse(name)); }

std::vector<CorpusName> standard_corpus() {
  std::vector<CorpusName> out = {{"s3_g1"}, {"s1s2_g1"}, {"s1s2_bad"}, {"s1s2_wind"}};
  for (int p = 2; p <= 7; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.push_back({"lens", p, q});
  for (int g = 1; g <= 3; ++g) out.push_back({"gsph", 0, 0, g});
  return out;
}

}  // namespace hf
