#include "hf/generators.hpp"

#include <algorithm>
#include <numeric>

namespace hf {

std::vector<int> Generator::key() const {
  std::vector<int> k = points;
  std::sort(k.begin(), k.end());
  return k;
}

bool Generator::contains(int point) const { return std::find(points.begin(), points.end(), point) != points.end(); }

namespace {

struct Search {
  const std::vector<std::vector<int>>& on_alpha;  // point indices on each alpha curve
  const QuadrantStructure& q;
  std::vector<int> order;
  std::vector<int> chosen;
  std::vector<bool> beta_used;
  std::vector<Generator> out;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      Generator x;
      x.points = chosen;
      x.sigma.resize(chosen.size());
      for (std::size_t i = 0; i < chosen.size(); ++i)
        x.sigma[i] = q.points[static_cast<std::size_t>(chosen[i])].beta_curve;
      out.push_back(std::move(x));
      return;
    }
    const int a = order[depth];
    for (int p : on_alpha[static_cast<std::size_t>(a)]) {
      const int b = q.points[static_cast<std::size_t>(p)].beta_curve;
      if (beta_used[static_cast<std::size_t>(b)]) continue;
      beta_used[static_cast<std::size_t>(b)] = true;
      chosen[static_cast<std::size_t>(a)] = p;
      run(depth + 1);
      beta_used[static_cast<std::size_t>(b)] = false;
    }
  }
};

}  // namespace

std::vector<Generator> enumerate_generators(const QuadrantStructure& q, int genus) {
  const auto g = static_cast<std::size_t>(genus);
  std::vector<std::vector<int>> on_alpha(g);
  for (std::size_t p = 0; p < q.points.size(); ++p)
    on_alpha[static_cast<std::size_t>(q.points[p].alpha_curve)].push_back(static_cast<int>(p));

  Search s{on_alpha, q, {}, std::vector<int>(g, -1), std::vector<bool>(g, false), {}};
  s.order.resize(g);
  std::iota(s.order.begin(), s.order.end(), 0);
  // Fewest choices first prunes earliest.
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return on_alpha[static_cast<std::size_t>(a)].size() < on_alpha[static_cast<std::size_t>(b)].size(); });
  s.run(0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

std::vector<Generator> enumerate_generators(const HeegaardDiagram& d) {
  return enumerate_generators(quadrants(d), d.genus);
}

std::vector<std::string> generator_ids(const QuadrantStructure& q, const Generator& x) {
  std::vector<std::string> ids;
  for (int p : x.key()) ids.push_back(q.points[static_cast<std::size_t>(p)].id);
  return ids;
}

std::string generator_label(const QuadrantStructure& q, const Generator& x) {
  std::string s = "{";
  const auto ids = generator_ids(q, x);
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
  return s + "}";
}

const Generator* find_generator(const QuadrantStructure& q, const std::vector<Generator>& gens,
                                const std::vector<std::string>& ids) {
  std::vector<int> key;
  for (const auto& id : ids) {
    const int p = q.point_index(id);
    if (p < 0) return nullptr;
    key.push_back(p);
  }
  std::sort(key.begin(), key.end());
  for (const auto& x : gens)
    if (x.key() == key) return &x;
  return nullptr;
}

}  // namespace hf
