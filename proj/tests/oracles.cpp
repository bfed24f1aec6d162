#include "oracles.hpp"

#include "hf/diagram.hpp"
#include "hf/measures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hf::oracle {

void for_each_box(std::size_t n, long lo, long hi, const std::function<void(const IntVector&)>& fn) {
  IntVector v(n, BigInt(lo));
  while (true) {
    fn(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < hi) {
        ++v[i];
        break;
      }
      v[i] = lo;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

BigInt permanent(const std::vector<std::vector<long>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  BigInt total = 0;
  do {
    BigInt term = 1;
    for (std::size_t i = 0; i < m.size(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<long>> intersection_counts(const AnalyzedDiagram& a) {
  const auto g = static_cast<std::size_t>(a.genus());
  std::vector<std::vector<long>> m(g, std::vector<long>(g, 0));
  for (const auto& p : a.quadrants().points) ++m[static_cast<std::size_t>(p.alpha_curve)][static_cast<std::size_t>(p.beta_curve)];
  return m;
}

std::size_t rational_rank(const IntMatrix& input) {
  std::vector<RatVector> m(input.rows(), RatVector(input.cols()));
  for (std::size_t i = 0; i < input.rows(); ++i)
    for (std::size_t j = 0; j < input.cols(); ++j) m[i][j] = Rational(input(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < input.cols() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < input.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

Rational determinant(std::vector<RatVector> m) {
  Rational det = 1;
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BigInt> determinantal_invariants(const IntMatrix& m) {
  std::vector<BigInt> divisors{1};  // d_0
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    std::vector<std::size_t> rows, cols;
    subsets(m.rows(), k, 0, rows, [&](const std::vector<std::size_t>& rs) {
      subsets(m.cols(), k, 0, cols, [&](const std::vector<std::size_t>& cs) {
        std::vector<RatVector> sub(k, RatVector(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = Rational(m(rs[i], cs[j]));
        g = gcd(g, abs(numerator_of(determinant(sub))));
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

std::optional<IntVector> box_solution(const IntMatrix& a, const IntVector& b, long lo, long hi) {
  std::optional<IntVector> found;
  for_each_box(a.cols(), lo, hi, [&](const IntVector& x) {
    if (!found && a.apply(x) == b) found = x;
  });
  return found;
}

std::optional<Rational> vertex_optimum_2d(const LinearProgram& lp) {
  std::optional<Rational> best;
  const auto& cs = lp.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Rational det = cs[i].coefficients[0] * cs[j].coefficients[1] - cs[i].coefficients[1] * cs[j].coefficients[0];
      if (det == 0) continue;
      const RatVector p{(cs[i].rhs * cs[j].coefficients[1] - cs[i].coefficients[1] * cs[j].rhs) / det,
                        (cs[i].coefficients[0] * cs[j].rhs - cs[i].rhs * cs[j].coefficients[0]) / det};
      if (!std::all_of(cs.begin(), cs.end(), [&](const LinearConstraint& c) { return satisfies(c, p); })) continue;
      const Rational v = lp.objective[0] * p[0] + lp.objective[1] * p[1];
      if (!best || (lp.maximize ? v > *best : v < *best)) best = v;
    }
  return best;
}

std::size_t f2_rank_by_span(const F2Matrix& m) {
  std::map<std::vector<std::uint8_t>, bool> span;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  span[std::vector<std::uint8_t>(cols, 0)] = true;
  for (const auto& row : m) {
    std::vector<std::vector<std::uint8_t>> add;
    for (const auto& [v, _] : span) {
      auto w = v;
      for (std::size_t k = 0; k < cols; ++k) w[k] ^= row[k];
      add.push_back(w);
    }
    for (auto& w : add) span[w] = true;
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

std::vector<IntVector> positive_domains_in_box(const AnalyzedDiagram& a, const Generator& x, const Generator& y,
                                               long index, long nz, long bound) {
  std::vector<IntVector> out;
  const IntVector cx = a.point_chain(x), cy = a.point_chain(y);
  const auto& q = a.quadrants();
  const auto& d = a.diagram();
  for_each_box(a.region_count(), 0, bound, [&](const IntVector& n) {
    if (n[static_cast<std::size_t>(a.basepoint_region())] != nz) return;
    // Boundary condition straight from the region boundaries.
    IntVector chain(a.point_count());
    for (std::size_t r = 0; r < n.size(); ++r) {
      if (n[r] == 0) continue;
      for (const auto& cycle : d.regions[r].boundary)
        for (const auto& ref : cycle) {
          if (ref.family != CurveFamily::Alpha) continue;
          const auto& arc = q.arcs[static_cast<std::size_t>(q.arc_index(ref.family, ref.curve, ref.arc))];
          chain[static_cast<std::size_t>(arc.to)] += n[r] * ref.dir;
          chain[static_cast<std::size_t>(arc.from)] -= n[r] * ref.dir;
        }
    }
    for (std::size_t p = 0; p < chain.size(); ++p)
      if (chain[p] != cy[p] - cx[p]) return;
    if (maslov_index(a, n, x, y) != index) return;
    out.push_back(n);
  });
  return out;
}

std::map<PairKey, std::vector<IntVector>> all_positive_domains_in_box(const AnalyzedDiagram& a, long bound) {
  const auto& q = a.quadrants();
  const auto& d = a.diagram();
  const std::size_t f = a.region_count(), v = a.point_count();
  const auto& gens = a.generators();

  // Per region: alpha boundary chain and four times its Euler measure, in
  // machine integers, recomputed from the region records.
  std::vector<std::vector<long>> chain(f, std::vector<long>(v, 0));
  std::vector<long> euler4(f);
  for (std::size_t r = 0; r < f; ++r) {
    euler4[r] = 4L * region_euler_characteristic(d.regions[r]) - region_corner_count(d.regions[r]);
    for (const auto& cycle : d.regions[r].boundary)
      for (const auto& ref : cycle) {
        if (ref.family != CurveFamily::Alpha) continue;
        const auto& arc = q.arcs[static_cast<std::size_t>(q.arc_index(ref.family, ref.curve, ref.arc))];
        chain[r][static_cast<std::size_t>(arc.to)] += ref.dir;
        chain[r][static_cast<std::size_t>(arc.from)] -= ref.dir;
      }
  }

  std::map<std::vector<long>, std::vector<std::pair<std::size_t, std::size_t>>> pairs_by_difference;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::vector<long> diff(v, 0);
      for (int p : gens[i].points) diff[static_cast<std::size_t>(p)] -= 1;
      for (int p : gens[j].points) diff[static_cast<std::size_t>(p)] += 1;
      pairs_by_difference[diff].push_back({i, j});
    }

  std::map<PairKey, std::vector<IntVector>> out;
  for_each_box(f, 0, bound, [&](const IntVector& n) {
    std::vector<long> total(v, 0);
    long e4 = 0;
    for (std::size_t r = 0; r < f; ++r) {
      const long c = n[r].convert_to<long>();
      if (c == 0) continue;
      e4 += c * euler4[r];
      for (std::size_t p = 0; p < v; ++p) total[p] += c * chain[r][p];
    }
    const auto it = pairs_by_difference.find(total);
    if (it == pairs_by_difference.end()) return;
    // Four times the point measure at each point.
    std::vector<long> n4(v, 0);
    for (std::size_t p = 0; p < v; ++p)
      for (int slot = 0; slot < 4; ++slot)
        n4[p] += n[static_cast<std::size_t>(q.region_at(static_cast<int>(p), slot))].convert_to<long>();
    const long nz = n[static_cast<std::size_t>(a.basepoint_region())].convert_to<long>();
    for (const auto& [i, j] : it->second) {
      long index4 = e4;
      for (int p : gens[i].points) index4 += n4[static_cast<std::size_t>(p)];
      for (int p : gens[j].points) index4 += n4[static_cast<std::size_t>(p)];
      if (index4 % 4 != 0) continue;
      out[{i, j, index4 / 4, nz}].push_back(n);
    }
  });
  return out;
}

std::optional<IntVector> nonnegative_periodic_in_box(const AnalyzedDiagram& a, long bound) {
  std::optional<IntVector> found;
  for_each_box(a.region_count(), 0, bound, [&](const IntVector& n) {
    if (found || n[static_cast<std::size_t>(a.basepoint_region())] != 0) return;
    if (std::all_of(n.begin(), n.end(), [](const BigInt& c) { return c == 0; })) return;
    if (a.boundary().alpha.apply(n) == IntVector(a.point_count())) found = n;
  });
  return found;
}

bool in_periodic_lattice(const AnalyzedDiagram& a, const IntVector& v) {
  const auto& basis = a.lattice().basis;
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const BigInt& c) { return c == 0; });
  return hermite_solve(IntMatrix::from_rows(basis, a.region_count()).transposed(), v).has_value();
}

}  // namespace hf::oracle
