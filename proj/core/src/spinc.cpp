#include "hf/spinc.hpp"

#include "hf/errors.hpp"
#include "hf/measures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hf {

std::size_t SpincClass::position(const Generator& x) const {
  const auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || !(*it == x)) throw UsageError("generator is not in this Spin^c class");
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

IntVector class_key(const AnalyzedDiagram& a, const Generator& x) {
  return reduce_modulo(a.point_chain(x), a.boundary_image());
}

IntVector chern_row(const AnalyzedDiagram& a, const Generator& x) {
  IntVector row;
  for (const auto& p : a.lattice().basis) row.push_back(chern_pairing(a, x, p));
  return row;
}

}  // namespace

IntVector spinc_difference(const AnalyzedDiagram& a, const Generator& x, const Generator& y) {
  const IntVector cx = a.point_chain(x);
  IntVector d = a.point_chain(y);
  for (std::size_t p = 0; p < d.size(); ++p) d[p] -= cx[p];
  return reduce_modulo(std::move(d), a.boundary_image());
}

BigInt grading_divisor(const AnalyzedDiagram& a, const SpincClass& c) {
  if (c.members.empty()) throw UsageError("empty Spin^c class");
  BigInt d = 0;
  for (const auto& v : chern_row(a, c.members.front())) d = gcd(d, abs(v));
  return d;
}

std::vector<BigInt> relative_gradings(const AnalyzedDiagram& a, const SpincClass& c) {
  if (c.members.empty()) throw UsageError("empty Spin^c class");
  const BigInt divisor = grading_divisor(a, c);
  const Generator& base = c.members.front();
  std::vector<BigInt> gr;
  for (const auto& x : c.members) {
    const auto d = connecting_domain(a, x, base);
    if (!d) throw std::logic_error("Spin^c class members are not connected by a domain");
    gr.push_back(maslov_index(a, *d));
  }
  const BigInt low = *std::min_element(gr.begin(), gr.end());
  for (auto& v : gr) {
    v -= low;
    if (divisor != 0) v -= divisor * floor_div(v, divisor);
  }
  return gr;
}

std::vector<SpincClass> spinc_partition(const AnalyzedDiagram& a) {
  std::map<IntVector, std::size_t> index;
  std::vector<SpincClass> classes;
  for (const auto& x : a.generators()) {
    const auto [it, fresh] = index.try_emplace(class_key(a, x), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].members.push_back(x);
  }
  for (auto& c : classes) {
    const Generator& base = c.members.front();
    c.chern_row = chern_row(a, base);
    for (const auto& x : c.members) {
      if (!connecting_domain(a, base, x)) throw std::logic_error("Spin^c relation is not transitive");
      if (chern_row(a, x) != c.chern_row) throw std::logic_error("Chern pairing depends on the generator");
    }
    c.divisor = grading_divisor(a, c);
    c.gradings = relative_gradings(a, c);
  }
  return classes;
}

}  // namespace hf
