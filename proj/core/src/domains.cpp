#include "hf/domains.hpp"

#include "hf/analyzed.hpp"
#include "hf/errors.hpp"
#include "hf/lp.hpp"
#include "hf/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace hf {

BoundarySystem boundary_system(const HeegaardDiagram& d, const QuadrantStructure& q) {
  const std::size_t v = q.points.size();
  const std::size_t f = d.regions.size();
  BoundarySystem b{IntMatrix(v, f), IntMatrix(v, f)};
  for (std::size_t r = 0; r < f; ++r) {
    for (const auto& cycle : d.regions[r].boundary) {
      for (const auto& ref : cycle) {
        const auto& arc = q.arcs[static_cast<std::size_t>(q.arc_index(ref.family, ref.curve, ref.arc))];
        IntMatrix& m = ref.family == CurveFamily::Alpha ? b.alpha : b.beta;
        m(static_cast<std::size_t>(arc.to), r) += ref.dir;
        m(static_cast<std::size_t>(arc.from), r) -= ref.dir;
      }
    }
  }
  return b;
}

PeriodicLattice periodic_lattice(const BoundarySystem& b, int basepoint_region) {
  const std::size_t v = b.alpha.rows();
  const std::size_t f = b.alpha.cols();
  IntMatrix system(v + 1, f);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < f; ++j) system(i, j) = b.alpha(i, j);
  system(v, static_cast<std::size_t>(basepoint_region)) = 1;

  PeriodicLattice lattice{kernel_basis(system), IntVector(f, BigInt(1))};
  if (b.alpha.apply(lattice.sigma) != IntVector(v) || kernel_basis(b.alpha).size() != lattice.basis.size() + 1)
    throw std::logic_error("periodic lattice and fundamental class do not span the kernel");
  return lattice;
}

const BoundarySystem& boundary_system(const AnalyzedDiagram& a) { return a.boundary(); }
const PeriodicLattice& periodic_lattice(const AnalyzedDiagram& a) { return a.lattice(); }

bool satisfies_boundary(const AnalyzedDiagram& a, const Domain& d) {
  if (d.coefficients.size() != a.region_count()) return false;
  const IntVector x = a.point_chain(d.from);
  const IntVector y = a.point_chain(d.to);
  const IntVector da = a.boundary().alpha.apply(d.coefficients);
  const IntVector db = a.boundary().beta.apply(d.coefficients);
  for (std::size_t p = 0; p < x.size(); ++p)
    if (da[p] != y[p] - x[p] || db[p] != x[p] - y[p]) return false;
  return true;
}

IntVector combine(const std::vector<IntVector>& basis, std::span<const BigInt> t, std::size_t length) {
  IntVector out(length);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (t[j] == 0) continue;
    for (std::size_t i = 0; i < length; ++i) out[i] += t[j] * basis[j][i];
  }
  return out;
}

namespace {

void require_boundary(const AnalyzedDiagram& a, const Domain& d) {
  if (!satisfies_boundary(a, d)) throw std::logic_error("domain violates the alpha or beta boundary condition");
}

IntMatrix lattice_hnf(const AnalyzedDiagram& a) {
  return IntMatrix::from_rows(a.lattice().basis, a.region_count());
}

}  // namespace

std::optional<Domain> connecting_domain(const AnalyzedDiagram& a, const Generator& x, const Generator& y) {
  const IntVector cx = a.point_chain(x);
  const IntVector cy = a.point_chain(y);
  IntVector rhs(cx.size());
  for (std::size_t p = 0; p < rhs.size(); ++p) rhs[p] = cy[p] - cx[p];

  const auto solution = hermite_solve(a.boundary().alpha, rhs);
  if (!solution) return std::nullopt;

  IntVector n = solution->particular;
  const BigInt nz = n[static_cast<std::size_t>(a.basepoint_region())];
  if (nz != 0)
    for (auto& c : n) c -= nz;
  Domain d{reduce_modulo(std::move(n), lattice_hnf(a)), x, y};
  require_boundary(a, d);
  return d;
}

std::optional<IntVector> nonnegative_direction(const std::vector<IntVector>& basis) {
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  const std::size_t f = basis.front().size();
  LinearProgram lp;
  lp.variables = k;
  RatVector total(k);
  for (std::size_t i = 0; i < f; ++i) {
    RatVector row(k);
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = Rational(basis[j][i]);
      total[j] += row[j];
    }
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  lp.add(std::move(total), Relation::Equal, 1);
  const auto t = lp_feasible_point(lp);
  if (!t) return std::nullopt;

  RatVector w(f);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < f; ++i) w[i] += (*t)[j] * basis[j][i];
  return primitive_integer_vector(w);
}

namespace {

// Depth-first integer sweep over lattice coordinates, each bounded by exact
// LP over the polytope with earlier coordinates fixed.
class PositiveSweep {
 public:
  PositiveSweep(const AnalyzedDiagram& a, const IntVector& base, const Generator& x, const Generator& y,
                const BigInt& target)
      : a_(a), base_(base), x_(x), y_(y), target_(target) {
    // The index is affine in the lattice coordinates.
    remaining_index_ = target - maslov_index(a, base, x, y);
    for (const auto& p : a.lattice().basis) step_.push_back(maslov_index(a, p, x, y));
  }

  std::vector<Domain> run() {
    descend();
    return std::move(results_);
  }

 private:
  LinearProgram remaining_program() const {
    const auto& basis = a_.lattice().basis;
    const std::size_t k = basis.size();
    const std::size_t done = fixed_.size();
    const std::size_t free = k - done;
    LinearProgram lp;
    lp.variables = free;
    for (std::size_t i = 0; i < base_.size(); ++i) {
      RatVector row(free);
      BigInt constant = base_[i];
      for (std::size_t j = 0; j < done; ++j) constant += fixed_[j] * basis[j][i];
      for (std::size_t j = done; j < k; ++j) row[j - done] = Rational(basis[j][i]);
      lp.add(std::move(row), Relation::GreaterEqual, Rational(-constant));
    }
    RatVector row(free);
    BigInt rhs = remaining_index_;
    for (std::size_t j = 0; j < done; ++j) rhs -= fixed_[j] * step_[j];
    for (std::size_t j = done; j < k; ++j) row[j - done] = Rational(step_[j]);
    lp.add(std::move(row), Relation::Equal, Rational(rhs));
    return lp;
  }

  void descend() {
    const auto& basis = a_.lattice().basis;
    if (fixed_.size() == basis.size()) {
      IntVector n = base_;
      for (std::size_t j = 0; j < fixed_.size(); ++j)
        for (std::size_t i = 0; i < n.size(); ++i) n[i] += fixed_[j] * basis[j][i];
      if (std::any_of(n.begin(), n.end(), [](const BigInt& c) { return c < 0; })) return;
      Domain d{std::move(n), x_, y_};
      if (maslov_index(a_, d) != target_) return;
      results_.push_back(std::move(d));
      return;
    }
    LinearProgram lp = remaining_program();
    lp.objective.assign(lp.variables, Rational(0));
    lp.objective[0] = 1;
    lp.maximize = false;
    const auto low = lp_optimize(lp);
    if (std::holds_alternative<LpInfeasible>(low)) return;
    if (!std::holds_alternative<LpOptimal>(low)) throw std::logic_error("positive domain polytope is unbounded");
    lp.maximize = true;
    const auto high = lp_optimize(lp);
    if (!std::holds_alternative<LpOptimal>(high)) throw std::logic_error("positive domain polytope is unbounded");
    const BigInt hi = floor_of(std::get<LpOptimal>(high).value);
    for (BigInt t = ceil_of(std::get<LpOptimal>(low).value); t <= hi; ++t) {
      fixed_.push_back(t);
      descend();
      fixed_.pop_back();
    }
  }

  const AnalyzedDiagram& a_;
  const IntVector& base_;
  const Generator& x_;
  const Generator& y_;
  BigInt target_;
  BigInt remaining_index_;
  std::vector<BigInt> step_;
  std::vector<BigInt> fixed_;
  std::vector<Domain> results_;
};

}  // namespace

std::vector<Domain> positive_domains(const AnalyzedDiagram& a, const Generator& x, const Generator& y,
                                     const BigInt& index, const BigInt& nz) {
  const auto d0 = connecting_domain(a, x, y);
  if (!d0) return {};
  if (auto witness = nonnegative_direction(a.lattice().basis)) throw Unbounded(std::move(*witness));

  IntVector base = d0->coefficients;
  for (auto& c : base) c += nz;
  auto found = PositiveSweep(a, base, x, y, index).run();
  for (const auto& d : found) require_boundary(a, d);
  std::sort(found.begin(), found.end(),
            [](const Domain& l, const Domain& r) { return l.coefficients < r.coefficients; });
  return found;
}

}  // namespace hf
