#include "hf/admissibility.hpp"

#include "hf/errors.hpp"
#include "hf/lp.hpp"
#include "hf/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace hf {

namespace {

// Lattice basis vectors P with <c1, P> = 0 for the class, or the whole basis.
std::vector<IntVector> constrained_basis(const AnalyzedDiagram& a, const SpincClass* cls) {
  const auto& basis = a.lattice().basis;
  if (!cls || basis.empty()) return basis;
  const IntMatrix row = IntMatrix::from_rows({cls->chern_row}, basis.size());
  std::vector<IntVector> out;
  for (const auto& u : kernel_basis(row)) out.push_back(combine(basis, u, a.region_count()));
  return out;
}

bool in_lattice(const AnalyzedDiagram& a, const IntVector& w) {
  const auto& basis = a.lattice().basis;
  if (basis.empty()) return std::all_of(w.begin(), w.end(), [](const BigInt& c) { return c == 0; });
  return hermite_solve(IntMatrix::from_rows(basis, a.region_count()).transposed(), w).has_value();
}

BigInt pairing(const AnalyzedDiagram& a, const SpincClass& cls, const IntVector& w) {
  return chern_pairing(a, cls.members.front(), w);
}

std::optional<RatVector> maximize_min_area(const AnalyzedDiagram& a, const std::vector<IntVector>& constrained,
                                           const RatVector& targets) {
  const std::size_t f = a.region_count();
  LinearProgram lp;
  lp.variables = f + 1;  // areas, then the slack s
  lp.objective.assign(f + 1, Rational(0));
  lp.objective[f] = 1;
  for (std::size_t i = 0; i < f; ++i) {
    RatVector row(f + 1);
    row[i] = 1;
    row[f] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  RatVector total(f + 1, Rational(1));
  total[f] = 0;
  lp.add(std::move(total), Relation::Equal, 1);
  for (std::size_t j = 0; j < constrained.size(); ++j) {
    RatVector row(f + 1);
    for (std::size_t i = 0; i < f; ++i) row[i] = Rational(constrained[j][i]);
    lp.add(std::move(row), Relation::Equal, targets[j]);
  }
  const auto result = lp_optimize(lp);
  const auto* best = std::get_if<LpOptimal>(&result);
  if (!best || best->value <= 0) return std::nullopt;
  return RatVector(best->point.begin(), best->point.begin() + static_cast<std::ptrdiff_t>(f));
}

}  // namespace

bool verify_witness(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls,
                    const IntVector& witness) {
  if (witness.size() != a.region_count()) return false;
  if (std::all_of(witness.begin(), witness.end(), [](const BigInt& c) { return c == 0; })) return false;
  if (!in_lattice(a, witness)) return false;
  const bool nonnegative = std::all_of(witness.begin(), witness.end(), [](const BigInt& c) { return c >= 0; });
  if (kind == AdmissibilityKind::Weak) return nonnegative && (!cls || pairing(a, *cls, witness) == 0);
  if (!cls) return false;
  const BigInt c1 = pairing(a, *cls, witness);
  if (c1 == 0) return nonnegative;
  if (c1 < 0 || c1 % 2 != 0) return false;
  const BigInt n = c1 / 2;
  return std::all_of(witness.begin(), witness.end(), [&](const BigInt& c) { return c <= n; });
}

bool verify_certificate(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls,
                        const RatVector& areas) {
  if (areas.size() != a.region_count()) return false;
  Rational total = 0;
  for (const auto& v : areas) {
    if (v <= 0) return false;
    total += v;
  }
  if (total != 1) return false;
  const auto& basis = kind == AdmissibilityKind::Weak ? constrained_basis(a, cls) : a.lattice().basis;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Rational signed_area = 0;
    for (std::size_t i = 0; i < areas.size(); ++i) signed_area += areas[i] * basis[j][i];
    const Rational expected = kind == AdmissibilityKind::Weak ? Rational(0) : Rational(cls->chern_row[j], 2);
    if (signed_area != expected) return false;
  }
  return true;
}

RatVector area_certificate(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls) {
  if (kind == AdmissibilityKind::Strong && !cls) throw UsageError("strong admissibility needs a Spin^c class");
  std::optional<RatVector> areas;
  if (kind == AdmissibilityKind::Weak) {
    const auto basis = constrained_basis(a, cls);
    areas = maximize_min_area(a, basis, RatVector(basis.size()));
  } else {
    RatVector targets;
    for (const auto& c : cls->chern_row) targets.emplace_back(c, 2);
    areas = maximize_min_area(a, a.lattice().basis, targets);
  }
  if (!areas) throw NotAdmissible("no positive area form exists");
  if (!verify_certificate(a, kind, cls, *areas)) throw std::logic_error("area certificate failed verification");
  return *areas;
}

AdmissibilityReport weak_admissible(const AnalyzedDiagram& a, const SpincClass* cls) {
  AdmissibilityReport report;
  report.kind = AdmissibilityKind::Weak;
  if (auto w = nonnegative_direction(constrained_basis(a, cls))) {
    report.verdict = false;
    if (cls) report.witness_pairing = pairing(a, *cls, *w);
    if (!verify_witness(a, report.kind, cls, *w)) throw std::logic_error("weak admissibility witness failed verification");
    report.witness = std::move(*w);
    return report;
  }
  report.certificate = area_certificate(a, report.kind, cls);
  return report;
}

AdmissibilityReport strong_admissible(const AnalyzedDiagram& a, const SpincClass& cls) {
  AdmissibilityReport report;
  report.kind = AdmissibilityKind::Strong;
  const auto& basis = a.lattice().basis;
  const std::size_t k = basis.size();

  // Positive part: some t with <c1, Pt> = 2 and Pt <= 1 everywhere.
  if (k > 0) {
    LinearProgram lp;
    lp.variables = k;
    RatVector c1(k);
    for (std::size_t j = 0; j < k; ++j) c1[j] = Rational(cls.chern_row[j]);
    lp.add(std::move(c1), Relation::Equal, 2);
    for (std::size_t i = 0; i < a.region_count(); ++i) {
      RatVector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = Rational(basis[j][i]);
      lp.add(std::move(row), Relation::LessEqual, 1);
    }
    if (const auto t = lp_feasible_point(lp)) {
      const IntVector coords = primitive_integer_vector(*t);
      IntVector w = combine(basis, coords, a.region_count());
      report.positive_part = false;
      report.witness_pairing = pairing(a, cls, w);
      report.witness = std::move(w);
    }
  }

  const auto zero = weak_admissible(a, &cls);
  report.zero_part = zero.verdict;
  if (!report.witness && zero.witness) {
    report.witness = zero.witness;
    report.witness_pairing = zero.witness_pairing;
  }
  report.verdict = report.positive_part && report.zero_part;
  if (report.witness) {
    if (!verify_witness(a, report.kind, &cls, *report.witness))
      throw std::logic_error("strong admissibility witness failed verification");
    return report;
  }
  report.certificate = area_certificate(a, report.kind, &cls);
  return report;
}

}  // namespace hf
