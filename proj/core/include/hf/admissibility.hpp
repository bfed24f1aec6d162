#pragma once

#include "hf/spinc.hpp"

#include <optional>

namespace hf {

enum class AdmissibilityKind { Weak, Strong };

struct AdmissibilityReport {
  AdmissibilityKind kind = AdmissibilityKind::Weak;
  bool verdict = true;
  /// Periodic domain violating the criterion; present whenever verdict is false.
  std::optional<IntVector> witness;
  /// <c1, witness>, for class-restricted checks.
  std::optional<BigInt> witness_pairing;
  /// Positive area vector, present when verdict is true.
  std::optional<RatVector> certificate;

  // Strong checks only. `positive_part`: no P with <c1,P> = 2n > 0 and all
  // coefficients <= n. `zero_part`: weak admissibility on <c1,P> = 0.
  bool positive_part = true;
  bool zero_part = true;
};

/// Without a class every periodic domain is constrained; with a class only
/// those pairing to zero with c1.
AdmissibilityReport weak_admissible(const AnalyzedDiagram& a, const SpincClass* cls = nullptr);

AdmissibilityReport strong_admissible(const AnalyzedDiagram& a, const SpincClass& cls);

/// Positive region areas with total 1 and signed area 0 (weak) or <c1,P>/2
/// (strong) on every periodic domain. Throws NotAdmissible when none exists.
RatVector area_certificate(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls = nullptr);

/// Exact check of the defining equalities of a certificate.
bool verify_certificate(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls,
                        const RatVector& areas);

/// Exact check that `witness` is a nonzero lattice-span element violating
/// the criterion.
bool verify_witness(const AnalyzedDiagram& a, AdmissibilityKind kind, const SpincClass* cls,
                    const IntVector& witness);

}  // namespace hf
