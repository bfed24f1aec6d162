#pragma once

#include "hf/analyzed.hpp"

#include <vector>

namespace hf {

/// Generators sharing a Spin^c structure, with their relative gradings.
struct SpincClass {
  std::vector<Generator> members;  // canonically sorted
  BigInt divisor;                  // 0 means Z-graded
  std::vector<BigInt> gradings;    // aligned with members; min 0, reduced mod divisor when nonzero
  IntVector chern_row;             // <c1, P_j> over the periodic lattice basis

  std::size_t position(const Generator& x) const;  // throws UsageError when absent
  const BigInt& grading(const Generator& x) const { return gradings[position(x)]; }
};

/// Canonical representative of y - x in the cokernel of the alpha boundary
/// map; zero exactly when a domain connects x to y.
IntVector spinc_difference(const AnalyzedDiagram& a, const Generator& x, const Generator& y);

/// Partition of all generators, classes ordered by their smallest member.
std::vector<SpincClass> spinc_partition(const AnalyzedDiagram& a);

/// gcd of |<c1, P>| over the periodic lattice basis.
BigInt grading_divisor(const AnalyzedDiagram& a, const SpincClass& c);

/// Gradings relative to the smallest member, shifted so the minimum is 0.
std::vector<BigInt> relative_gradings(const AnalyzedDiagram& a, const SpincClass& c);

}  // namespace hf
