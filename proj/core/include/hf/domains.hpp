#pragma once

#include "hf/exactla.hpp"
#include "hf/generators.hpp"

#include <optional>
#include <vector>

namespace hf {

class AnalyzedDiagram;

/// Integer 2-chain on the regions, together with its corner generators.
struct Domain {
  IntVector coefficients;
  Generator from;
  Generator to;
};

/// alpha(p, R): coefficient of point p in the boundary of the alpha part of
/// the boundary of region R. beta likewise for the beta part.
struct BoundarySystem {
  IntMatrix alpha;
  IntMatrix beta;
};

/// Periodic domains: kernel of the boundary map with n_z = 0.
struct PeriodicLattice {
  std::vector<IntVector> basis;  // canonical HNF rows
  IntVector sigma;               // the fundamental class, all ones
};

BoundarySystem boundary_system(const HeegaardDiagram& d, const QuadrantStructure& q);
PeriodicLattice periodic_lattice(const BoundarySystem& b, int basepoint_region);

const BoundarySystem& boundary_system(const AnalyzedDiagram& a);
const PeriodicLattice& periodic_lattice(const AnalyzedDiagram& a);

/// True when the alpha and beta boundary conditions both hold for D.
bool satisfies_boundary(const AnalyzedDiagram& a, const Domain& d);

/// A domain from x to y with n_z = 0, canonical modulo the periodic lattice;
/// absent exactly when no integer domain connects them.
std::optional<Domain> connecting_domain(const AnalyzedDiagram& a, const Generator& x, const Generator& y);

/// Every domain from x to y with nonnegative coefficients, n_z = nz and the
/// given Maslov index, sorted by coefficient vector. Throws Unbounded when a
/// nonzero nonnegative periodic direction exists.
std::vector<Domain> positive_domains(const AnalyzedDiagram& a, const Generator& x, const Generator& y,
                                     const BigInt& index, const BigInt& nz);

/// Primitive nonzero nonnegative vector in the real span of `basis`, if any.
std::optional<IntVector> nonnegative_direction(const std::vector<IntVector>& basis);

/// Combination sum_j t_j basis_j.
IntVector combine(const std::vector<IntVector>& basis, std::span<const BigInt> t, std::size_t length);

}  // namespace hf
