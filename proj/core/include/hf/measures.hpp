#pragma once

#include "hf/analyzed.hpp"

#include <span>

namespace hf {

/// Sum of n_R (chi(R) - corners(R)/4).
Rational euler_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients);

/// Average of the coefficients in the four quadrants at `point`.
Rational point_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, int point);

Rational generator_measure(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, const Generator& x);

/// e(D) + n_from(D) + n_to(D). Throws NonIntegral if that is not an integer.
BigInt maslov_index(const AnalyzedDiagram& a, std::span<const BigInt> coefficients, const Generator& from,
                    const Generator& to);
BigInt maslov_index(const AnalyzedDiagram& a, const Domain& d);

/// Euler characteristic of an embedded representative: g - n_from - n_to + e.
BigInt embedded_euler_char(const AnalyzedDiagram& a, const Domain& d);

/// <c1(s_z(x)), P> = e(P) + 2 n_x(P). A kernel vector with n_z != 0 is first
/// moved to n_z = 0 by subtracting multiples of the fundamental class.
BigInt chern_pairing(const AnalyzedDiagram& a, const Generator& x, std::span<const BigInt> periodic);

/// <c1, P> + 2 n_z(P) for any kernel vector P; checked against the Maslov
/// index of P viewed as a domain from x to x.
BigInt periodic_index(const AnalyzedDiagram& a, const Generator& x, std::span<const BigInt> periodic);

}  // namespace hf
