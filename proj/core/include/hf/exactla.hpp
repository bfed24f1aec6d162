#pragma once

#include "hf/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hf {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transposed() const;
  IntVector apply(std::span<const BigInt> x) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`:
/// each pivot is the first nonzero entry of its row and positive, pivots move
/// strictly right, entries above a pivot lie in [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<BigInt> smith_invariants(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Canonical (HNF) basis of {x in Z^cols : m x = 0}, one vector per row.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Canonical representative of v modulo the lattice with HNF basis `hnf`.
IntVector reduce_modulo(IntVector v, const IntMatrix& hnf);

struct IntegerSolution {
  IntVector particular;
  std::vector<IntVector> kernel;
};

/// Solves A x = b over the integers. Absent exactly when no integer solution
/// exists. The particular solution is reduced modulo the kernel lattice, so
/// the output is canonical.
std::optional<IntegerSolution> hermite_solve(const IntMatrix& a, std::span<const BigInt> b);

}  // namespace hf
