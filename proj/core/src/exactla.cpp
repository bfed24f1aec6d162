#include "hf/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hf {

IntVector primitive_integer_vector(const RatVector& v) {
  BigInt den = 1;
  for (const auto& q : v) den = lcm(den, denominator_of(q));
  IntVector out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator_of(v[i]) * (den / denominator_of(v[i]));
    g = gcd(g, abs(out[i]));
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero()) acc += (*this)(r, c) * x[c];
    out[r] = std::move(acc);
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[dst] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(src, c).is_zero()) m(dst, c) -= q * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

struct Echelon {
  IntMatrix form;       // transform * input
  IntMatrix transform;  // unimodular
  std::vector<std::size_t> pivots;
};

// Integer row echelon form by repeated Euclidean reduction, followed by
// Hermite reduction of the entries above each pivot.
Echelon echelon(const IntMatrix& input, bool track_transform) {
  Echelon out{input, track_transform ? IntMatrix::identity(input.rows()) : IntMatrix(), {}};
  IntMatrix& e = out.form;
  IntMatrix& t = out.transform;
  const std::size_t rows = e.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols() && r < rows; ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (e(i, c).is_zero()) continue;
        if (best == rows || abs(e(i, c)) < abs(e(best, c))) best = i;
      }
      if (best == rows) break;
      have_pivot = true;
      swap_rows(e, r, best);
      if (track_transform) swap_rows(t, r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < rows; ++k) {
        if (e(k, c).is_zero()) continue;
        BigInt q = floor_div(e(k, c), e(r, c));
        axpy_row(e, k, r, q);
        if (track_transform) axpy_row(t, k, r, q);
        if (!e(k, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (e(r, c) < 0) {
      negate_row(e, r);
      if (track_transform) negate_row(t, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < out.pivots.size(); ++i) {
    const std::size_t c = out.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      BigInt q = floor_div(e(k, c), e(i, c));
      axpy_row(e, k, i, q);
      if (track_transform) axpy_row(t, k, i, q);
    }
  }
  return out;
}

IntMatrix leading_rows(const IntMatrix& m, std::size_t count) {
  IntMatrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  Echelon ech = echelon(m, false);
  return leading_rows(ech.form, ech.pivots.size());
}

std::vector<BigInt> smith_invariants(const IntMatrix& input) {
  IntMatrix m = input;
  std::vector<BigInt> diag;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t br = rows, bc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!m(i, j).is_zero() && (br == rows || abs(m(i, j)) < abs(m(br, bc)))) br = i, bc = j;
      if (br == rows) return diag;
      swap_rows(m, t, br);
      if (bc != t)
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, bc));

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t).is_zero()) continue;
        axpy_row(m, i, t, floor_div(m(i, t), m(t, t)));
        if (!m(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j).is_zero()) continue;
        BigInt q = floor_div(m(t, j), m(t, t));
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (!m(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      axpy_row(m, t, bad, BigInt(-1));
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

std::size_t rank(const IntMatrix& m) { return smith_invariants(m).size(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  Echelon ech = echelon(m.transposed(), true);
  std::vector<IntVector> raw;
  for (std::size_t r = ech.pivots.size(); r < ech.transform.rows(); ++r) raw.push_back(ech.transform.row(r));
  if (raw.empty()) return {};
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(raw, m.cols()));
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < h.rows(); ++r) out.push_back(h.row(r));
  return out;
}

IntVector reduce_modulo(IntVector v, const IntMatrix& hnf) {
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t c = 0;
    while (c < hnf.cols() && hnf(r, c).is_zero()) ++c;
    if (c == hnf.cols()) continue;
    BigInt q = floor_div(v[c], hnf(r, c));
    if (q.is_zero()) continue;
    for (std::size_t j = c; j < hnf.cols(); ++j) v[j] -= q * hnf(r, j);
  }
  return v;
}

std::optional<IntegerSolution> hermite_solve(const IntMatrix& a, std::span<const BigInt> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("hermite_solve: dimension mismatch");
  Echelon ech = echelon(a.transposed(), true);
  // Row i < rank of ech.form is the image A u_i of the unimodular column u_i.
  IntVector residual(b.begin(), b.end());
  IntVector x(a.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    const BigInt& pivot = ech.form(i, p);
    if (residual[p] % pivot != 0) return std::nullopt;
    BigInt y = residual[p] / pivot;
    if (y.is_zero()) continue;
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] -= y * ech.form(i, k);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y * ech.transform(i, k);
  }
  for (const auto& v : residual)
    if (!v.is_zero()) return std::nullopt;

  IntegerSolution sol;
  std::vector<IntVector> raw;
  for (std::size_t r = ech.pivots.size(); r < ech.transform.rows(); ++r) raw.push_back(ech.transform.row(r));
  if (!raw.empty()) {
    IntMatrix h = hermite_normal_form(IntMatrix::from_rows(raw, a.cols()));
    for (std::size_t r = 0; r < h.rows(); ++r) sol.kernel.push_back(h.row(r));
    x = reduce_modulo(std::move(x), h);
  }
  sol.particular = std::move(x);

  if (a.apply(sol.particular) != IntVector(b.begin(), b.end()))
    throw std::logic_error("hermite_solve: particular solution does not satisfy the system");
  const IntVector zero(a.rows());
  for (const auto& k : sol.kernel)
    if (a.apply(k) != zero) throw std::logic_error("hermite_solve: kernel vector not annihilated");
  return sol;
}

}  // namespace hf
