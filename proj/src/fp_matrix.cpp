#include "groupcodes/fp_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "groupcodes/error.hpp"
#include "groupcodes/kernels.hpp"

namespace groupcodes {

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

FpMatrix FpMatrix::identity(Scalar p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(Scalar p, std::size_t cols, const std::vector<FpVector>& rows) {
  FpMatrix m(p, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

FpVector FpMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<FpVector> FpMatrix::row_vectors() const {
  std::vector<FpVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void FpMatrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) {
    throw Error(ErrorKind::kLengthMismatch,
                "row of length " + std::to_string(v.size()) + " appended to " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p(), cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

namespace {

void require_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::kLengthMismatch, "matrix shapes or characteristics differ");
}

}  // namespace

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return kernels::matmul_parallel(a, b); }

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  FpMatrix c = a;
  const auto& f = a.field();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = f.add(a(r, k), b(r, k));
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  FpMatrix c = a;
  const auto& f = a.field();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = f.sub(a(r, k), b(r, k));
  return c;
}

FpMatrix scaled(const FpMatrix& a, Scalar s) {
  FpMatrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a.field().mul(a(r, k), s);
  return c;
}

FpVector vec_mat(std::span<const Scalar> v, const FpMatrix& m) {
  if (v.size() != m.rows())
    throw Error(ErrorKind::kLengthMismatch, "vector length does not match matrix rows");
  const Scalar p = m.p();
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc[c] = (acc[c] + static_cast<std::uint64_t>(v[r]) * row[c]) % p;
  }
  return {acc.begin(), acc.end()};
}

FpVector vec_add(std::span<const Scalar> a, std::span<const Scalar> b, const PrimeField& f) {
  if (a.size() != b.size()) throw Error(ErrorKind::kLengthMismatch, "vector lengths differ");
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::kLengthMismatch, "vstack column mismatch");
  FpMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

Echelon rref(FpMatrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead) {
      auto a = m.row(pr);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead);
    const Scalar inv = f.inv(prow[c]);
    for (std::size_t k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Scalar factor = m(r, c);
      auto row = m.row(r);
      for (std::size_t k = c; k < m.cols(); ++k) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
    }
    pivots.push_back(c);
    ++lead;
  }
  FpMatrix trimmed(m.p(), 0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) trimmed.append_row(m.row(r));
  return {std::move(trimmed), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank(); }

FpMatrix row_space(const FpMatrix& m) { return rref(m).matrix; }

FpMatrix right_null_space(const FpMatrix& m) {
  const Echelon e = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  FpMatrix basis(m.p(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = f.neg(e.matrix(r, free));
    basis.append_row(v);
  }
  return row_space(basis);
}

FpMatrix left_null_space(const FpMatrix& m) { return right_null_space(m.transpose()); }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return FpMatrix(m.p(), 0, 0);
  FpMatrix aug(m.p(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  return inv;
}

std::optional<FpVector> solve_left(const FpMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.cols()) throw Error(ErrorKind::kLengthMismatch, "right-hand side length mismatch");
  // x·m = b  <=>  m^T x^T = b^T; eliminate on [m^T | b^T].
  const std::size_t n = m.rows();
  FpMatrix aug(m.p(), m.cols(), n + 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < n; ++r) aug(c, r) = m(r, c);
    aug(c, n) = b[c];
  }
  const Echelon e = rref(std::move(aug));
  FpVector x(n, 0);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.matrix(r, n);
  }
  return x;
}

FpMatrix intersect_row_spaces(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::kLengthMismatch, "intersect column mismatch");
  if (a.rows() == 0 || b.rows() == 0) return FpMatrix(a.p(), 0, a.cols());
  // (u, w) with u·a + w·b = 0 gives u·a in both spaces.
  const FpMatrix stacked = vstack(a, b);
  const FpMatrix relations = left_null_space(stacked);
  FpMatrix u_part(a.p(), relations.rows(), a.rows());
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) u_part(r, c) = relations(r, c);
  return row_space(u_part * a);
}

FpVector EchelonBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::kLengthMismatch, "vector length mismatch in echelon basis");
  FpVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar coef = w[pivots_[i]];
    if (coef == 0) continue;
    const auto& r = rows_[i];
    for (std::size_t c = pivots_[i]; c < cols_; ++c) w[c] = field_.sub(w[c], field_.mul(coef, r[c]));
  }
  return w;
}

bool EchelonBasis::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(std::span<const Scalar> v) {
  FpVector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Scalar x) { return x != 0; });
  if (it == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
  const Scalar inv = field_.inv(w[pivot]);
  for (std::size_t c = pivot; c < cols_; ++c) w[c] = field_.mul(w[c], inv);
  // Clear the new pivot column from existing rows.
  for (auto& r : rows_) {
    const Scalar coef = r[pivot];
    if (coef == 0) continue;
    for (std::size_t c = pivot; c < cols_; ++c) r[c] = field_.sub(r[c], field_.mul(coef, w[c]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

std::optional<FpVector> EchelonBasis::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  FpVector coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

FpMatrix EchelonBasis::to_matrix() const { return FpMatrix::from_rows(field_.p(), cols_, rows_); }

}  // namespace groupcodes
