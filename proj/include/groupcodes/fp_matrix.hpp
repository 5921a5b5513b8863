#pragma once

// Dense linear algebra over a prime field F_p.
//
// Every subspace and operator in the library is expressed in F_p
// coordinates, so this is the one place where elimination lives.
// Vectors are rows; a matrix M acts on a row vector x as x·M.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace groupcodes {

using Scalar = std::uint32_t;
using FpVector = std::vector<Scalar>;

class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(Scalar p) : p_(p) {}

  Scalar p() const { return p_; }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Throws Error(kDivisionByZero) on zero.
  Scalar inv(Scalar a) const;

 private:
  Scalar p_ = 2;
};

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(Scalar p, std::size_t rows, std::size_t cols)
      : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(Scalar p, std::size_t n);
  static FpMatrix from_rows(Scalar p, std::size_t cols, const std::vector<FpVector>& rows);

  Scalar p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  FpVector row_vector(std::size_t r) const;
  std::vector<FpVector> row_vectors() const;

  const std::vector<Scalar>& data() const { return data_; }

  void append_row(std::span<const Scalar> v);
  FpMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p() == b.p() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scaled(const FpMatrix& a, Scalar s);

FpVector vec_mat(std::span<const Scalar> v, const FpMatrix& m);
FpVector vec_add(std::span<const Scalar> a, std::span<const Scalar> b, const PrimeField& f);
bool is_zero(std::span<const Scalar> v);

/// Stacks rows of a on top of rows of b.
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

struct Echelon {
  FpMatrix matrix;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(FpMatrix m);
std::size_t rank(const FpMatrix& m);

/// Reduced echelon basis of the row space.
FpMatrix row_space(const FpMatrix& m);
/// Basis of {x : x·m = 0}, in reduced echelon form.
FpMatrix left_null_space(const FpMatrix& m);
/// Basis of {v : m·v^T = 0}, in reduced echelon form.
FpMatrix right_null_space(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);
/// Some x with x·m = b, if one exists.
std::optional<FpVector> solve_left(const FpMatrix& m, std::span<const Scalar> b);
/// Basis of the intersection of two row spaces (same column count).
FpMatrix intersect_row_spaces(const FpMatrix& a, const FpMatrix& b);

/// Incrementally maintained reduced echelon basis; the workhorse behind
/// closure computations and membership tests.
class EchelonBasis {
 public:
  EchelonBasis(Scalar p, std::size_t cols) : field_(p), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after elimination against the current basis.
  FpVector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(std::span<const Scalar> v);
  /// Coefficients c with c·basis() = v, or nullopt if v is outside the span.
  std::optional<FpVector> coordinates(std::span<const Scalar> v) const;

  FpMatrix to_matrix() const;

 private:
  PrimeField field_;
  std::size_t cols_;
  // Kept fully reduced: each pivot column is zero in every other row, and
  // rows are sorted by pivot.
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace groupcodes
