#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group_algebra.hpp"

namespace groupcodes {

/// An F-subspace of KG, stored as the reduced echelon F_p-basis of its
/// canonical coordinates. Two codes are equal iff their echelon bases are.
class AdditiveCode {
 public:
  /// F-span of the given coordinate rows.
  static AdditiveCode from_rows(GroupAlgebraPtr algebra, const FpMatrix& rows);
  static AdditiveCode from_elements(GroupAlgebraPtr algebra, std::span<const AlgebraElement> elements);
  static AdditiveCode zero(GroupAlgebraPtr algebra);
  static AdditiveCode full(GroupAlgebraPtr algebra);

  const GroupAlgebra& algebra() const { return *algebra_; }
  const GroupAlgebraPtr& algebra_ptr() const { return algebra_; }
  const FpMatrix& basis() const { return basis_; }

  std::size_t dim_fp() const { return basis_.rows(); }
  std::size_t dim_f() const { return basis_.rows() / algebra_->field().subfield_exponent(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == algebra_->dimension(); }

  /// Closed under left multiplication by every g ∈ G.
  bool is_submodule() const { return submodule_; }
  /// Closed under multiplication by every scalar of K.
  bool is_k_linear() const;
  bool is_stable_under(const FpMatrix& action) const;

  bool contains(std::span<const Scalar> coords) const;
  bool contains(const AlgebraElement& x) const;
  /// Coefficients with respect to basis(), if x lies in the code.
  std::optional<FpVector> coordinates(std::span<const Scalar> coords) const;
  std::vector<AlgebraElement> basis_elements() const;

  friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
    return a.algebra_->same_ambient(*b.algebra_) && a.basis_ == b.basis_;
  }

 private:
  AdditiveCode(GroupAlgebraPtr algebra, FpMatrix basis);

  GroupAlgebraPtr algebra_;
  FpMatrix basis_;
  bool submodule_ = false;
};

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `actions` (row convention), as a reduced echelon basis.
FpMatrix closure(const FpMatrix& seeds, std::span<const FpMatrix* const> actions);

/// C ∩ D.
AdditiveCode intersection(const AdditiveCode& c, const AdditiveCode& d);
/// C + D.
AdditiveCode sum(const AdditiveCode& c, const AdditiveCode& d);

}  // namespace groupcodes
