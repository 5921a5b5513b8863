#pragma once

// F-linear endomorphisms of KG as square matrices over F_p acting on
// canonical coordinates from the right: [T(x)] = [x]·M. Under this
// convention the adjoint for a trace form with Gram matrix G is
//
//   M* = G·M^T·G^{-1}
//
// and composition T∘S has matrix M_S·M_T.

#include <vector>

#include "groupcodes/additive_code.hpp"
#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group_algebra.hpp"

namespace groupcodes {

class FLinearOperator {
 public:
  /// Throws Error(kLengthMismatch) unless the matrix is dim×dim, and
  /// Error(kInvalidArgument) unless it commutes with F-scalars.
  FLinearOperator(GroupAlgebraPtr algebra, FpMatrix matrix);

  static FLinearOperator identity(GroupAlgebraPtr algebra);
  static FLinearOperator zero(GroupAlgebraPtr algebra);

  const GroupAlgebra& algebra() const { return *algebra_; }
  const GroupAlgebraPtr& algebra_ptr() const { return algebra_; }
  const FpMatrix& matrix() const { return matrix_; }

  AlgebraElement apply(const AlgebraElement& x) const;
  FpVector apply(std::span<const Scalar> coords) const { return vec_mat(coords, matrix_); }

  friend bool operator==(const FLinearOperator& s, const FLinearOperator& t) {
    return s.algebra_->same_ambient(*t.algebra_) && s.matrix_ == t.matrix_;
  }

 private:
  GroupAlgebraPtr algebra_;
  FpMatrix matrix_;
};

/// outer ∘ inner.
FLinearOperator compose(const FLinearOperator& outer, const FLinearOperator& inner);
inline FLinearOperator operator*(const FLinearOperator& outer, const FLinearOperator& inner) {
  return compose(outer, inner);
}
FLinearOperator operator+(const FLinearOperator& s, const FLinearOperator& t);
FLinearOperator operator-(const FLinearOperator& s, const FLinearOperator& t);

enum class LinearityCheck {
  kGenerators,   // commute with L_g for a generating set of G
  kAllElements,  // commute with L_g for every g ∈ G
};

#ifdef NDEBUG
inline constexpr LinearityCheck kDefaultLinearityCheck = LinearityCheck::kGenerators;
#else
inline constexpr LinearityCheck kDefaultLinearityCheck = LinearityCheck::kAllElements;
#endif

bool is_fg_linear(const FLinearOperator& t, LinearityCheck mode = kDefaultLinearityCheck);
/// Commutes with multiplication by every scalar of K (and with G): the
/// KG-linear maps, which are exactly the right multiplications.
bool is_kg_linear(const FLinearOperator& t);
bool is_projector(const FLinearOperator& t);

/// x ↦ x·e.
FLinearOperator rho(const AlgebraElement& e);
/// x ↦ a·x.
FLinearOperator left_multiplication(const AlgebraElement& a);

/// Adjoint for ★ ∈ {TE, TH}.
FLinearOperator adjoint(FormKind kind, const FLinearOperator& t);
bool is_self_adjoint(FormKind kind, const FLinearOperator& t);

AdditiveCode image(const FLinearOperator& t);
AdditiveCode kernel(const FLinearOperator& t);

/// An F-subspace U of K given by an F-basis.
struct SubfieldSubspace {
  FieldTowerPtr field;
  std::vector<FieldElement> basis;
};

/// F_p-basis (basis coordinates of K) of the F-span of U.
FpMatrix subspace_rows(const SubfieldSubspace& u);

/// The projector applying π_U to every coefficient, where π_U projects K onto
/// U along U^{⊥★} for the form (x, y) ↦ Tr(x·y) or Tr(x·ȳ) on K.
/// Throws Error(kNotComplementary) unless K = U ⊕ U^{⊥★}.
FLinearOperator coefficientwise_projector(const GroupAlgebraPtr& algebra, const SubfieldSubspace& u, FormKind kind);

/// The projector with image C and kernel D, for FG-submodules with C ⊕ D = KG.
FLinearOperator projector_from_summand(const AdditiveCode& c, const AdditiveCode& d);

/// Matrix of the projection onto row_space(image) along row_space(kernel);
/// the two must be complementary.
FpMatrix projection_matrix(const FpMatrix& image_basis, const FpMatrix& kernel_basis);

}  // namespace groupcodes
