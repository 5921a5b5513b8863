#pragma once

// The group algebra KG and its elements.
//
// Canonical coordinates. An element Σ c_j g_j is written over F_p in the
// basis {γ^k α^i g_j}, ordered group-major, then i, then k:
//
//   index = (j·m + i)·a + k,      0 ≤ j < n, 0 ≤ i < m, 0 ≤ k < a
//
// where q = p^a, α generates K over F and γ generates F over F_p. When q is
// prime (a = 1) these are exactly the F-coordinates in {α^i g_j}. Every
// operator matrix and code basis in the library uses this ordering, with
// row vectors: [T(x)] = [x]·M.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "groupcodes/finite_field.hpp"
#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group.hpp"

namespace groupcodes {

/// The four forms on KG: Euclidean, trace-Euclidean, Hermitian, trace-Hermitian.
enum class FormKind { kE, kTE, kH, kTH };

std::string_view to_string(FormKind kind);
FormKind parse_form_kind(std::string_view text);
inline bool is_trace_form(FormKind k) { return k == FormKind::kTE || k == FormKind::kTH; }
inline bool is_hermitian(FormKind k) { return k == FormKind::kH || k == FormKind::kTH; }

class AlgebraElement;

class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra> {
 public:
  static std::shared_ptr<const GroupAlgebra> create(FieldTowerPtr field, GroupPtr group);

  const FieldTower& field() const { return *field_; }
  const Group& group() const { return *group_; }
  const FieldTowerPtr& field_ptr() const { return field_; }
  const GroupPtr& group_ptr() const { return group_; }

  Scalar p() const { return field_->p(); }
  std::size_t n() const { return group_->order(); }
  /// F_p-coordinates per group element, a·m.
  std::size_t block_size() const { return field_->degree(); }
  /// dim_{F_p} KG = n·a·m.
  std::size_t dimension() const { return n() * block_size(); }
  /// dim_F KG = m·n.
  std::size_t f_dimension() const { return n() * field_->m(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement group_element(std::size_t g) const;
  AlgebraElement scalar(FieldElement lambda) const;
  AlgebraElement element(std::vector<FieldElement> coeffs) const;
  AlgebraElement from_coords(std::span<const Scalar> coords) const;
  AlgebraElement random(std::mt19937_64& rng) const;
  /// Uniform element of FG.
  AlgebraElement random_fg(std::mt19937_64& rng) const;

  /// |KG| if it fits in 64 bits.
  std::optional<std::uint64_t> element_count() const;
  /// Mixed-radix enumeration: coefficient of g_j is digit j (base |K|).
  AlgebraElement element_at(std::uint64_t index) const;

  /// x ↦ g·x.
  const FpMatrix& left_translation(std::size_t g) const { return left_translations_[g]; }
  /// x ↦ λ·x for λ ∈ K, block diagonal.
  FpMatrix scalar_matrix(FieldElement lambda) const;
  /// x ↦ γ·x; an F_p-subspace is an F-subspace iff it is stable under this.
  const FpMatrix& subfield_scalar() const { return subfield_scalar_; }
  /// x ↦ ξ·x with ξ primitive; stability means K-linearity.
  const FpMatrix& field_scalar() const { return field_scalar_; }

  /// Gram matrix over F_p of Tr_{F/F_p}∘⟨·,·⟩_★ for ★ ∈ {TE, TH}, in
  /// canonical coordinates. Built once per form on first use.
  const FpMatrix& trace_gram(FormKind kind) const;
  const FpMatrix& trace_gram_inverse(FormKind kind) const;

  bool same_ambient(const GroupAlgebra& other) const {
    return this == &other || (field_ == other.field_ && group_ == other.group_);
  }

  std::string describe() const;

 private:
  GroupAlgebra(FieldTowerPtr field, GroupPtr group);

  struct GramSlot {
    std::once_flag once;
    FpMatrix gram;
    FpMatrix inverse;
  };
  GramSlot& slot(FormKind kind) const;

  FieldTowerPtr field_;
  GroupPtr group_;
  std::vector<FpMatrix> left_translations_;
  FpMatrix subfield_scalar_;
  FpMatrix field_scalar_;
  mutable std::array<GramSlot, 2> grams_;
};

using GroupAlgebraPtr = std::shared_ptr<const GroupAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement(GroupAlgebraPtr algebra, std::vector<FieldElement> coeffs);

  const GroupAlgebra& algebra() const { return *algebra_; }
  const GroupAlgebraPtr& algebra_ptr() const { return algebra_; }
  std::span<const FieldElement> coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t g) const { return coeffs_[g]; }

  FpVector to_coords() const;
  bool is_zero() const;
  /// Number of nonzero K-coefficients.
  std::size_t weight() const;
  bool in_fg() const;
  bool is_idempotent() const;
  std::string format() const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.algebra_->same_ambient(*y.algebra_) && x.coeffs_ == y.coeffs_;
  }

 private:
  GroupAlgebraPtr algebra_;
  std::vector<FieldElement> coeffs_;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
/// Convolution product Σ a_g b_h gh. Throws Error(kMixedAmbient).
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(FieldElement lambda, const AlgebraElement& x);

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }
/// Σ a_g g^{-1}.
AlgebraElement star(const AlgebraElement& x);
/// Coefficientwise conjugation; throws Error(kOddDegree) when m is odd.
AlgebraElement conj(const AlgebraElement& x);
FieldElement coef_identity(const AlgebraElement& x);

void require_same_ambient(const GroupAlgebra& a, const GroupAlgebra& b);

}  // namespace groupcodes
