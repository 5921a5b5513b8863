#pragma once

// Additive left group codes: construction, parameters and the duality
// criteria for idempotent and projector codes.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "groupcodes/additive_code.hpp"
#include "groupcodes/error.hpp"
#include "groupcodes/group_algebra.hpp"
#include "groupcodes/operators.hpp"

namespace groupcodes {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 16;

/// Raised when an exhaustive enumeration would visit more than the cap.
/// Carries the size as q^r so it never overflows.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::uint64_t base, std::size_t exponent, std::uint64_t cap);
  std::uint64_t base() const { return base_; }
  std::size_t exponent() const { return exponent_; }

 private:
  std::uint64_t base_;
  std::size_t exponent_;
};

/// The FG-submodule generated by `generators`.
AdditiveCode span_fg(const GroupAlgebraPtr& algebra, std::span<const AlgebraElement> generators);
/// The left ideal of KG generated by `generators`.
AdditiveCode span_kg(const GroupAlgebraPtr& algebra, std::span<const AlgebraElement> generators);
/// FG = F-span of G inside KG.
AdditiveCode group_ring_over_f(const GroupAlgebraPtr& algebra);

/// P(N). Throws kNotProjector unless P is an FG-linear projector and
/// kNotSubmodule unless N is an FG-submodule.
AdditiveCode restricted_projector_code(const FLinearOperator& p, const AdditiveCode& n);

/// FGe = ρ_e(FG).
AdditiveCode restricted_idempotent_code(const AlgebraElement& e);
/// KGe = ρ_e(KG).
AdditiveCode idempotent_code(const AlgebraElement& e);

struct CodeParameters {
  std::size_t length = 0;               // n = |G|
  std::uint64_t q = 0;                  // |F|
  std::size_t r = 0;                    // dim_F, so |C| = q^r
  std::optional<std::size_t> distance;  // absent for the zero code

  std::string to_string() const;  // "(3, 2^1, 3)"
  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// Exact parameters by enumerating every codeword. Weight counts nonzero
/// K-coefficients. Throws EnumerationTooLarge when |C| > cap.
CodeParameters parameters(const AdditiveCode& code, std::uint64_t cap = kDefaultEnumerationCap);
/// Same enumeration through the serial reference kernel.
CodeParameters parameters_serial(const AdditiveCode& code, std::uint64_t cap = kDefaultEnumerationCap);

bool is_lcd(FormKind kind, const AdditiveCode& code);
bool is_self_orthogonal(FormKind kind, const AdditiveCode& code);
bool is_self_dual(FormKind kind, const AdditiveCode& code);

/// n×n matrix over F, entries ⟨g_i e, g_j e⟩_★ in table order.
class GramOnFG {
 public:
  GramOnFG(FieldTowerPtr field, std::size_t n, std::vector<FieldElement> entries);
  std::size_t size() const { return n_; }
  FieldElement at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  bool is_zero() const;
  bool is_symmetric() const;
  /// Rank over F (equivalently over K, as the entries lie in F).
  std::size_t rank() const;

 private:
  FieldTowerPtr field_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

GramOnFG gram_on_fg(FormKind kind, const AlgebraElement& e);

/// A theorem-based answer next to the direct one.
struct CriterionCheck {
  bool criterion = false;
  bool direct = false;
  /// False when only criterion ⇒ direct is a theorem in this ambient.
  bool two_sided = true;
  bool agree() const { return criterion == direct; }
  /// What the theory guarantees: agreement, or just the implication.
  bool consistent() const { return two_sided ? agree() : (!criterion || direct); }
};

/// rank(M_e) = dim_F(FGe) versus is_lcd(FGe). Throws kNotIdempotent.
CriterionCheck lcd_criterion_check(FormKind kind, const AlgebraElement& e);
/// M_e = 0 and dim_F(FGe) = mn/2 versus is_self_dual(FGe).
CriterionCheck selfdual_criterion_check(FormKind kind, const AlgebraElement& e);
/// e* = 1 − e (TE) or conj(e)* = 1 − e (TH) versus is_self_dual(KGe).
/// The criterion implies self-duality for every G; the converse is only
/// claimed for abelian G, where an idempotent generator of a left ideal is
/// unique.
CriterionCheck ideal_selfdual_check(FormKind kind, const AlgebraElement& e);

/// The criterion values; each throws Error(kCrossCheckFailed) unless the
/// check is consistent().
bool lcd_criterion_rhoe(FormKind kind, const AlgebraElement& e);
bool selfdual_criterion_rhoe(FormKind kind, const AlgebraElement& e);
bool ideal_selfdual_idempotent(FormKind kind, const AlgebraElement& e);

/// For a ★-LCD left ideal C (★ ∈ {E, H}), the idempotent e = P(1) of the
/// projector onto C along C^⊥; it satisfies e² = e, θ(e) = e and KGe = C.
/// Returns nullopt when C is not LCD. Throws kNotKLinear.
std::optional<AlgebraElement> lcd_ideal_idempotent(FormKind kind, const AdditiveCode& code);

struct ModuleDualReport {
  std::size_t dim_ambient = 0;  // all dimensions over F
  std::size_t dim_code = 0;
  std::size_t dim_orthogonal = 0;
  bool dimension_ok = false;    // dim KG − dim C^⊥ = dim C
  bool kernel_ok = false;       // ker Φ = C^⊥
  bool equivariance_ok = false; // ⟨gx, c⟩ = ⟨x, g^{-1}c⟩ on samples
  bool passed() const { return dimension_ok && kernel_ok && equivariance_ok; }
};

/// Checks KG/C^⊥ ≅ C* through Φ(x)(c) = ⟨x, c⟩_★.
ModuleDualReport module_dual_check(FormKind kind, const AdditiveCode& code, std::mt19937_64& rng,
                                   std::size_t samples = 64);

/// An FG-complement of a submodule when |G| is invertible in F, obtained by
/// averaging a coordinate projection over G. nullopt otherwise.
std::optional<AdditiveCode> fg_complement(const AdditiveCode& code);

/// Which elements an idempotent scan visits.
struct ScanSet {
  std::vector<std::size_t> support;  // group indices; empty means all of G
  bool subfield_coefficients = false;  // coefficients from F instead of K
};

std::uint64_t scan_size(const GroupAlgebra& algebra, const ScanSet& set);
/// Idempotents in the scan set, sorted by canonical coordinates.
/// Throws EnumerationTooLarge past the cap.
std::vector<AlgebraElement> scan_idempotents(const GroupAlgebraPtr& algebra, const ScanSet& set = {},
                                             std::uint64_t cap = kDefaultScanCap);
std::vector<AlgebraElement> scan_idempotents_serial(const GroupAlgebraPtr& algebra, const ScanSet& set = {},
                                                    std::uint64_t cap = kDefaultScanCap);

}  // namespace groupcodes
