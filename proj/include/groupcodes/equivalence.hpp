#pragma once

// Module isomorphism and Murray–von Neumann equivalence at desk scale.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "groupcodes/additive_code.hpp"
#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group_algebra.hpp"
#include "groupcodes/operators.hpp"

namespace groupcodes {

/// FG: commute with G and F. KG: commute with G and K.
enum class Linearity { kFG, kKG };

inline constexpr std::uint64_t kExhaustiveHomLimit = std::uint64_t{1} << 16;
inline constexpr std::size_t kRandomIsoTrials = 1024;

/// Equivariant maps M → N. A map φ is stored as the dim(M)×dim(N) matrix X
/// over F_p with [φ(x)]_N = [x]_M·X in the codes' echelon bases.
struct HomSpace {
  AdditiveCode source;
  AdditiveCode target;
  Linearity linearity = Linearity::kFG;
  std::vector<FpMatrix> basis;

  std::size_t dim_fp() const { return basis.size(); }
  std::size_t dim_f() const;
  /// |Hom| = p^dim if it fits in 64 bits.
  std::optional<std::uint64_t> size() const;
  /// Σ coeffs[i]·basis[i].
  FpMatrix combine(std::span<const Scalar> coeffs) const;
  /// φ(x) for x ∈ M, both in ambient coordinates.
  FpVector apply(const FpMatrix& map, std::span<const Scalar> coords) const;
};

/// Throws kNotSubmodule unless both codes are FG-submodules (left ideals for KG).
HomSpace hom_space(const AdditiveCode& m, const AdditiveCode& n, Linearity linearity = Linearity::kFG);

enum class Decision { kYes, kNo, kIndeterminate };
std::string_view to_string(Decision d);

struct IsomorphismResult {
  Decision decision = Decision::kIndeterminate;
  std::optional<FpMatrix> map;  // invertible element of Hom(M, N) when kYes
  bool exhaustive = false;      // decided without random sampling
};

/// Decides M ≅ N. Differing dimensions, or dim Hom(M, N) differing from
/// dim End(M) or dim End(N), prove non-isomorphism. Otherwise Hom(M, N) is
/// scanned completely when it has at most 2^16 elements, else sampled
/// kRandomIsoTrials times, which may end in kIndeterminate.
IsomorphismResult modules_isomorphic(const AdditiveCode& m, const AdditiveCode& n, Linearity linearity,
                                     std::mt19937_64& rng);

/// a, b with e = b·a and f = a·b. For operators the product is composition.
template <class T>
struct MvnWitness {
  T a;
  T b;
};

template <class T>
struct MvnResult {
  Decision decision = Decision::kIndeterminate;
  std::optional<MvnWitness<T>> witness;
};

/// e ∼ f in KG, decided through KGe ≅ KGf as KG-modules; the witness is
/// u = φ(e), v = φ^{-1}(f) with uv = e, vu = f, stored as b = u, a = v.
/// Throws kNotIdempotent.
MvnResult<AlgebraElement> mvn_idempotents(const AlgebraElement& e, const AlgebraElement& f, std::mt19937_64& rng);

/// P ∼ Q in End_FG(KG) (or End_KG(KG)), with A = φ∘P, B = φ^{-1}∘Q.
/// Throws kNotProjector unless both are projectors with the requested linearity.
MvnResult<FLinearOperator> mvn_projectors(const FLinearOperator& p, const FLinearOperator& q, std::mt19937_64& rng,
                                          Linearity linearity = Linearity::kFG);

bool verify_witness(const MvnWitness<AlgebraElement>& w, const AlgebraElement& e, const AlgebraElement& f);
bool verify_witness(const MvnWitness<FLinearOperator>& w, const FLinearOperator& e, const FLinearOperator& f);

/// (a, b) for e ∼ f turned into (b, a) for f ∼ e.
template <class T>
MvnWitness<T> swap_witness(const MvnWitness<T>& w) {
  return {w.b, w.a};
}

/// Replaces (a, b) by (f·a·e, e·b·f); still a witness, now with a ∈ fRe
/// and b ∈ eRf.
MvnWitness<AlgebraElement> normalize_witness(const MvnWitness<AlgebraElement>& w, const AlgebraElement& e,
                                             const AlgebraElement& f);
MvnWitness<FLinearOperator> normalize_witness(const MvnWitness<FLinearOperator>& w, const FLinearOperator& e,
                                              const FLinearOperator& f);

/// From normalized witnesses for e ∼ f and f ∼ h, a witness for e ∼ h.
MvnWitness<AlgebraElement> chain_witnesses(const MvnWitness<AlgebraElement>& ef,
                                           const MvnWitness<AlgebraElement>& fh);
MvnWitness<FLinearOperator> chain_witnesses(const MvnWitness<FLinearOperator>& ef,
                                            const MvnWitness<FLinearOperator>& fh);

}  // namespace groupcodes
