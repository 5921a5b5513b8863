#pragma once

// The Euclidean, trace-Euclidean, Hermitian and trace-Hermitian forms on KG.
//
// Orthogonal complements are computed only for the F-valued trace forms,
// through their Gram matrices. E/H complements are reachable only for
// K-linear codes, where they coincide with the TE/TH ones.

#include "groupcodes/additive_code.hpp"
#include "groupcodes/group_algebra.hpp"

namespace groupcodes {

/// ⟨x, y⟩_★. K-valued for E/H, F-valued for TE/TH.
/// Throws Error(kOddDegree) for H/TH when m is odd.
FieldElement pair(FormKind kind, const AlgebraElement& x, const AlgebraElement& y);

/// Gram matrix of the trace form in canonical coordinates: symmetric and
/// invertible, with ⟨x, y⟩ = [x]·G·[y]^T. When q is not prime the entries
/// are those of Tr_{F/F_p}∘⟨·,·⟩_★, which has the same complements on
/// F-subspaces.
const FpMatrix& trace_gram(const GroupAlgebra& algebra, FormKind kind);

/// The full complement C^{⊥★} in KG for ★ ∈ {TE, TH}.
AdditiveCode orthogonal(FormKind kind, const AdditiveCode& code);

/// C^{⊥E} (or C^{⊥H}) for a K-linear code, computed as C^{⊥TE} (C^{⊥TH}).
/// Throws Error(kNotKLinear) when C is not closed under K-scalars.
AdditiveCode euclidean_orthogonal_of_ideal(FormKind kind, const AdditiveCode& code);

/// E → TE, H → TH; trace forms map to themselves.
FormKind trace_form_of(FormKind kind);

/// θ(a) with ⟨a·x, y⟩_★ = ⟨x, θ(a)·y⟩_★: a* for E/TE, conj(a)* for H/TH.
AlgebraElement form_adjoint_element(FormKind kind, const AlgebraElement& a);

}  // namespace groupcodes
