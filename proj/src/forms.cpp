#include "groupcodes/forms.hpp"

#include "groupcodes/error.hpp"

namespace groupcodes {

namespace {

void require_trace_form(FormKind kind) {
  if (!is_trace_form(kind))
    throw Error(ErrorKind::kInvalidArgument,
                "orthogonal complements are computed for TE/TH only, got " + std::string(to_string(kind)));
}

}  // namespace

FieldElement pair(FormKind kind, const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ambient(x.algebra(), y.algebra());
  const FieldTower& f = x.algebra().field();
  if (is_hermitian(kind) && f.m() % 2 != 0) throw Error(ErrorKind::kOddDegree, "Hermitian forms need even m");
  FieldElement sum = f.zero();
  for (std::size_t g = 0; g < x.coeffs().size(); ++g) {
    const FieldElement b = is_hermitian(kind) ? f.conjugate(y.coeff(g)) : y.coeff(g);
    sum = f.add(sum, f.mul(x.coeff(g), b));
  }
  return is_trace_form(kind) ? f.trace(sum) : sum;
}

const FpMatrix& trace_gram(const GroupAlgebra& algebra, FormKind kind) { return algebra.trace_gram(kind); }

AdditiveCode orthogonal(FormKind kind, const AdditiveCode& code) {
  require_trace_form(kind);
  const GroupAlgebra& kg = code.algebra();
  const FpMatrix& gram = kg.trace_gram(kind);
  if (code.is_zero()) return AdditiveCode::full(code.algebra_ptr());
  // v ⊥ C  <=>  B·G·v^T = 0 for the basis B of C.
  return AdditiveCode::from_rows(code.algebra_ptr(), right_null_space(code.basis() * gram));
}

AdditiveCode euclidean_orthogonal_of_ideal(FormKind kind, const AdditiveCode& code) {
  if (!code.is_k_linear()) throw Error(ErrorKind::kNotKLinear, "code is not closed under multiplication by K");
  return orthogonal(trace_form_of(kind), code);
}

FormKind trace_form_of(FormKind kind) {
  switch (kind) {
    case FormKind::kE:
    case FormKind::kTE: return FormKind::kTE;
    case FormKind::kH:
    case FormKind::kTH: return FormKind::kTH;
  }
  return FormKind::kTE;
}

AlgebraElement form_adjoint_element(FormKind kind, const AlgebraElement& a) {
  return is_hermitian(kind) ? star(conj(a)) : star(a);
}

}  // namespace groupcodes
