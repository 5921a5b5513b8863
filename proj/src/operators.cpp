#include "groupcodes/operators.hpp"

#include "groupcodes/error.hpp"

namespace groupcodes {

namespace {

bool commutes(const FpMatrix& m, const FpMatrix& action) { return action * m == m * action; }

std::vector<AlgebraElement> coordinate_basis(const GroupAlgebra& kg) {
  std::vector<AlgebraElement> out;
  out.reserve(kg.dimension());
  FpVector unit(kg.dimension(), 0);
  for (std::size_t r = 0; r < kg.dimension(); ++r) {
    unit[r] = 1;
    out.push_back(kg.from_coords(unit));
    unit[r] = 0;
  }
  return out;
}

}  // namespace

FLinearOperator::FLinearOperator(GroupAlgebraPtr algebra, FpMatrix matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  const std::size_t dim = algebra_->dimension();
  if (matrix_.rows() != dim || matrix_.cols() != dim || matrix_.p() != algebra_->p())
    throw Error(ErrorKind::kLengthMismatch, "operator matrix must be " + std::to_string(dim) + "x" +
                                                std::to_string(dim) + " over F_" + std::to_string(algebra_->p()));
  if (algebra_->field().subfield_exponent() > 1 && !commutes(matrix_, algebra_->subfield_scalar()))
    throw Error(ErrorKind::kInvalidArgument, "matrix is F_p-linear but not F-linear");
}

FLinearOperator FLinearOperator::identity(GroupAlgebraPtr algebra) {
  auto m = FpMatrix::identity(algebra->p(), algebra->dimension());
  return {std::move(algebra), std::move(m)};
}

FLinearOperator FLinearOperator::zero(GroupAlgebraPtr algebra) {
  FpMatrix m(algebra->p(), algebra->dimension(), algebra->dimension());
  return {std::move(algebra), std::move(m)};
}

AlgebraElement FLinearOperator::apply(const AlgebraElement& x) const {
  require_same_ambient(*algebra_, x.algebra());
  return algebra_->from_coords(apply(x.to_coords()));
}

FLinearOperator compose(const FLinearOperator& outer, const FLinearOperator& inner) {
  require_same_ambient(outer.algebra(), inner.algebra());
  return {outer.algebra_ptr(), inner.matrix() * outer.matrix()};
}

FLinearOperator operator+(const FLinearOperator& s, const FLinearOperator& t) {
  require_same_ambient(s.algebra(), t.algebra());
  return {s.algebra_ptr(), s.matrix() + t.matrix()};
}

FLinearOperator operator-(const FLinearOperator& s, const FLinearOperator& t) {
  require_same_ambient(s.algebra(), t.algebra());
  return {s.algebra_ptr(), s.matrix() - t.matrix()};
}

bool is_fg_linear(const FLinearOperator& t, LinearityCheck mode) {
  const GroupAlgebra& kg = t.algebra();
  if (mode == LinearityCheck::kGenerators) {
    for (auto g : kg.group().generators())
      if (!commutes(t.matrix(), kg.left_translation(g))) return false;
    return true;
  }
  for (std::size_t g = 0; g < kg.n(); ++g)
    if (!commutes(t.matrix(), kg.left_translation(g))) return false;
  return true;
}

bool is_kg_linear(const FLinearOperator& t) {
  return is_fg_linear(t, LinearityCheck::kGenerators) && commutes(t.matrix(), t.algebra().field_scalar());
}

bool is_projector(const FLinearOperator& t) { return t.matrix() * t.matrix() == t.matrix(); }

FLinearOperator rho(const AlgebraElement& e) {
  const GroupAlgebra& kg = e.algebra();
  FpMatrix m(kg.p(), 0, kg.dimension());
  for (const auto& b : coordinate_basis(kg)) m.append_row((b * e).to_coords());
  return {e.algebra_ptr(), std::move(m)};
}

FLinearOperator left_multiplication(const AlgebraElement& a) {
  const GroupAlgebra& kg = a.algebra();
  FpMatrix m(kg.p(), 0, kg.dimension());
  for (const auto& b : coordinate_basis(kg)) m.append_row((a * b).to_coords());
  return {a.algebra_ptr(), std::move(m)};
}

FLinearOperator adjoint(FormKind kind, const FLinearOperator& t) {
  if (!is_trace_form(kind))
    throw Error(ErrorKind::kInvalidArgument, "adjoints are defined for the trace forms TE and TH only");
  const GroupAlgebra& kg = t.algebra();
  const FpMatrix& g = kg.trace_gram(kind);
  const FpMatrix& g_inv = kg.trace_gram_inverse(kind);
  return {t.algebra_ptr(), g * t.matrix().transpose() * g_inv};
}

bool is_self_adjoint(FormKind kind, const FLinearOperator& t) { return adjoint(kind, t) == t; }

AdditiveCode image(const FLinearOperator& t) { return AdditiveCode::from_rows(t.algebra_ptr(), row_space(t.matrix())); }

AdditiveCode kernel(const FLinearOperator& t) {
  return AdditiveCode::from_rows(t.algebra_ptr(), left_null_space(t.matrix()));
}

FpMatrix subspace_rows(const SubfieldSubspace& u) {
  const FieldTower& f = *u.field;
  FpMatrix rows(f.p(), 0, f.degree());
  for (auto x : u.basis) {
    FieldElement y = x;
    for (unsigned k = 0; k < f.subfield_exponent(); ++k) {
      rows.append_row(f.basis_coords(y));
      y = f.mul(y, f.subfield_generator());
    }
  }
  return row_space(rows);
}

FpMatrix projection_matrix(const FpMatrix& image_basis, const FpMatrix& kernel_basis) {
  const FpMatrix w = vstack(image_basis, kernel_basis);
  auto w_inv = inverse(w);
  if (!w_inv) throw Error(ErrorKind::kNotComplementary, "subspaces are not complementary");
  // x = y·W with y = (y_c, y_d); the projection keeps y_c.
  FpMatrix keep(w.p(), w.rows(), w.cols());
  for (std::size_t i = 0; i < image_basis.rows(); ++i) keep(i, i) = 1;
  return *w_inv * keep * w;
}

FLinearOperator coefficientwise_projector(const GroupAlgebraPtr& algebra, const SubfieldSubspace& u, FormKind kind) {
  if (!is_trace_form(kind)) throw Error(ErrorKind::kInvalidArgument, "coefficientwise projector needs TE or TH");
  const FieldTower& f = algebra->field();
  if (u.field.get() != &f) throw Error(ErrorKind::kMixedAmbient, "subspace lives in a different field");
  const std::size_t bs = algebra->block_size();
  const FpMatrix u_rows = subspace_rows(u);
  // The Gram block of the form on K is the first diagonal block.
  const FpMatrix& gram = algebra->trace_gram(kind);
  FpMatrix k_gram(f.p(), bs, bs);
  for (std::size_t r = 0; r < bs; ++r)
    for (std::size_t c = 0; c < bs; ++c) k_gram(r, c) = gram(r, c);
  const FpMatrix u_perp = u_rows.rows() == 0 ? FpMatrix::identity(f.p(), bs) : right_null_space(u_rows * k_gram);
  if (u_rows.rows() + u_perp.rows() != bs || rank(vstack(u_rows, u_perp)) != bs)
    throw Error(ErrorKind::kNotComplementary, "K is not the direct sum of U and its orthogonal");
  const FpMatrix pi = projection_matrix(u_rows, u_perp);
  FpMatrix m(f.p(), algebra->dimension(), algebra->dimension());
  for (std::size_t j = 0; j < algebra->n(); ++j)
    for (std::size_t r = 0; r < bs; ++r)
      for (std::size_t c = 0; c < bs; ++c) m(j * bs + r, j * bs + c) = pi(r, c);
  return {algebra, std::move(m)};
}

FLinearOperator projector_from_summand(const AdditiveCode& c, const AdditiveCode& d) {
  require_same_ambient(c.algebra(), d.algebra());
  if (!c.is_submodule() || !d.is_submodule())
    throw Error(ErrorKind::kNotSubmodule, "both summands must be FG-submodules");
  const std::size_t dim = c.algebra().dimension();
  if (c.dim_fp() + d.dim_fp() != dim || rank(vstack(c.basis(), d.basis())) != dim)
    throw Error(ErrorKind::kNotComplementary, "C and D do not decompose KG");
  return {c.algebra_ptr(), projection_matrix(c.basis(), d.basis())};
}

}  // namespace groupcodes
