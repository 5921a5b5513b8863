#include "groupcodes/additive_code.hpp"

#include <deque>

#include "groupcodes/error.hpp"

namespace groupcodes {

FpMatrix closure(const FpMatrix& seeds, std::span<const FpMatrix* const> actions) {
  EchelonBasis basis(seeds.p(), seeds.cols());
  std::deque<FpVector> pending;
  for (std::size_t r = 0; r < seeds.rows(); ++r) {
    if (basis.insert(seeds.row(r))) pending.push_back(seeds.row_vector(r));
  }
  while (!pending.empty()) {
    const FpVector v = std::move(pending.front());
    pending.pop_front();
    for (const FpMatrix* action : actions) {
      FpVector w = vec_mat(v, *action);
      if (basis.insert(w)) pending.push_back(std::move(w));
    }
  }
  return basis.to_matrix();
}

AdditiveCode::AdditiveCode(GroupAlgebraPtr algebra, FpMatrix basis)
    : algebra_(std::move(algebra)), basis_(std::move(basis)) {
  submodule_ = true;
  for (auto g : algebra_->group().generators()) {
    if (!is_stable_under(algebra_->left_translation(g))) {
      submodule_ = false;
      break;
    }
  }
}

AdditiveCode AdditiveCode::from_rows(GroupAlgebraPtr algebra, const FpMatrix& rows) {
  if (rows.cols() != algebra->dimension() || rows.p() != algebra->p())
    throw Error(ErrorKind::kLengthMismatch, "code rows do not match the ambient coordinates");
  if (algebra->field().subfield_exponent() == 1) return {algebra, row_space(rows)};
  const FpMatrix* action = &algebra->subfield_scalar();
  return {algebra, closure(rows, std::span<const FpMatrix* const>(&action, 1))};
}

AdditiveCode AdditiveCode::from_elements(GroupAlgebraPtr algebra, std::span<const AlgebraElement> elements) {
  FpMatrix rows(algebra->p(), 0, algebra->dimension());
  for (const auto& e : elements) {
    require_same_ambient(*algebra, e.algebra());
    rows.append_row(e.to_coords());
  }
  return from_rows(std::move(algebra), rows);
}

AdditiveCode AdditiveCode::zero(GroupAlgebraPtr algebra) {
  FpMatrix empty(algebra->p(), 0, algebra->dimension());
  return {std::move(algebra), std::move(empty)};
}

AdditiveCode AdditiveCode::full(GroupAlgebraPtr algebra) {
  auto id = FpMatrix::identity(algebra->p(), algebra->dimension());
  return {std::move(algebra), std::move(id)};
}

bool AdditiveCode::is_stable_under(const FpMatrix& action) const {
  if (basis_.rows() == 0) return true;
  EchelonBasis eb(basis_.p(), basis_.cols());
  for (std::size_t r = 0; r < basis_.rows(); ++r) eb.insert(basis_.row(r));
  const FpMatrix image = basis_ * action;
  for (std::size_t r = 0; r < image.rows(); ++r)
    if (!eb.contains(image.row(r))) return false;
  return true;
}

bool AdditiveCode::is_k_linear() const { return is_stable_under(algebra_->field_scalar()); }

bool AdditiveCode::contains(std::span<const Scalar> coords) const { return coordinates(coords).has_value(); }

bool AdditiveCode::contains(const AlgebraElement& x) const {
  require_same_ambient(*algebra_, x.algebra());
  return contains(x.to_coords());
}

std::optional<FpVector> AdditiveCode::coordinates(std::span<const Scalar> coords) const {
  if (coords.size() != algebra_->dimension()) throw Error(ErrorKind::kLengthMismatch, "coordinate length mismatch");
  // The basis is reduced echelon, so the candidate coefficients are the
  // entries at the pivot columns.
  FpVector c(basis_.rows(), 0);
  FpVector residual(coords.begin(), coords.end());
  const PrimeField& f = basis_.field();
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    c[r] = coords[pivot];
    if (c[r] == 0) continue;
    for (std::size_t k = 0; k < residual.size(); ++k) residual[k] = f.sub(residual[k], f.mul(c[r], row[k]));
  }
  if (!groupcodes::is_zero(std::span<const Scalar>(residual))) return std::nullopt;
  return c;
}

std::vector<AlgebraElement> AdditiveCode::basis_elements() const {
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(algebra_->from_coords(basis_.row(r)));
  return out;
}

AdditiveCode intersection(const AdditiveCode& c, const AdditiveCode& d) {
  require_same_ambient(c.algebra(), d.algebra());
  return AdditiveCode::from_rows(c.algebra_ptr(), intersect_row_spaces(c.basis(), d.basis()));
}

AdditiveCode sum(const AdditiveCode& c, const AdditiveCode& d) {
  require_same_ambient(c.algebra(), d.algebra());
  return AdditiveCode::from_rows(c.algebra_ptr(), vstack(c.basis(), d.basis()));
}

}  // namespace groupcodes
