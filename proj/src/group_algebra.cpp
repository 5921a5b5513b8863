#include "groupcodes/group_algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "groupcodes/error.hpp"

namespace groupcodes {

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::kE: return "E";
    case FormKind::kTE: return "TE";
    case FormKind::kH: return "H";
    case FormKind::kTH: return "TH";
  }
  return "?";
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "E") return FormKind::kE;
  if (text == "TE") return FormKind::kTE;
  if (text == "H") return FormKind::kH;
  if (text == "TH") return FormKind::kTH;
  throw Error(ErrorKind::kParseError, "unknown form '" + std::string(text) + "' (expected E, TE, H or TH)");
}

void require_same_ambient(const GroupAlgebra& a, const GroupAlgebra& b) {
  if (!a.same_ambient(b)) throw Error(ErrorKind::kMixedAmbient, "operands live in different group algebras");
}

namespace {

FpMatrix block_diagonal(const FpMatrix& block, std::size_t copies) {
  const std::size_t b = block.rows();
  FpMatrix out(block.p(), b * copies, b * copies);
  for (std::size_t j = 0; j < copies; ++j)
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < b; ++c) out(j * b + r, j * b + c) = block(r, c);
  return out;
}

}  // namespace

std::shared_ptr<const GroupAlgebra> GroupAlgebra::create(FieldTowerPtr field, GroupPtr group) {
  if (!field || !group) throw Error(ErrorKind::kInvalidArgument, "group algebra needs a field and a group");
  return std::shared_ptr<const GroupAlgebra>(new GroupAlgebra(std::move(field), std::move(group)));
}

GroupAlgebra::GroupAlgebra(FieldTowerPtr field, GroupPtr group) : field_(std::move(field)), group_(std::move(group)) {
  const std::size_t bs = block_size();
  const std::size_t dim = dimension();
  left_translations_.reserve(n());
  for (std::size_t g = 0; g < n(); ++g) {
    FpMatrix m(p(), dim, dim);
    for (std::size_t j = 0; j < n(); ++j)
      for (std::size_t t = 0; t < bs; ++t) m(j * bs + t, group_->mul(g, j) * bs + t) = 1;
    left_translations_.push_back(std::move(m));
  }
  subfield_scalar_ = scalar_matrix(field_->subfield_generator());
  field_scalar_ = scalar_matrix(field_->primitive_element());
}

GroupAlgebra::GramSlot& GroupAlgebra::slot(FormKind kind) const {
  if (!is_trace_form(kind))
    throw Error(ErrorKind::kInvalidArgument, "Gram matrices exist only for the trace forms TE and TH");
  if (kind == FormKind::kTH && field_->m() % 2 != 0)
    throw Error(ErrorKind::kOddDegree, "trace-Hermitian form needs even m");
  GramSlot& s = grams_[kind == FormKind::kTE ? 0 : 1];
  std::call_once(s.once, [&] {
    const FieldTower& f = *field_;
    const std::size_t bs = block_size();
    std::vector<FieldElement> basis;
    for (std::size_t r = 0; r < bs; ++r) {
      FpVector unit(bs, 0);
      unit[r] = 1;
      basis.push_back(f.from_basis_coords(unit));
    }
    FpMatrix block(p(), bs, bs);
    for (std::size_t r = 0; r < bs; ++r) {
      for (std::size_t c = 0; c < bs; ++c) {
        const FieldElement rhs = kind == FormKind::kTH ? f.conjugate(basis[c]) : basis[c];
        block(r, c) = f.absolute_trace(f.mul(basis[r], rhs));
      }
    }
    auto block_inv = inverse(block);
    if (!block_inv) throw Error(ErrorKind::kCrossCheckFailed, "trace form is degenerate on K");
    s.gram = block_diagonal(block, n());
    s.inverse = block_diagonal(*block_inv, n());
  });
  return s;
}

const FpMatrix& GroupAlgebra::trace_gram(FormKind kind) const { return slot(kind).gram; }
const FpMatrix& GroupAlgebra::trace_gram_inverse(FormKind kind) const { return slot(kind).inverse; }

FpMatrix GroupAlgebra::scalar_matrix(FieldElement lambda) const {
  return block_diagonal(field_->multiplication_matrix(lambda), n());
}

AlgebraElement GroupAlgebra::zero() const {
  return {shared_from_this(), std::vector<FieldElement>(n(), field_->zero())};
}

AlgebraElement GroupAlgebra::one() const { return group_element(group_->identity()); }

AlgebraElement GroupAlgebra::group_element(std::size_t g) const {
  if (g >= n()) throw Error(ErrorKind::kInvalidArgument, "group element index out of range");
  std::vector<FieldElement> c(n(), field_->zero());
  c[g] = field_->one();
  return {shared_from_this(), std::move(c)};
}

AlgebraElement GroupAlgebra::scalar(FieldElement lambda) const {
  std::vector<FieldElement> c(n(), field_->zero());
  c[group_->identity()] = lambda;
  return {shared_from_this(), std::move(c)};
}

AlgebraElement GroupAlgebra::element(std::vector<FieldElement> coeffs) const {
  return {shared_from_this(), std::move(coeffs)};
}

AlgebraElement GroupAlgebra::from_coords(std::span<const Scalar> coords) const {
  if (coords.size() != dimension())
    throw Error(ErrorKind::kLengthMismatch, "expected " + std::to_string(dimension()) + " coordinates, got " +
                                                std::to_string(coords.size()));
  const std::size_t bs = block_size();
  std::vector<FieldElement> c(n());
  for (std::size_t j = 0; j < n(); ++j) c[j] = field_->from_basis_coords(coords.subspan(j * bs, bs));
  return {shared_from_this(), std::move(c)};
}

AlgebraElement GroupAlgebra::random(std::mt19937_64& rng) const {
  std::vector<FieldElement> c(n());
  for (auto& x : c) x = field_->random(rng);
  return {shared_from_this(), std::move(c)};
}

AlgebraElement GroupAlgebra::random_fg(std::mt19937_64& rng) const {
  const auto sub = field_->subfield_elements();
  std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
  std::vector<FieldElement> c(n());
  for (auto& x : c) x = sub[pick(rng)];
  return {shared_from_this(), std::move(c)};
}

std::optional<std::uint64_t> GroupAlgebra::element_count() const {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n(); ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / field_->order()) return std::nullopt;
    total *= field_->order();
  }
  return total;
}

AlgebraElement GroupAlgebra::element_at(std::uint64_t index) const {
  std::vector<FieldElement> c(n());
  for (std::size_t j = 0; j < n(); ++j) {
    c[j] = FieldElement{static_cast<std::uint32_t>(index % field_->order())};
    index /= field_->order();
  }
  return {shared_from_this(), std::move(c)};
}

std::string GroupAlgebra::describe() const {
  std::ostringstream out;
  out << "K = F_" << field_->order() << " over F = F_" << field_->q() << ", G = " << group_->name() << " (|G| = " << n()
      << ")";
  return out.str();
}

AlgebraElement::AlgebraElement(GroupAlgebraPtr algebra, std::vector<FieldElement> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->n())
    throw Error(ErrorKind::kLengthMismatch, "coefficient count differs from group order");
  for (auto c : coeffs_)
    if (c.code >= algebra_->field().order()) throw Error(ErrorKind::kInvalidArgument, "coefficient outside K");
}

FpVector AlgebraElement::to_coords() const {
  FpVector out;
  out.reserve(algebra_->dimension());
  for (auto c : coeffs_) {
    const auto bc = algebra_->field().basis_coords(c);
    out.insert(out.end(), bc.begin(), bc.end());
  }
  return out;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code == 0; });
}

std::size_t AlgebraElement::weight() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code != 0; }));
}

bool AlgebraElement::in_fg() const {
  const FieldTower& f = algebra_->field();
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](FieldElement c) { return f.in_subfield(c); });
}

bool AlgebraElement::is_idempotent() const { return *this * *this == *this; }

std::string AlgebraElement::format() const {
  const FieldTower& f = algebra_->field();
  const Group& g = algebra_->group();
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].code == 0) continue;
    if (!first) out << " + ";
    first = false;
    const std::string c = f.format(coeffs_[j]);
    const bool is_id = j == g.identity();
    if (is_id) {
      out << c;
    } else {
      if (c != "1") out << '(' << c << ")*";
      out << "g" << j;
    }
  }
  if (first) out << '0';
  return out.str();
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ambient(x.algebra(), y.algebra());
  const FieldTower& f = x.algebra().field();
  std::vector<FieldElement> c(x.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.add(x.coeff(j), y.coeff(j));
  return {x.algebra_ptr(), std::move(c)};
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ambient(x.algebra(), y.algebra());
  const FieldTower& f = x.algebra().field();
  std::vector<FieldElement> c(x.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.sub(x.coeff(j), y.coeff(j));
  return {x.algebra_ptr(), std::move(c)};
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_ambient(x.algebra(), y.algebra());
  const FieldTower& f = x.algebra().field();
  const Group& g = x.algebra().group();
  std::vector<FieldElement> c(g.order(), f.zero());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (x.coeff(i).code == 0) continue;
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (y.coeff(j).code == 0) continue;
      const std::size_t k = g.mul(i, j);
      c[k] = f.add(c[k], f.mul(x.coeff(i), y.coeff(j)));
    }
  }
  return {x.algebra_ptr(), std::move(c)};
}

AlgebraElement scale(FieldElement lambda, const AlgebraElement& x) {
  const FieldTower& f = x.algebra().field();
  std::vector<FieldElement> c(x.coeffs().begin(), x.coeffs().end());
  for (auto& v : c) v = f.mul(lambda, v);
  return {x.algebra_ptr(), std::move(c)};
}

AlgebraElement star(const AlgebraElement& x) {
  const Group& g = x.algebra().group();
  std::vector<FieldElement> c(g.order());
  for (std::size_t j = 0; j < g.order(); ++j) c[g.inverse(j)] = x.coeff(j);
  return {x.algebra_ptr(), std::move(c)};
}

AlgebraElement conj(const AlgebraElement& x) {
  const FieldTower& f = x.algebra().field();
  std::vector<FieldElement> c(x.coeffs().begin(), x.coeffs().end());
  for (auto& v : c) v = f.conjugate(v);
  return {x.algebra_ptr(), std::move(c)};
}

FieldElement coef_identity(const AlgebraElement& x) { return x.coeff(x.algebra().group().identity()); }

}  // namespace groupcodes
