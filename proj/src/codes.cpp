#include "groupcodes/codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "groupcodes/forms.hpp"
#include "groupcodes/kernels.hpp"

namespace groupcodes {

namespace {

// base^exp if it does not exceed cap.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::vector<const FpMatrix*> fg_actions(const GroupAlgebra& kg) {
  std::vector<const FpMatrix*> actions;
  for (auto g : kg.group().generators()) actions.push_back(&kg.left_translation(g));
  if (kg.field().subfield_exponent() > 1) actions.push_back(&kg.subfield_scalar());
  return actions;
}

FpMatrix element_rows(const GroupAlgebra& kg, std::span<const AlgebraElement> elements) {
  FpMatrix rows(kg.p(), 0, kg.dimension());
  for (const auto& e : elements) {
    require_same_ambient(kg, e.algebra());
    rows.append_row(e.to_coords());
  }
  return rows;
}

void require_idempotent(const AlgebraElement& e) {
  if (!e.is_idempotent()) throw Error(ErrorKind::kNotIdempotent, "element " + e.format() + " is not idempotent");
}

void require_trace(FormKind kind) {
  if (!is_trace_form(kind)) throw Error(ErrorKind::kInvalidArgument, "this criterion needs TE or TH");
}

CodeParameters parameters_with(const AdditiveCode& code, std::uint64_t cap, bool parallel) {
  const GroupAlgebra& kg = code.algebra();
  CodeParameters out{kg.n(), kg.field().q(), code.dim_f(), std::nullopt};
  if (code.is_zero()) return out;
  if (!bounded_power(kg.p(), code.dim_fp(), cap)) throw EnumerationTooLarge(kg.field().q(), code.dim_f(), cap);
  out.distance = parallel ? kernels::min_block_weight_parallel(code.basis(), kg.block_size())
                          : kernels::min_block_weight_serial(code.basis(), kg.block_size());
  return out;
}

std::vector<FieldElement> scan_alphabet(const FieldTower& f, const ScanSet& set) {
  return set.subfield_coefficients ? f.subfield_elements() : f.elements();
}

std::vector<std::size_t> scan_support(const GroupAlgebra& kg, const ScanSet& set) {
  if (set.support.empty()) {
    std::vector<std::size_t> all(kg.n());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  for (auto g : set.support)
    if (g >= kg.n()) throw Error(ErrorKind::kInvalidArgument, "support index out of range");
  std::vector<std::size_t> s = set.support;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<AlgebraElement> scan_with(const GroupAlgebraPtr& algebra, const ScanSet& set, std::uint64_t cap,
                                      bool parallel) {
  const GroupAlgebra& kg = *algebra;
  const FieldTower& f = kg.field();
  const Group& g = kg.group();
  const auto alphabet = scan_alphabet(f, set);
  const auto support = scan_support(kg, set);
  const auto count = bounded_power(alphabet.size(), support.size(), cap);
  if (!count) throw EnumerationTooLarge(alphabet.size(), support.size(), cap);

  auto decode = [&](std::uint64_t index) {
    std::vector<FieldElement> c(kg.n(), f.zero());
    for (auto j : support) {
      c[j] = alphabet[index % alphabet.size()];
      index /= alphabet.size();
    }
    return c;
  };
  auto accept = [&](std::uint64_t index) {
    const auto c = decode(index);
    std::vector<FieldElement> sq(kg.n(), f.zero());
    for (std::size_t i = 0; i < kg.n(); ++i) {
      if (c[i].code == 0) continue;
      for (std::size_t j = 0; j < kg.n(); ++j) {
        if (c[j].code == 0) continue;
        const std::size_t k = g.mul(i, j);
        sq[k] = f.add(sq[k], f.mul(c[i], c[j]));
      }
    }
    return sq == c;
  };
  const auto hits = parallel ? kernels::filter_indices_parallel(*count, accept)
                             : kernels::filter_indices_serial(*count, accept);

  std::vector<std::pair<FpVector, AlgebraElement>> keyed;
  keyed.reserve(hits.size());
  for (auto index : hits) {
    AlgebraElement e = kg.element(decode(index));
    keyed.emplace_back(e.to_coords(), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AlgebraElement> out;
  out.reserve(keyed.size());
  for (auto& [key, e] : keyed) out.push_back(std::move(e));
  return out;
}

std::string size_message(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::ostringstream out;
  out << "enumeration of " << base << "^" << exponent << " elements exceeds the cap of " << cap;
  return out.str();
}

}  // namespace

EnumerationTooLarge::EnumerationTooLarge(std::uint64_t base, std::size_t exponent, std::uint64_t cap)
    : Error(ErrorKind::kTooLargeToEnumerate, size_message(base, exponent, cap)), base_(base), exponent_(exponent) {}

AdditiveCode span_fg(const GroupAlgebraPtr& algebra, std::span<const AlgebraElement> generators) {
  const auto actions = fg_actions(*algebra);
  return AdditiveCode::from_rows(algebra, closure(element_rows(*algebra, generators), actions));
}

AdditiveCode span_kg(const GroupAlgebraPtr& algebra, std::span<const AlgebraElement> generators) {
  auto actions = fg_actions(*algebra);
  actions.push_back(&algebra->field_scalar());
  return AdditiveCode::from_rows(algebra, closure(element_rows(*algebra, generators), actions));
}

AdditiveCode group_ring_over_f(const GroupAlgebraPtr& algebra) {
  const AlgebraElement one = algebra->one();
  return span_fg(algebra, std::span<const AlgebraElement>(&one, 1));
}

AdditiveCode restricted_projector_code(const FLinearOperator& p, const AdditiveCode& n) {
  require_same_ambient(p.algebra(), n.algebra());
  if (!is_fg_linear(p) || !is_projector(p))
    throw Error(ErrorKind::kNotProjector, "operator is not an FG-linear projector");
  if (!n.is_submodule()) throw Error(ErrorKind::kNotSubmodule, "N is not an FG-submodule");
  if (n.is_zero()) return AdditiveCode::zero(n.algebra_ptr());
  return AdditiveCode::from_rows(n.algebra_ptr(), n.basis() * p.matrix());
}

AdditiveCode restricted_idempotent_code(const AlgebraElement& e) {
  const GroupAlgebra& kg = e.algebra();
  std::vector<AlgebraElement> rows;
  for (std::size_t g = 0; g < kg.n(); ++g) rows.push_back(kg.group_element(g) * e);
  return AdditiveCode::from_elements(e.algebra_ptr(), rows);
}

AdditiveCode idempotent_code(const AlgebraElement& e) { return image(rho(e)); }

std::string CodeParameters::to_string() const {
  std::ostringstream out;
  out << '(' << length << ", " << q << '^' << r << ", ";
  if (distance) {
    out << *distance;
  } else {
    out << '-';
  }
  out << ')';
  return out.str();
}

CodeParameters parameters(const AdditiveCode& code, std::uint64_t cap) { return parameters_with(code, cap, true); }

CodeParameters parameters_serial(const AdditiveCode& code, std::uint64_t cap) {
  return parameters_with(code, cap, false);
}

bool is_lcd(FormKind kind, const AdditiveCode& code) {
  require_trace(kind);
  const AdditiveCode dual = orthogonal(kind, code);
  const bool trivial_meet = intersect_row_spaces(code.basis(), dual.basis()).rows() == 0;
  const std::size_t dim = code.algebra().dimension();
  const bool direct_sum = code.dim_fp() + dual.dim_fp() == dim && rank(vstack(code.basis(), dual.basis())) == dim;
  if (trivial_meet != direct_sum)
    throw Error(ErrorKind::kCrossCheckFailed, "C ∩ C^⊥ = 0 disagrees with C ⊕ C^⊥ = KG");
  return trivial_meet;
}

bool is_self_orthogonal(FormKind kind, const AdditiveCode& code) {
  require_trace(kind);
  const FpMatrix& g = code.algebra().trace_gram(kind);
  return (code.basis() * g * code.basis().transpose()).is_zero();
}

bool is_self_dual(FormKind kind, const AdditiveCode& code) {
  require_trace(kind);
  if (2 * code.dim_fp() != code.algebra().dimension()) return false;
  return orthogonal(kind, code) == code;
}

GramOnFG::GramOnFG(FieldTowerPtr field, std::size_t n, std::vector<FieldElement> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw Error(ErrorKind::kLengthMismatch, "Gram entries do not form a square");
}

bool GramOnFG::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](FieldElement x) { return x.code == 0; });
}

bool GramOnFG::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::size_t GramOnFG::rank() const {
  const FieldTower& f = *field_;
  std::vector<FieldElement> m = entries_;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < n_ && lead < n_; ++c) {
    std::size_t pr = lead;
    while (pr < n_ && m[pr * n_ + c].code == 0) ++pr;
    if (pr == n_) continue;
    for (std::size_t k = 0; k < n_; ++k) std::swap(m[pr * n_ + k], m[lead * n_ + k]);
    const FieldElement inv = f.inv(m[lead * n_ + c]);
    for (std::size_t r = lead + 1; r < n_; ++r) {
      const FieldElement factor = f.mul(m[r * n_ + c], inv);
      if (factor.code == 0) continue;
      for (std::size_t k = c; k < n_; ++k) m[r * n_ + k] = f.sub(m[r * n_ + k], f.mul(factor, m[lead * n_ + k]));
    }
    ++lead;
  }
  return lead;
}

GramOnFG gram_on_fg(FormKind kind, const AlgebraElement& e) {
  require_trace(kind);
  const GroupAlgebra& kg = e.algebra();
  std::vector<AlgebraElement> images;
  for (std::size_t g = 0; g < kg.n(); ++g) images.push_back(kg.group_element(g) * e);
  std::vector<FieldElement> entries;
  entries.reserve(kg.n() * kg.n());
  for (std::size_t i = 0; i < kg.n(); ++i)
    for (std::size_t j = 0; j < kg.n(); ++j) entries.push_back(pair(kind, images[i], images[j]));
  return {kg.field_ptr(), kg.n(), std::move(entries)};
}

CriterionCheck lcd_criterion_check(FormKind kind, const AlgebraElement& e) {
  require_trace(kind);
  require_idempotent(e);
  const AdditiveCode fge = restricted_idempotent_code(e);
  return {gram_on_fg(kind, e).rank() == fge.dim_f(), is_lcd(kind, fge)};
}

CriterionCheck selfdual_criterion_check(FormKind kind, const AlgebraElement& e) {
  require_trace(kind);
  require_idempotent(e);
  const AdditiveCode fge = restricted_idempotent_code(e);
  const bool half = 2 * fge.dim_f() == e.algebra().f_dimension();
  return {half && gram_on_fg(kind, e).is_zero(), is_self_dual(kind, fge)};
}

CriterionCheck ideal_selfdual_check(FormKind kind, const AlgebraElement& e) {
  const FormKind trace = trace_form_of(kind);
  require_idempotent(e);
  const AlgebraElement complement = e.algebra().one() - e;
  return {form_adjoint_element(trace, e) == complement, is_self_dual(trace, idempotent_code(e)),
          e.algebra().group().is_abelian()};
}

namespace {

bool checked(const CriterionCheck& c, const char* what) {
  if (!c.consistent())
    throw Error(ErrorKind::kCrossCheckFailed, std::string(what) + ": criterion and direct computation disagree");
  return c.criterion;
}

}  // namespace

bool lcd_criterion_rhoe(FormKind kind, const AlgebraElement& e) {
  return checked(lcd_criterion_check(kind, e), "LCD Gram-rank criterion");
}

bool selfdual_criterion_rhoe(FormKind kind, const AlgebraElement& e) {
  return checked(selfdual_criterion_check(kind, e), "self-dual Gram criterion");
}

bool ideal_selfdual_idempotent(FormKind kind, const AlgebraElement& e) {
  return checked(ideal_selfdual_check(kind, e), "self-dual idempotent criterion");
}

std::optional<AlgebraElement> lcd_ideal_idempotent(FormKind kind, const AdditiveCode& code) {
  if (!code.is_k_linear()) throw Error(ErrorKind::kNotKLinear, "code is not closed under multiplication by K");
  const FormKind trace = trace_form_of(kind);
  const AdditiveCode dual = orthogonal(trace, code);
  if (!is_lcd(trace, code)) return std::nullopt;
  const FLinearOperator p = projector_from_summand(code, dual);
  const AlgebraElement e = p.apply(code.algebra().one());
  if (!e.is_idempotent() || form_adjoint_element(trace, e) != e || idempotent_code(e) != code)
    throw Error(ErrorKind::kCrossCheckFailed, "projector idempotent fails its defining properties");
  return e;
}

ModuleDualReport module_dual_check(FormKind kind, const AdditiveCode& code, std::mt19937_64& rng,
                                   std::size_t samples) {
  require_trace(kind);
  if (!code.is_submodule()) throw Error(ErrorKind::kNotSubmodule, "module dual check needs an FG-submodule");
  const GroupAlgebra& kg = code.algebra();
  const FieldTower& f = kg.field();
  const unsigned a = f.subfield_exponent();
  const AdditiveCode dual = orthogonal(kind, code);

  ModuleDualReport report;
  report.dim_ambient = kg.f_dimension();
  report.dim_code = code.dim_f();
  report.dim_orthogonal = dual.dim_f();
  report.dimension_ok = report.dim_ambient - report.dim_orthogonal == report.dim_code;

  // Φ as a matrix: one row per coordinate basis vector x of KG, one column
  // per (basis vector c of C, F_p-digit of ⟨x, c⟩ ∈ F).
  const auto code_basis = code.basis_elements();
  FpMatrix phi(kg.p(), kg.dimension(), code_basis.size() * a);
  FpVector unit(kg.dimension(), 0);
  for (std::size_t r = 0; r < kg.dimension(); ++r) {
    unit[r] = 1;
    const AlgebraElement x = kg.from_coords(unit);
    unit[r] = 0;
    for (std::size_t k = 0; k < code_basis.size(); ++k) {
      const FpVector digits = f.basis_coords(pair(kind, x, code_basis[k]));
      for (unsigned t = 0; t < a; ++t) phi(r, k * a + t) = digits[t];
    }
  }
  const FpMatrix ker = code_basis.empty() ? FpMatrix::identity(kg.p(), kg.dimension()) : left_null_space(phi);
  report.kernel_ok = AdditiveCode::from_rows(code.algebra_ptr(), ker) == dual;

  report.equivariance_ok = true;
  std::uniform_int_distribution<std::size_t> pick_g(0, kg.n() - 1);
  std::uniform_int_distribution<Scalar> pick_c(0, kg.p() - 1);
  for (std::size_t s = 0; s < samples && report.equivariance_ok; ++s) {
    const std::size_t g = pick_g(rng);
    const AlgebraElement x = kg.random(rng);
    AlgebraElement c = kg.zero();
    for (const auto& b : code_basis) c = c + scale(f.from_int(pick_c(rng)), b);
    const AlgebraElement lhs = kg.group_element(g) * x;
    const AlgebraElement rhs = kg.group_element(kg.group().inverse(g)) * c;
    report.equivariance_ok = pair(kind, lhs, c) == pair(kind, x, rhs);
  }
  return report;
}

std::optional<AdditiveCode> fg_complement(const AdditiveCode& code) {
  if (!code.is_submodule()) throw Error(ErrorKind::kNotSubmodule, "complement needs an FG-submodule");
  const GroupAlgebra& kg = code.algebra();
  if (std::gcd(static_cast<std::uint64_t>(kg.n()), static_cast<std::uint64_t>(kg.p())) != 1) return std::nullopt;

  // Any F-complement D0, then average the projection onto C along D0.
  EchelonBasis span(kg.p(), kg.dimension());
  for (std::size_t r = 0; r < code.basis().rows(); ++r) span.insert(code.basis().row(r));
  FpMatrix d0(kg.p(), 0, kg.dimension());
  for (std::size_t r = 0; r < kg.dimension() && span.rank() < kg.dimension(); ++r) {
    FpVector v(kg.dimension(), 0);
    v[r] = 1;
    if (span.contains(v)) continue;
    for (unsigned k = 0; k < kg.field().subfield_exponent(); ++k) {
      if (span.insert(v)) d0.append_row(v);
      v = vec_mat(v, kg.subfield_scalar());
    }
  }
  const FpMatrix p0 = projection_matrix(code.basis(), d0);
  FpMatrix avg(kg.p(), kg.dimension(), kg.dimension());
  for (std::size_t g = 0; g < kg.n(); ++g) {
    // x ↦ g^{-1}·π0(g·x)
    avg = avg + kg.left_translation(g) * p0 * kg.left_translation(kg.group().inverse(g));
  }
  const FLinearOperator p(code.algebra_ptr(), scaled(avg, kg.field().prime_field().inv(kg.n() % kg.p())));
  AdditiveCode complement = kernel(p);
  if (!complement.is_submodule() || image(p) != code)
    throw Error(ErrorKind::kCrossCheckFailed, "averaged projector does not split off the code");
  return complement;
}

std::uint64_t scan_size(const GroupAlgebra& algebra, const ScanSet& set) {
  const auto alphabet = scan_alphabet(algebra.field(), set).size();
  const auto support = scan_support(algebra, set).size();
  const auto count = bounded_power(alphabet, support, std::numeric_limits<std::uint64_t>::max());
  if (!count) throw EnumerationTooLarge(alphabet, support, std::numeric_limits<std::uint64_t>::max());
  return *count;
}

std::vector<AlgebraElement> scan_idempotents(const GroupAlgebraPtr& algebra, const ScanSet& set, std::uint64_t cap) {
  return scan_with(algebra, set, cap, true);
}

std::vector<AlgebraElement> scan_idempotents_serial(const GroupAlgebraPtr& algebra, const ScanSet& set,
                                                    std::uint64_t cap) {
  return scan_with(algebra, set, cap, false);
}

}  // namespace groupcodes
