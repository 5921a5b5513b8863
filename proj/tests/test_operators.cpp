#include <doctest.h>

#include <random>

#include "expect.hpp"
#include "groupcodes/codes.hpp"
#include "groupcodes/forms.hpp"
#include "groupcodes/operators.hpp"
#include "oracle.hpp"

using namespace groupcodes;

namespace {

// A random F-linear map: commutes with γ by construction as a sum of
// products of random left multiplications, right multiplications and γ-powers.
FLinearOperator random_f_linear(const GroupAlgebraPtr& kg, std::mt19937_64& rng) {
  FLinearOperator t = FLinearOperator::zero(kg);
  for (int i = 0; i < 3; ++i) t = t + compose(left_multiplication(kg->random(rng)), rho(kg->random(rng)));
  return t;
}

}  // namespace

TEST_CASE("composition follows the row convention") {
  std::mt19937_64 rng(41);
  const auto kg = oracle::ambient("q=3,m=2", "symmetric:3");
  for (int t = 0; t < 20; ++t) {
    const auto a = kg->random(rng);
    const auto b = kg->random(rng);
    const auto x = kg->random(rng);
    // (ρ_a ∘ ρ_b)(x) = x·b·a
    CHECK(compose(rho(a), rho(b)).apply(x) == x * b * a);
    CHECK(compose(left_multiplication(a), left_multiplication(b)).apply(x) == a * b * x);
    CHECK(rho(a).apply(x) == x * a);
    CHECK((rho(a) + rho(b)).apply(x) == x * (a + b));
    CHECK((rho(a) - rho(a)) == FLinearOperator::zero(kg));
  }
  CHECK(rho(kg->one()) == FLinearOperator::identity(kg));
}

TEST_CASE("linearity classes") {
  std::mt19937_64 rng(42);
  const auto kg = oracle::ambient("q=2,m=2", "symmetric:3");
  const auto a = kg->random(rng);
  CHECK(is_fg_linear(rho(a)));
  CHECK(is_kg_linear(rho(a)));
  CHECK(is_fg_linear(rho(a), LinearityCheck::kGenerators) == is_fg_linear(rho(a), LinearityCheck::kAllElements));
  // Left multiplication by a non-central group element is not G-linear.
  CHECK_FALSE(is_fg_linear(left_multiplication(kg->group_element(1))));
  // Coefficientwise conjugation is F-linear and FG-linear but not K-linear.
  FpMatrix m(kg->p(), 0, kg->dimension());
  for (std::size_t r = 0; r < kg->dimension(); ++r) {
    FpVector unit(kg->dimension(), 0);
    unit[r] = 1;
    m.append_row(conj(kg->from_coords(unit)).to_coords());
  }
  const FLinearOperator c(kg, m);
  CHECK(is_fg_linear(c));
  CHECK_FALSE(is_kg_linear(c));
  CHECK_THROWS_KIND(FLinearOperator(kg, FpMatrix(2, 3, 3)), ErrorKind::kLengthMismatch);
}

TEST_CASE("adjoints") {
  std::mt19937_64 rng(43);
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "cyclic:3"}, {"q=3,m=2", "symmetric:3"}, {"q=4,m=2", "cyclic:2"}, {"q=2,m=3", "cyclic:3"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    std::vector<FormKind> kinds{FormKind::kTE};
    if (kg->field().m() % 2 == 0) kinds.push_back(FormKind::kTH);
    for (FormKind k : kinds) {
      for (int t = 0; t < 8; ++t) {
        const auto s = random_f_linear(kg, rng);
        const auto u = random_f_linear(kg, rng);
        const auto x = kg->random(rng);
        const auto y = kg->random(rng);
        // ⟨T x, y⟩ = ⟨x, T* y⟩
        CHECK(pair(k, s.apply(x), y) == pair(k, x, adjoint(k, s).apply(y)));
        CHECK(adjoint(k, adjoint(k, s)) == s);
        CHECK(adjoint(k, compose(s, u)) == compose(adjoint(k, u), adjoint(k, s)));
        const auto e = kg->random(rng);
        CHECK(adjoint(k, rho(e)) == rho(form_adjoint_element(k, e)));
      }
    }
    CHECK_THROWS_KIND(adjoint(FormKind::kE, FLinearOperator::identity(kg)), ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("image and kernel of rho_e") {
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  for (const auto& e : oracle::idempotents(kg)) {
    const auto p = rho(e);
    CHECK(is_projector(p));
    CHECK(image(p) == idempotent_code(e));
    CHECK(kernel(p) == idempotent_code(kg->one() - e));
    CHECK(image(p).dim_fp() + kernel(p).dim_fp() == kg->dimension());
  }
}

TEST_CASE("coefficientwise projector") {
  // q = 3, m = 2: Tr(1) = 2, so K = F ⊕ F^⊥.
  const auto kg = oracle::ambient("q=3,m=2", "cyclic:2");
  const auto& f = kg->field();
  const SubfieldSubspace u{kg->field_ptr(), {f.one()}};
  for (FormKind k : {FormKind::kTE, FormKind::kTH}) {
    const auto p = coefficientwise_projector(kg, u, k);
    CHECK(is_projector(p));
    CHECK(is_fg_linear(p));
    CHECK(is_self_adjoint(k, p));
    CHECK(image(p) == group_ring_over_f(kg));
    for (auto x : f.elements()) {
      const auto y = p.apply(kg->scalar(x)).coeff(0);
      CHECK(f.in_subfield(y));
      CHECK(f.trace(f.mul(f.sub(x, y), f.one())) == f.zero());
    }
  }
  // q = 2, m = 2: Tr(1) = 0, so F ⊆ F^⊥.
  const auto kg2 = oracle::ambient("q=2,m=2", "cyclic:2");
  CHECK_THROWS_KIND(coefficientwise_projector(kg2, SubfieldSubspace{kg2->field_ptr(), {kg2->field().one()}},
                                              FormKind::kTE),
                    ErrorKind::kNotComplementary);
}

TEST_CASE("projector from a decomposition") {
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  const auto e = kg->one() + kg->group_element(1) + kg->group_element(2);
  const auto c = idempotent_code(e);
  const auto d = idempotent_code(kg->one() - e);
  const auto p = projector_from_summand(c, d);
  CHECK(p == rho(e));
  CHECK_THROWS_KIND(projector_from_summand(c, c), ErrorKind::kNotComplementary);
}
