#include <doctest.h>

#include <random>

#include "expect.hpp"
#include "groupcodes/codes.hpp"
#include "groupcodes/forms.hpp"
#include "groupcodes/parse.hpp"
#include "oracle.hpp"

using namespace groupcodes;

namespace {

std::vector<FpVector> sorted_coords(const std::vector<AlgebraElement>& xs) {
  std::vector<FpVector> out;
  for (const auto& x : xs) out.push_back(x.to_coords());
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_lcd(FormKind k, const AdditiveCode& c) {
  const auto w = oracle::words(c);
  const auto perp = oracle::words(orthogonal(k, c));
  std::size_t both = 0;
  for (const auto& v : w) both += perp.count(v);
  return both == 1;
}

}  // namespace

TEST_CASE("parameters agree with brute-force minimum distance") {
  std::mt19937_64 rng(51);
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=3", "cyclic:3"}, {"q=3,m=2", "cyclic:2"}, {"q=2,m=2", "cyclic:6"}, {"q=4,m=2", "cyclic:2"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    for (int t = 0; t < 8; ++t) {
      const auto c = oracle::random_submodule(kg, rng);
      if (c.dim_fp() > 12) continue;
      const auto params = parameters(c);
      CHECK(params == parameters_serial(c));
      CHECK(params.length == kg->n());
      CHECK(params.q == kg->field().q());
      CHECK(params.r == c.dim_f());
      if (c.is_zero()) {
        CHECK_FALSE(params.distance.has_value());
      } else {
        CHECK(params.distance == std::optional<std::size_t>(oracle::min_weight(c.basis(), kg->block_size())));
      }
    }
  }
}

TEST_CASE("parameter text and the enumeration cap") {
  const auto kg = oracle::ambient("q=2,m=3", "cyclic:3");
  const auto e = parse_element(kg, "1 + g + g^2");
  CHECK(parameters(restricted_idempotent_code(e)).to_string() == "(3, 2^1, 3)");
  CHECK(parameters(idempotent_code(e)).to_string() == "(3, 2^3, 3)");
  CHECK(parameters(AdditiveCode::zero(kg)).to_string() == "(3, 2^0, -)");
  bool thrown = false;
  try {
    parameters(AdditiveCode::full(kg), 100);
  } catch (const EnumerationTooLarge& err) {
    thrown = true;
    CHECK(err.kind() == ErrorKind::kTooLargeToEnumerate);
    CHECK(err.base() == 2);
    CHECK(err.exponent() == 9);
  }
  CHECK(thrown);
}

TEST_CASE("idempotent scans match a full scan") {
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "cyclic:3"}, {"q=3,m=2", "cyclic:2"}, {"q=2,m=2", "symmetric:3"}, {"q=2,m=1", "dihedral:4"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    const auto ref = sorted_coords(oracle::idempotents(kg));
    CHECK(sorted_coords(scan_idempotents(kg)) == ref);
    CHECK(sorted_coords(scan_idempotents_serial(kg)) == ref);
    CHECK(scan_size(*kg, {}) == *kg->element_count());
  }
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  // Restricting to FG and to a support.
  std::vector<AlgebraElement> in_fg;
  for (const auto& e : oracle::idempotents(kg))
    if (e.in_fg()) in_fg.push_back(e);
  CHECK(sorted_coords(scan_idempotents(kg, ScanSet{{}, true})) == sorted_coords(in_fg));
  const auto only_one = scan_idempotents(kg, ScanSet{{0}, false});
  CHECK(only_one.size() == 2);  // 0 and 1
  CHECK(scan_size(*kg, ScanSet{{1, 2}, false}) == 16);
  CHECK_THROWS_KIND(scan_idempotents(kg, {}, 10), ErrorKind::kTooLargeToEnumerate);
}

TEST_CASE("LCD and self-duality against enumeration") {
  std::mt19937_64 rng(52);
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "cyclic:2"}, {"q=3,m=2", "cyclic:2"}, {"q=2,m=2", "cyclic:3"}}) {
    const auto kg = oracle::ambient(field, group);
    for (int t = 0; t < 10; ++t) {
      const auto c = oracle::random_submodule(kg, rng);
      for (FormKind k : {FormKind::kTE, FormKind::kTH}) {
        CHECK(is_lcd(k, c) == brute_lcd(k, c));
        const auto perp = orthogonal(k, c);
        bool inside = true;
        for (const auto& v : oracle::words(c)) inside = inside && perp.contains(v);
        CHECK(is_self_orthogonal(k, c) == inside);
        CHECK(is_self_dual(k, c) == (perp == c));
      }
    }
  }
}

TEST_CASE("the idempotent criteria agree with the direct answers") {
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "cyclic:3"}, {"q=3,m=2", "cyclic:2"}, {"q=2,m=2", "cyclic:2"}, {"q=2,m=2", "symmetric:3"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    for (const auto& e : oracle::idempotents(kg)) {
      CAPTURE(e.format());
      for (FormKind k : {FormKind::kTE, FormKind::kTH}) {
        const auto gram = gram_on_fg(k, e);
        CHECK(gram.size() == kg->n());
        for (std::size_t i = 0; i < kg->n(); ++i)
          for (std::size_t j = 0; j < kg->n(); ++j)
            CHECK(gram.at(i, j) == pair(k, kg->group_element(i) * e, kg->group_element(j) * e));
        CHECK(lcd_criterion_check(k, e).agree());
        CHECK(selfdual_criterion_check(k, e).agree());
        const auto ideal = ideal_selfdual_check(k, e);
        CHECK(ideal.two_sided == kg->group().is_abelian());
        CHECK(ideal.consistent());
        if (ideal.two_sided) CHECK(ideal.agree());
      }
    }
  }
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  CHECK_THROWS_KIND(lcd_criterion_check(FormKind::kTE, kg->group_element(1)), ErrorKind::kNotIdempotent);
}

TEST_CASE("F_8 C_3: the all-ones idempotent") {
  const auto kg = oracle::ambient("q=2,m=3", "cyclic:3");
  const auto e = parse_element(kg, "1 + g + g^2");
  const auto gram = gram_on_fg(FormKind::kTE, e);
  CHECK(gram.rank() == 1);
  CHECK(gram.is_symmetric());
  CHECK(lcd_criterion_rhoe(FormKind::kTE, e));
  CHECK_FALSE(selfdual_criterion_rhoe(FormKind::kTE, e));
  CHECK(restricted_idempotent_code(e).dim_f() == 1);
}

TEST_CASE("LCD ideals come from self-adjoint idempotents") {
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "cyclic:3"}, {"q=3,m=2", "cyclic:2"}, {"q=2,m=2", "symmetric:3"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    for (const auto& f : oracle::idempotents(kg)) {
      const auto c = idempotent_code(f);
      for (FormKind k : {FormKind::kE, FormKind::kH}) {
        const auto e = lcd_ideal_idempotent(k, c);
        CHECK(e.has_value() == is_lcd(trace_form_of(k), c));
        if (!e) continue;
        CHECK(e->is_idempotent());
        CHECK(form_adjoint_element(k, *e) == *e);
        CHECK(idempotent_code(*e) == c);
      }
    }
    CHECK_THROWS_KIND(lcd_ideal_idempotent(FormKind::kE, group_ring_over_f(kg)), ErrorKind::kNotKLinear);
  }
}

TEST_CASE("restricted codes") {
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  const auto e = parse_element(kg, "1 + g + g^2");
  const auto fg = group_ring_over_f(kg);
  CHECK(fg.dim_f() == 3);
  CHECK(restricted_projector_code(rho(e), fg) == restricted_idempotent_code(e));
  CHECK(restricted_projector_code(rho(e), AdditiveCode::full(kg)) == idempotent_code(e));
  CHECK_THROWS_KIND(restricted_projector_code(rho(kg->group_element(1)), fg), ErrorKind::kNotProjector);
  const auto not_sub = AdditiveCode::from_elements(kg, std::vector{kg->one()});
  REQUIRE_FALSE(not_sub.is_submodule());
  CHECK_THROWS_KIND(restricted_projector_code(rho(e), not_sub), ErrorKind::kNotSubmodule);
  const auto a = parse_element(kg, "a");
  CHECK(span_kg(kg, std::vector{e}) == idempotent_code(e));
  CHECK(span_fg(kg, std::vector{scale(kg->field().generator(), e)}).dim_f() == 1);
  CHECK(span_fg(kg, std::vector{e, a * e}).dim_f() == 2);
}

TEST_CASE("the module dual check") {
  std::mt19937_64 rng(53);
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=2", "symmetric:3"}, {"q=3,m=2", "cyclic:2"}, {"q=4,m=2", "cyclic:2"}}) {
    const auto kg = oracle::ambient(field, group);
    for (int t = 0; t < 10; ++t) {
      const auto c = oracle::random_submodule(kg, rng);
      const auto report = module_dual_check(FormKind::kTE, c, rng);
      CHECK(report.passed());
      CHECK(report.dim_ambient == kg->f_dimension());
      CHECK(report.dim_code + report.dim_orthogonal == report.dim_ambient);
    }
  }
}

TEST_CASE("FG-complements by averaging") {
  std::mt19937_64 rng(54);
  // |G| = 2 is invertible in F_3.
  const auto kg = oracle::ambient("q=3,m=2", "cyclic:2");
  for (int t = 0; t < 10; ++t) {
    const auto c = oracle::random_submodule(kg, rng);
    const auto d = fg_complement(c);
    REQUIRE(d.has_value());
    CHECK(d->is_submodule());
    CHECK(intersection(c, *d).is_zero());
    CHECK(sum(c, *d).is_full());
  }
  // |G| = 2 vanishes in F_2.
  const auto kg2 = oracle::ambient("q=2,m=2", "cyclic:2");
  CHECK_FALSE(fg_complement(group_ring_over_f(kg2)).has_value());
}
