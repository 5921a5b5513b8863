#include <doctest.h>

#include <random>

#include "expect.hpp"
#include "groupcodes/codes.hpp"
#include "groupcodes/equivalence.hpp"
#include "groupcodes/parse.hpp"
#include "oracle.hpp"

using namespace groupcodes;

namespace {

// Does some u ∈ eKGf, v ∈ fKGe satisfy uv = e, vu = f? Scans all of KG twice.
bool brute_mvn(const AlgebraElement& e, const AlgebraElement& f) {
  const auto& kg = e.algebra_ptr();
  const std::uint64_t total = *kg->element_count();
  std::vector<AlgebraElement> us, vs;
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto x = kg->element_at(i);
    if (e * x * f == x) us.push_back(x);
    if (f * x * e == x) vs.push_back(x);
  }
  for (const auto& u : us)
    for (const auto& v : vs)
      if (u * v == e && v * u == f) return true;
  return false;
}

// Number of F_p-matrices X with L_g·X = X·L_g for all g, i.e. |End_{F_p G}(KG)|
// for q = p, m = 1, counted directly.
std::size_t brute_endomorphism_count(const GroupAlgebraPtr& kg) {
  const std::size_t d = kg->dimension();
  const std::uint64_t total = std::uint64_t{1} << (d * d);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    FpMatrix x(2, d, d);
    for (std::size_t i = 0; i < d * d; ++i) x(i / d, i % d) = (bits >> i) & 1;
    bool ok = true;
    for (std::size_t g = 0; g < kg->n() && ok; ++g) ok = kg->left_translation(g) * x == x * kg->left_translation(g);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("Hom space dimensions") {
  // Trivial group: End_F(K) for K = F, dimension 1.
  const auto trivial = oracle::ambient("q=2,m=1", "cyclic:1");
  CHECK(hom_space(AdditiveCode::full(trivial), AdditiveCode::full(trivial)).dim_f() == 1);
  CHECK(hom_space(AdditiveCode::zero(trivial), AdditiveCode::full(trivial)).dim_f() == 0);

  const auto f2c3 = oracle::ambient("q=2,m=1", "cyclic:3");
  const auto full = AdditiveCode::full(f2c3);
  CHECK(hom_space(full, full).size() == std::optional<std::uint64_t>(brute_endomorphism_count(f2c3)));
  CHECK(brute_endomorphism_count(f2c3) == 8);

  const auto kg = oracle::ambient("q=2,m=3", "cyclic:3");
  const auto fge = restricted_idempotent_code(parse_element(kg, "1 + g + g^2"));
  CHECK(hom_space(fge, fge).dim_f() == 1);
  // End_KG(KG) ≅ KG^op has dimension mn over F.
  CHECK(hom_space(AdditiveCode::full(kg), AdditiveCode::full(kg), Linearity::kKG).dim_f() == 9);
  CHECK(hom_space(AdditiveCode::full(kg), AdditiveCode::full(kg)).dim_f() == 27);
  CHECK_THROWS_KIND(hom_space(AdditiveCode::from_elements(kg, std::vector{kg->one()}), fge),
                    ErrorKind::kNotSubmodule);
}

TEST_CASE("Hom elements are equivariant") {
  std::mt19937_64 rng(61);
  const auto kg = oracle::ambient("q=3,m=2", "symmetric:3");
  const auto m = oracle::random_submodule(kg, rng);
  const auto n = oracle::random_submodule(kg, rng);
  const auto hom = hom_space(m, n);
  for (const auto& x : hom.basis) {
    for (const auto& v : m.basis_elements()) {
      const auto image = kg->from_coords(hom.apply(x, v.to_coords()));
      CHECK(n.contains(image));
      for (std::size_t g = 0; g < kg->n(); ++g)
        CHECK(kg->from_coords(hom.apply(x, (kg->group_element(g) * v).to_coords())) ==
              kg->group_element(g) * image);
    }
  }
}

TEST_CASE("module isomorphism") {
  std::mt19937_64 rng(62);
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  const auto e = parse_element(kg, "1 + g + g^2");
  const auto c = idempotent_code(e);
  auto same = modules_isomorphic(c, c, Linearity::kKG, rng);
  CHECK(same.decision == Decision::kYes);
  CHECK(same.exhaustive);
  REQUIRE(same.map.has_value());
  auto different = modules_isomorphic(c, idempotent_code(kg->one() - e), Linearity::kKG, rng);
  CHECK(different.decision == Decision::kNo);
  CHECK(to_string(Decision::kIndeterminate) == "indeterminate");

  // KGe and KGe* for every idempotent of an abelian ambient.
  for (const auto& f : oracle::idempotents(kg)) {
    const auto r = modules_isomorphic(idempotent_code(f), idempotent_code(star(f)), Linearity::kKG, rng);
    CHECK(r.decision != Decision::kIndeterminate);
  }
}

TEST_CASE("equivalence of idempotents matches brute force") {
  std::mt19937_64 rng(63);
  for (const auto& [field, group] : std::vector<std::pair<const char*, const char*>>{
           {"q=2,m=1", "cyclic:3"}, {"q=2,m=2", "cyclic:2"}, {"q=2,m=1", "symmetric:3"}}) {
    const auto kg = oracle::ambient(field, group);
    CAPTURE(kg->describe());
    const auto ids = oracle::idempotents(kg);
    for (const auto& e : ids) {
      for (const auto& f : ids) {
        const auto r = mvn_idempotents(e, f, rng);
        REQUIRE(r.decision != Decision::kIndeterminate);
        CHECK((r.decision == Decision::kYes) == brute_mvn(e, f));
        if (r.witness) CHECK(verify_witness(*r.witness, e, f));
      }
    }
  }
  const auto kg = oracle::ambient("q=2,m=1", "cyclic:3");
  CHECK_THROWS_KIND(mvn_idempotents(kg->group_element(1), kg->one(), rng), ErrorKind::kNotIdempotent);
  CHECK(mvn_idempotents(kg->one(), kg->zero(), rng).decision == Decision::kNo);
}

TEST_CASE("equivalence is reflexive, symmetric and transitive") {
  std::mt19937_64 rng(64);
  const auto kg = oracle::ambient("q=2,m=1", "symmetric:3");
  const auto ids = oracle::idempotents(kg);
  for (const auto& e : ids) {
    const auto self = mvn_idempotents(e, e, rng);
    REQUIRE(self.decision == Decision::kYes);
    CHECK(verify_witness(MvnWitness<AlgebraElement>{e, e}, e, e));
    for (const auto& f : ids) {
      const auto ef = mvn_idempotents(e, f, rng);
      if (ef.decision != Decision::kYes) continue;
      CHECK(verify_witness(swap_witness(*ef.witness), f, e));
      const auto n_ef = normalize_witness(*ef.witness, e, f);
      CHECK(verify_witness(n_ef, e, f));
      CHECK(f * n_ef.a * e == n_ef.a);
      CHECK(e * n_ef.b * f == n_ef.b);
      for (const auto& h : ids) {
        const auto fh = mvn_idempotents(f, h, rng);
        if (fh.decision != Decision::kYes) continue;
        const auto chained = chain_witnesses(n_ef, normalize_witness(*fh.witness, f, h));
        CHECK(verify_witness(chained, e, h));
      }
    }
  }
}

TEST_CASE("equivalence of projectors") {
  std::mt19937_64 rng(65);
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:3");
  const auto ids = oracle::idempotents(kg);
  for (const auto& e : ids) {
    for (const auto& f : ids) {
      const auto r = mvn_projectors(rho(e), rho(f), rng, Linearity::kKG);
      CHECK(r.decision == mvn_idempotents(e, f, rng).decision);
      if (r.witness) {
        CHECK(verify_witness(*r.witness, rho(e), rho(f)));
        const auto n = normalize_witness(*r.witness, rho(e), rho(f));
        CHECK(verify_witness(n, rho(e), rho(f)));
      }
    }
  }
  CHECK_THROWS_KIND(mvn_projectors(rho(kg->group_element(1)), rho(kg->one()), rng), ErrorKind::kNotProjector);
}
