#include "groupcodes/equivalence.hpp"

#include <algorithm>
#include <limits>

#include "groupcodes/codes.hpp"
#include "groupcodes/error.hpp"
#include "groupcodes/kernels.hpp"

namespace groupcodes {

namespace {

constexpr std::uint64_t kSearchChunk = 4096;

// Matrix of `action` restricted to the code, in its echelon basis.
FpMatrix restrict_action(const AdditiveCode& code, const FpMatrix& action) {
  const FpMatrix moved = code.basis() * action;
  FpMatrix out(code.algebra().p(), 0, code.dim_fp());
  for (std::size_t r = 0; r < moved.rows(); ++r) {
    auto c = code.coordinates(moved.row(r));
    if (!c) throw Error(ErrorKind::kNotSubmodule, "code is not stable under the action");
    out.append_row(*c);
  }
  return out;
}

std::vector<const FpMatrix*> solving_actions(const GroupAlgebra& kg, Linearity linearity) {
  std::vector<const FpMatrix*> actions;
  for (auto g : kg.group().generators()) actions.push_back(&kg.left_translation(g));
  if (kg.field().subfield_exponent() > 1) actions.push_back(&kg.subfield_scalar());
  if (linearity == Linearity::kKG) actions.push_back(&kg.field_scalar());
  return actions;
}

void require_module(const AdditiveCode& c, Linearity linearity) {
  if (!c.is_submodule()) throw Error(ErrorKind::kNotSubmodule, "code is not an FG-submodule");
  if (linearity == Linearity::kKG && !c.is_k_linear())
    throw Error(ErrorKind::kNotSubmodule, "code is not a left ideal of KG");
}

bool invertible(const FpMatrix& x) { return x.rows() == x.cols() && rank(x) == x.rows(); }

FpVector digits(std::uint64_t index, Scalar p, std::size_t count) {
  FpVector d(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    d[i] = static_cast<Scalar>(index % p);
    index /= p;
  }
  return d;
}

// Rows of `m` written in the echelon basis of `code`.
FpMatrix coordinates_in(const AdditiveCode& code, const FpMatrix& m) {
  FpMatrix out(m.p(), 0, code.dim_fp());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto c = code.coordinates(m.row(r));
    if (!c) throw Error(ErrorKind::kCrossCheckFailed, "row does not lie in the code");
    out.append_row(*c);
  }
  return out;
}

AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }
FLinearOperator product(const FLinearOperator& x, const FLinearOperator& y) { return compose(x, y); }

template <class T>
bool verify_generic(const MvnWitness<T>& w, const T& e, const T& f) {
  return product(w.b, w.a) == e && product(w.a, w.b) == f;
}

template <class T>
MvnWitness<T> normalize_generic(const MvnWitness<T>& w, const T& e, const T& f) {
  return {product(product(f, w.a), e), product(product(e, w.b), f)};
}

template <class T>
MvnWitness<T> chain_generic(const MvnWitness<T>& ef, const MvnWitness<T>& fh) {
  return {product(fh.a, ef.a), product(ef.b, fh.b)};
}

}  // namespace

std::size_t HomSpace::dim_f() const { return basis.size() / source.algebra().field().subfield_exponent(); }

std::optional<std::uint64_t> HomSpace::size() const {
  const std::uint64_t p = source.algebra().p();
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    r *= p;
  }
  return r;
}

FpMatrix HomSpace::combine(std::span<const Scalar> coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(ErrorKind::kLengthMismatch, "one coefficient per basis map");
  FpMatrix out(source.algebra().p(), source.dim_fp(), target.dim_fp());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) out = out + scaled(basis[i], coeffs[i]);
  return out;
}

FpVector HomSpace::apply(const FpMatrix& map, std::span<const Scalar> coords) const {
  auto c = source.coordinates(coords);
  if (!c) throw Error(ErrorKind::kInvalidArgument, "vector is not in the source module");
  return vec_mat(vec_mat(*c, map), target.basis());
}

HomSpace hom_space(const AdditiveCode& m, const AdditiveCode& n, Linearity linearity) {
  require_same_ambient(m.algebra(), n.algebra());
  require_module(m, linearity);
  require_module(n, linearity);
  HomSpace hom{m, n, linearity, {}};
  const std::size_t rm = m.dim_fp();
  const std::size_t rn = n.dim_fp();
  if (rm == 0 || rn == 0) return hom;

  const GroupAlgebra& kg = m.algebra();
  const PrimeField& fp = kg.field().prime_field();
  // Unknown X[k][l] sits at column k·rn + l; one equation per entry of A·X − X·D.
  FpMatrix system(kg.p(), 0, rm * rn);
  for (const FpMatrix* action : solving_actions(kg, linearity)) {
    const FpMatrix a = restrict_action(m, *action);
    const FpMatrix d = restrict_action(n, *action);
    for (std::size_t i = 0; i < rm; ++i) {
      for (std::size_t l = 0; l < rn; ++l) {
        FpVector eq(rm * rn, 0);
        for (std::size_t k = 0; k < rm; ++k) eq[k * rn + l] = fp.add(eq[k * rn + l], a(i, k));
        for (std::size_t k = 0; k < rn; ++k) eq[i * rn + k] = fp.sub(eq[i * rn + k], d(k, l));
        system.append_row(eq);
      }
    }
  }
  const FpMatrix solutions = right_null_space(system);
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    FpMatrix x(kg.p(), rm, rn);
    for (std::size_t k = 0; k < rm; ++k)
      for (std::size_t l = 0; l < rn; ++l) x(k, l) = solutions(s, k * rn + l);
    hom.basis.push_back(std::move(x));
  }

  for (std::size_t g = 0; g < kg.n(); ++g) {
    const FpMatrix a = restrict_action(m, kg.left_translation(g));
    const FpMatrix d = restrict_action(n, kg.left_translation(g));
    for (const auto& x : hom.basis)
      if (!(a * x == x * d)) throw Error(ErrorKind::kCrossCheckFailed, "hom basis map is not G-equivariant");
  }
  return hom;
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::kYes: return "yes";
    case Decision::kNo: return "no";
    case Decision::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

IsomorphismResult modules_isomorphic(const AdditiveCode& m, const AdditiveCode& n, Linearity linearity,
                                     std::mt19937_64& rng) {
  require_same_ambient(m.algebra(), n.algebra());
  require_module(m, linearity);
  require_module(n, linearity);
  if (m.dim_fp() != n.dim_fp()) return {Decision::kNo, std::nullopt, true};
  if (m.dim_fp() == 0) return {Decision::kYes, FpMatrix(m.algebra().p(), 0, 0), true};

  const HomSpace hom = hom_space(m, n, linearity);
  // M ≅ N forces Hom(M, N) ≅ End(M) ≅ End(N) as vector spaces.
  if (hom.dim_fp() != hom_space(m, m, linearity).dim_fp() || hom.dim_fp() != hom_space(n, n, linearity).dim_fp())
    return {Decision::kNo, std::nullopt, true};

  const Scalar p = m.algebra().p();
  const auto size = hom.size();
  if (size && *size <= kExhaustiveHomLimit) {
    for (std::uint64_t start = 0; start < *size; start += kSearchChunk) {
      const std::uint64_t count = std::min(kSearchChunk, *size - start);
      const auto hits = kernels::filter_indices_parallel(count, [&](std::uint64_t i) {
        return invertible(hom.combine(digits(start + i, p, hom.dim_fp())));
      });
      if (!hits.empty()) return {Decision::kYes, hom.combine(digits(start + hits.front(), p, hom.dim_fp())), true};
    }
    return {Decision::kNo, std::nullopt, true};
  }

  // Draw every trial up front so the result does not depend on scheduling.
  std::uniform_int_distribution<Scalar> digit(0, p - 1);
  std::vector<FpVector> trials(kRandomIsoTrials, FpVector(hom.dim_fp()));
  for (auto& t : trials)
    for (auto& c : t) c = digit(rng);
  const auto hits = kernels::filter_indices_parallel(trials.size(), [&](std::uint64_t i) {
    return invertible(hom.combine(trials[i]));
  });
  if (hits.empty()) return {Decision::kIndeterminate, std::nullopt, false};
  return {Decision::kYes, hom.combine(trials[hits.front()]), false};
}

MvnResult<AlgebraElement> mvn_idempotents(const AlgebraElement& e, const AlgebraElement& f, std::mt19937_64& rng) {
  require_same_ambient(e.algebra(), f.algebra());
  for (const auto* x : {&e, &f})
    if (!x->is_idempotent()) throw Error(ErrorKind::kNotIdempotent, x->format() + " is not idempotent");
  const AdditiveCode me = idempotent_code(e);
  const AdditiveCode nf = idempotent_code(f);
  const auto iso = modules_isomorphic(me, nf, Linearity::kKG, rng);
  if (iso.decision != Decision::kYes) return {iso.decision, std::nullopt};

  const GroupAlgebra& kg = e.algebra();
  const FpMatrix& x = *iso.map;
  const auto x_inv = inverse(x);
  const auto ce = me.coordinates(e.to_coords());
  const auto cf = nf.coordinates(f.to_coords());
  if (!x_inv || !ce || !cf) throw Error(ErrorKind::kCrossCheckFailed, "isomorphism witness is malformed");
  const AlgebraElement u = kg.from_coords(vec_mat(vec_mat(*ce, x), nf.basis()));
  const AlgebraElement v = kg.from_coords(vec_mat(vec_mat(*cf, *x_inv), me.basis()));
  MvnWitness<AlgebraElement> w{v, u};
  if (!verify_witness(w, e, f)) throw Error(ErrorKind::kCrossCheckFailed, "uv = e or vu = f fails");
  return {Decision::kYes, std::move(w)};
}

MvnResult<FLinearOperator> mvn_projectors(const FLinearOperator& p, const FLinearOperator& q, std::mt19937_64& rng,
                                          Linearity linearity) {
  require_same_ambient(p.algebra(), q.algebra());
  for (const auto* t : {&p, &q}) {
    const bool linear = linearity == Linearity::kKG ? is_kg_linear(*t) : is_fg_linear(*t);
    if (!linear || !is_projector(*t)) throw Error(ErrorKind::kNotProjector, "expected an equivariant projector");
  }
  const AdditiveCode im_p = image(p);
  const AdditiveCode im_q = image(q);
  const auto iso = modules_isomorphic(im_p, im_q, linearity, rng);
  if (iso.decision != Decision::kYes) return {iso.decision, std::nullopt};

  const FpMatrix& x = *iso.map;
  const auto x_inv = inverse(x);
  if (!x_inv) throw Error(ErrorKind::kCrossCheckFailed, "isomorphism witness is singular");
  FLinearOperator a(p.algebra_ptr(), coordinates_in(im_p, p.matrix()) * x * im_q.basis());
  FLinearOperator b(p.algebra_ptr(), coordinates_in(im_q, q.matrix()) * *x_inv * im_p.basis());
  MvnWitness<FLinearOperator> w{std::move(a), std::move(b)};
  if (!verify_witness(w, p, q)) throw Error(ErrorKind::kCrossCheckFailed, "BA = P or AB = Q fails");
  return {Decision::kYes, std::move(w)};
}

bool verify_witness(const MvnWitness<AlgebraElement>& w, const AlgebraElement& e, const AlgebraElement& f) {
  return verify_generic(w, e, f);
}

bool verify_witness(const MvnWitness<FLinearOperator>& w, const FLinearOperator& e, const FLinearOperator& f) {
  return verify_generic(w, e, f);
}

MvnWitness<AlgebraElement> normalize_witness(const MvnWitness<AlgebraElement>& w, const AlgebraElement& e,
                                             const AlgebraElement& f) {
  return normalize_generic(w, e, f);
}

MvnWitness<FLinearOperator> normalize_witness(const MvnWitness<FLinearOperator>& w, const FLinearOperator& e,
                                              const FLinearOperator& f) {
  return normalize_generic(w, e, f);
}

MvnWitness<AlgebraElement> chain_witnesses(const MvnWitness<AlgebraElement>& ef,
                                           const MvnWitness<AlgebraElement>& fh) {
  return chain_generic(ef, fh);
}

MvnWitness<FLinearOperator> chain_witnesses(const MvnWitness<FLinearOperator>& ef,
                                            const MvnWitness<FLinearOperator>& fh) {
  return chain_generic(ef, fh);
}

}  // namespace groupcodes
