#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// elimination, closure or kernel code of the library; the point is to
// recompute answers the slow and obvious way.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "groupcodes/additive_code.hpp"
#include "groupcodes/codes.hpp"
#include "groupcodes/finite_field.hpp"
#include "groupcodes/fp_matrix.hpp"
#include "groupcodes/group.hpp"
#include "groupcodes/group_algebra.hpp"
#include "groupcodes/parse.hpp"

namespace oracle {

using groupcodes::FpMatrix;
using groupcodes::FpVector;
using groupcodes::Scalar;

/// GF(p^n) as polynomials mod a monic modulus, schoolbook arithmetic.
/// Codes pack coefficients base p with the constant term least significant.
class PolyField {
 public:
  PolyField(Scalar p, std::vector<Scalar> modulus) : p_(p), mod_(std::move(modulus)) {
    n_ = mod_.size() - 1;
    order_ = 1;
    for (std::size_t i = 0; i < n_; ++i) order_ *= p_;
  }

  std::uint32_t order() const { return order_; }

  std::vector<Scalar> unpack(std::uint32_t c) const {
    std::vector<Scalar> v(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = c % p_;
      c /= p_;
    }
    return v;
  }

  std::uint32_t pack(const std::vector<Scalar>& v) const {
    std::uint32_t c = 0;
    for (std::size_t i = n_; i-- > 0;) c = c * p_ + v[i];
    return c;
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    auto a = unpack(x);
    auto b = unpack(y);
    for (std::size_t i = 0; i < n_; ++i) a[i] = (a[i] + b[i]) % p_;
    return pack(a);
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    const auto a = unpack(x);
    const auto b = unpack(y);
    std::vector<std::uint64_t> prod(2 * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    for (auto& c : prod) c %= p_;
    for (std::size_t d = 2 * n_; d-- > n_;) {
      const std::uint64_t lead = prod[d];
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= n_; ++i) prod[d - n_ + i] = (prod[d - n_ + i] + (p_ - lead) * mod_[i]) % p_;
    }
    std::vector<Scalar> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Scalar>(prod[i]);
    return pack(out);
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

 private:
  Scalar p_;
  std::vector<Scalar> mod_;
  std::size_t n_ = 0;
  std::uint32_t order_ = 1;
};

/// Every F_p-combination of the rows, built coordinate by coordinate.
inline std::vector<FpVector> span_all(const FpMatrix& rows) {
  const Scalar p = rows.p();
  std::vector<FpVector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FpVector v(rows.cols(), 0);
    std::uint64_t t = idx;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      const Scalar c = t % p;
      t /= p;
      for (std::size_t k = 0; k < rows.cols(); ++k) v[k] = (v[k] + c * rows(r, k)) % p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::size_t block_weight(const FpVector& v, std::size_t block) {
  std::size_t w = 0;
  for (std::size_t b = 0; b < v.size(); b += block)
    if (std::any_of(v.begin() + b, v.begin() + b + block, [](Scalar x) { return x != 0; })) ++w;
  return w;
}

/// Minimum block weight of a nonzero vector in the span, by full enumeration.
inline std::size_t min_weight(const FpMatrix& rows, std::size_t block) {
  std::size_t best = SIZE_MAX;
  for (const auto& v : span_all(rows)) {
    const std::size_t w = block_weight(v, block);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

/// Σ_g Σ_h x_g y_h (gh), straight from the group table.
inline std::vector<groupcodes::FieldElement> convolve(const groupcodes::GroupAlgebra& kg,
                                                      std::span<const groupcodes::FieldElement> x,
                                                      std::span<const groupcodes::FieldElement> y) {
  const auto& f = kg.field();
  std::vector<groupcodes::FieldElement> out(kg.n(), f.zero());
  for (std::size_t g = 0; g < kg.n(); ++g)
    for (std::size_t h = 0; h < kg.n(); ++h) {
      const std::size_t k = kg.group().mul(g, h);
      out[k] = f.add(out[k], f.mul(x[g], y[h]));
    }
  return out;
}

/// All x ∈ KG with x² = x, by scanning every element.
inline std::vector<groupcodes::AlgebraElement> idempotents(const groupcodes::GroupAlgebraPtr& kg) {
  std::vector<groupcodes::AlgebraElement> out;
  const std::uint64_t total = *kg->element_count();
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto x = kg->element_at(i);
    const auto sq = convolve(*kg, x.coeffs(), x.coeffs());
    if (std::equal(sq.begin(), sq.end(), x.coeffs().begin())) out.push_back(x);
  }
  return out;
}

inline std::set<FpVector> as_set(const std::vector<FpVector>& v) { return {v.begin(), v.end()}; }

inline std::set<FpVector> words(const FpMatrix& rows) { return as_set(span_all(rows)); }
/// Codewords of a code, as a set of coordinate vectors.
inline std::set<FpVector> words(const groupcodes::AdditiveCode& c) { return words(c.basis()); }

inline groupcodes::GroupAlgebraPtr ambient(const std::string& field, const std::string& group) {
  return groupcodes::GroupAlgebra::create(groupcodes::parse_field(field), groupcodes::parse_group(group));
}

/// A random FG-submodule: the span of one to three random elements, some of
/// them drawn from FG to get smaller modules.
inline groupcodes::AdditiveCode random_submodule(const groupcodes::GroupAlgebraPtr& kg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution from_fg(0.5);
  std::vector<groupcodes::AlgebraElement> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(from_fg(rng) ? kg->random_fg(rng) : kg->random(rng));
  return groupcodes::span_fg(kg, gens);
}

}  // namespace oracle
