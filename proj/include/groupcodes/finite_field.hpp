#pragma once

// The field pair F = F_q ⊆ K = F_{q^m}.
//
// K is built over its prime field F_p from a monic irreducible modulus of
// degree a·m (q = p^a). Elements are stored as their coefficient vector over
// F_p packed base p into one integer, constant term in the least significant
// digit, so an element value doubles as an index into K.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "groupcodes/fp_matrix.hpp"

namespace groupcodes {

struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FieldTower {
 public:
  /// Builds F_q ⊆ F_{q^m}. Without an explicit modulus the Conway polynomial
  /// of degree a·m over F_p is used. A supplied modulus is checked for
  /// irreducibility by trial division.
  static std::shared_ptr<const FieldTower> create(std::uint64_t q, unsigned m,
                                                  std::optional<std::vector<Scalar>> modulus = std::nullopt);

  Scalar p() const { return prime_.p(); }
  const PrimeField& prime_field() const { return prime_; }
  unsigned subfield_exponent() const { return a_; }  // q = p^a
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  unsigned degree() const { return a_ * m_; }  // [K : F_p]
  std::uint32_t order() const { return order_; }
  const std::vector<Scalar>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement generator() const;  // α, the class of x; generates K over F
  FieldElement subfield_generator() const { return gamma_; }  // γ, generates F over F_p
  FieldElement primitive_element() const { return primitive_; }
  FieldElement from_int(std::int64_t v) const;
  FieldElement element(std::uint32_t code) const;
  FieldElement from_poly(std::span<const Scalar> coeffs) const;
  std::vector<Scalar> poly_coeffs(FieldElement x) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// x ↦ x^q; its fixed points are exactly F.
  FieldElement frobenius(FieldElement x) const { return pow(x, q_); }
  /// Tr_{K/F}(x) = x + x^q + ... + x^{q^{m-1}}, an element of F.
  FieldElement trace(FieldElement x) const;
  /// Tr_{K/F_p}(x) as a prime field scalar.
  Scalar absolute_trace(FieldElement x) const;
  /// x ↦ x^{q^{m/2}}. Throws Error(kOddDegree) when m is odd.
  FieldElement conjugate(FieldElement x) const;
  bool in_subfield(FieldElement x) const { return frobenius(x) == x; }

  /// Coordinates over F_p in the basis {γ^k α^i}, index i·a + k. Grouping
  /// the a digits of each i gives the F-coordinates in {1, α, ..., α^{m-1}}.
  FpVector basis_coords(FieldElement x) const;
  FieldElement from_basis_coords(std::span<const Scalar> coords) const;
  /// Matrix of y ↦ y·λ acting on basis coordinates (row convention).
  FpMatrix multiplication_matrix(FieldElement lambda) const;

  std::vector<FieldElement> elements() const;
  std::vector<FieldElement> subfield_elements() const;
  FieldElement random(std::mt19937_64& rng) const;

  /// Polynomial in the generator `a`, e.g. "a^2 + 1" or "2*a + 2".
  std::string format(FieldElement x) const;
  /// Canonical textual spec: "q=<q> m=<m> modulus=<c0,c1,...>".
  std::string spec() const;

 private:
  FieldTower(Scalar p, unsigned a, unsigned m, std::vector<Scalar> modulus);

  FieldElement mul_schoolbook(FieldElement x, FieldElement y) const;
  FieldElement find_primitive() const;

  PrimeField prime_;
  unsigned a_;
  unsigned m_;
  std::uint64_t q_;
  std::uint32_t order_;
  std::vector<Scalar> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  std::vector<std::uint32_t> exp_;    // primitive^i, i in [0, order-1)
  std::vector<std::uint32_t> log_;
  FieldElement primitive_;
  FieldElement gamma_;
  FpMatrix basis_;          // rows: poly coeffs of γ^k α^i
  FpMatrix basis_inverse_;
};

using FieldTowerPtr = std::shared_ptr<const FieldTower>;

/// Conway polynomial of degree n over F_p, coefficients constant term first.
std::vector<Scalar> conway_polynomial(Scalar p, unsigned n);

/// Trial division against every monic polynomial of degree ≤ deg/2.
bool is_irreducible(Scalar p, std::span<const Scalar> poly);

/// Splits q = p^a; nullopt if q is not a prime power.
std::optional<std::pair<Scalar, unsigned>> prime_power(std::uint64_t q);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace groupcodes
