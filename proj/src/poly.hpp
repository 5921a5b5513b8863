#pragma once

// Internal dense polynomial helpers over F_p, constant term first.

#include <cstdint>
#include <vector>

#include "groupcodes/fp_matrix.hpp"

namespace groupcodes::detail {

using Poly = std::vector<Scalar>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& mod, const PrimeField& f) {
  trim(a);
  const std::size_t dm = mod.size() - 1;
  const Scalar lead_inv = f.inv(mod.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const Scalar factor = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, mod[i]));
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, const PrimeField& f) {
  return poly_mod(poly_mul(a, b, f), mod, f);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, const PrimeField& f) {
  Poly result = poly_mod(Poly{1}, mod, f);
  base = poly_mod(std::move(base), mod, f);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, mod, f);
    base = poly_mulmod(base, base, mod, f);
    e >>= 1U;
  }
  return result;
}

inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

}  // namespace groupcodes::detail
