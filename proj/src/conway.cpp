#include <map>
#include <mutex>
#include <string>

#include "groupcodes/error.hpp"
#include "groupcodes/finite_field.hpp"
#include "poly.hpp"

namespace groupcodes {

using detail::Poly;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<Scalar, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  unsigned a = 0;
  while (q > 1) {
    q /= factors.front();
    ++a;
  }
  return std::make_pair(static_cast<Scalar>(factors.front()), a);
}

bool is_irreducible(Scalar p, std::span<const Scalar> poly) {
  Poly f(poly.begin(), poly.end());
  detail::trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  const PrimeField field(p);
  // Every monic divisor candidate of degree d, enumerated as base-p digits
  // of its lower coefficients.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Scalar>(rest % p);
        rest /= p;
      }
      if (detail::poly_mod(f, g, field).empty()) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Horner evaluation of `c` at the residue `y` modulo `f`.
Poly evaluate_at(const Poly& c, const Poly& y, const Poly& f, const PrimeField& field) {
  Poly acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = detail::poly_mulmod(acc, y, f, field);
    if (acc.empty()) acc.push_back(0);
    acc[0] = field.add(acc[0], c[i]);
    detail::trim(acc);
  }
  return acc;
}

std::vector<Scalar> compute_conway(Scalar p, unsigned n) {
  const PrimeField field(p);
  const std::uint64_t group_order = ipow(p, n) - 1;
  const auto primes = prime_factors(group_order);

  std::vector<std::pair<unsigned, Poly>> sub;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) sub.emplace_back(d, conway_polynomial(p, d));

  const std::uint64_t candidates = ipow(p, n);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    // idx enumerates (c_{n-1}, ..., c_0) lexicographically, c_{n-1} most
    // significant; the coefficient of x^i is (-1)^{n-i} c_i.
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < n; ++i) {
      const auto c = static_cast<Scalar>(rest % p);
      rest /= p;
      f[i] = ((n - i) % 2 == 0) ? c : field.neg(c);
    }
    if (f[0] == 0) continue;

    const Poly x{0, 1};
    if (!detail::is_one(detail::poly_powmod(x, group_order, f, field))) continue;
    bool primitive = true;
    for (auto r : primes) {
      if (detail::is_one(detail::poly_powmod(x, group_order / r, f, field))) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;

    bool compatible = true;
    for (const auto& [d, cd] : sub) {
      const Poly y = detail::poly_powmod(x, group_order / (ipow(p, d) - 1), f, field);
      if (!evaluate_at(cd, y, f, field).empty()) {
        compatible = false;
        break;
      }
    }
    if (compatible) return f;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no Conway polynomial found for p=" + std::to_string(p) + " n=" + std::to_string(n));
}

}  // namespace

std::vector<Scalar> conway_polynomial(Scalar p, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<Scalar, unsigned>, std::vector<Scalar>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
  }
  // Recursion into divisor degrees happens outside the lock.
  auto poly = compute_conway(p, n);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, n), std::move(poly)).first->second;
}

}  // namespace groupcodes
