#include "groupcodes/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "groupcodes/error.hpp"
#include "poly.hpp"

namespace groupcodes {

namespace {

constexpr std::uint32_t kMaxOrder = 1U << 24;
constexpr std::uint32_t kTableOrder = 1U << 16;

}  // namespace

std::shared_ptr<const FieldTower> FieldTower::create(std::uint64_t q, unsigned m,
                                                     std::optional<std::vector<Scalar>> modulus) {
  const auto pa = prime_power(q);
  if (!pa) throw Error(ErrorKind::kInvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "extension degree m must be at least 1");
  const auto [p, a] = *pa;
  const unsigned degree = a * m;
  std::uint64_t order = 1;
  for (unsigned i = 0; i < degree; ++i) {
    order *= p;
    if (order > kMaxOrder) throw Error(ErrorKind::kTooLarge, "|K| exceeds 2^24");
  }

  std::vector<Scalar> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != degree + 1 || mod.back() != 1)
      throw Error(ErrorKind::kInvalidArgument, "modulus must be monic of degree " + std::to_string(degree));
    if (std::any_of(mod.begin(), mod.end(), [p = p](Scalar c) { return c >= p; }))
      throw Error(ErrorKind::kInvalidArgument, "modulus coefficients must lie in [0, p)");
  } else {
    mod = conway_polynomial(p, degree);
  }
  if (!is_irreducible(p, mod)) throw Error(ErrorKind::kInvalidArgument, "modulus is not irreducible over F_p");
  return std::shared_ptr<const FieldTower>(new FieldTower(p, a, m, std::move(mod)));
}

FieldTower::FieldTower(Scalar p, unsigned a, unsigned m, std::vector<Scalar> modulus)
    : prime_(p), a_(a), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < a_; ++i) q_ *= p;
  order_ = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    place_.push_back(order_);
    order_ *= p;
  }

  primitive_ = find_primitive();
  if (order_ <= kTableOrder) {
    exp_.resize(order_ - 1);
    log_.assign(order_, 0);
    FieldElement x = one();
    for (std::uint32_t i = 0; i + 1 < order_; ++i) {
      exp_[i] = x.code;
      log_[x.code] = i;
      x = mul_schoolbook(x, primitive_);
    }
  }
  gamma_ = pow(primitive_, (order_ - 1) / (q_ - 1));
  if (frobenius(gamma_) != gamma_) throw Error(ErrorKind::kInvalidArgument, "subfield generator not fixed by Frobenius");

  basis_ = FpMatrix(p, 0, degree());
  const FieldElement alpha = generator();
  FieldElement alpha_pow = one();
  for (unsigned i = 0; i < m_; ++i) {
    FieldElement b = alpha_pow;
    for (unsigned k = 0; k < a_; ++k) {
      basis_.append_row(poly_coeffs(b));
      b = mul(b, gamma_);
    }
    alpha_pow = mul(alpha_pow, alpha);
  }
  auto inv = inverse(basis_);
  if (!inv) throw Error(ErrorKind::kInvalidArgument, "{γ^k α^i} is not an F_p-basis of K");
  basis_inverse_ = std::move(*inv);
}

FieldElement FieldTower::find_primitive() const {
  if (order_ == 2) return one();
  const auto primes = prime_factors(order_ - 1);
  for (std::uint32_t code = 2; code < order_; ++code) {
    const FieldElement x{code};
    bool ok = true;
    for (auto r : primes) {
      FieldElement y = one();
      FieldElement base = x;
      for (std::uint64_t e = (order_ - 1) / r; e > 0; e >>= 1U) {
        if (e & 1U) y = mul_schoolbook(y, base);
        base = mul_schoolbook(base, base);
      }
      if (y == one()) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  throw Error(ErrorKind::kInvalidArgument, "no primitive element found");
}

FieldElement FieldTower::generator() const { return from_poly(std::vector<Scalar>{0, 1}); }

FieldElement FieldTower::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(this->p());
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElement FieldTower::element(std::uint32_t code) const {
  if (code >= order_) throw Error(ErrorKind::kInvalidArgument, "element code out of range");
  return {code};
}

FieldElement FieldTower::from_poly(std::span<const Scalar> coeffs) const {
  detail::Poly c;
  c.reserve(coeffs.size());
  for (auto x : coeffs) c.push_back(x % p());
  c = detail::poly_mod(std::move(c), modulus_, prime_);
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < c.size(); ++i) code += c[i] * place_[i];
  return {code};
}

std::vector<Scalar> FieldTower::poly_coeffs(FieldElement x) const {
  std::vector<Scalar> c(degree());
  std::uint32_t rest = x.code;
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = rest % p();
    rest /= p();
  }
  return c;
}

FieldElement FieldTower::add(FieldElement x, FieldElement y) const {
  if (p() == 2) return {x.code ^ y.code};
  std::uint32_t r = 0;
  std::uint32_t a = x.code;
  std::uint32_t b = y.code;
  for (unsigned i = 0; i < degree(); ++i) {
    r += prime_.add(a % p(), b % p()) * place_[i];
    a /= p();
    b /= p();
  }
  return {r};
}

FieldElement FieldTower::neg(FieldElement x) const {
  if (p() == 2) return x;
  std::uint32_t r = 0;
  std::uint32_t a = x.code;
  for (unsigned i = 0; i < degree(); ++i) {
    r += prime_.neg(a % p()) * place_[i];
    a /= p();
  }
  return {r};
}

FieldElement FieldTower::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldTower::mul_schoolbook(FieldElement x, FieldElement y) const {
  return from_poly(detail::poly_mul(poly_coeffs(x), poly_coeffs(y), prime_));
}

FieldElement FieldTower::mul(FieldElement x, FieldElement y) const {
  if (x.code == 0 || y.code == 0) return zero();
  if (!has_tables()) return mul_schoolbook(x, y);
  const std::uint32_t n = order_ - 1;
  std::uint32_t s = log_[x.code] + log_[y.code];
  if (s >= n) s -= n;
  return {exp_[s]};
}

FieldElement FieldTower::pow(FieldElement x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.code == 0) return zero();
  if (has_tables()) {
    const std::uint64_t n = order_ - 1;
    return {exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[x.code]) * (e % n)) % n)]};
  }
  FieldElement result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return result;
}

FieldElement FieldTower::inv(FieldElement x) const {
  if (x.code == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero in K");
  return pow(x, order_ - 2);
}

FieldElement FieldTower::trace(FieldElement x) const {
  FieldElement sum = zero();
  FieldElement t = x;
  for (unsigned i = 0; i < m_; ++i) {
    sum = add(sum, t);
    t = frobenius(t);
  }
  return sum;
}

Scalar FieldTower::absolute_trace(FieldElement x) const {
  FieldElement sum = zero();
  FieldElement t = x;
  for (unsigned i = 0; i < degree(); ++i) {
    sum = add(sum, t);
    t = pow(t, p());
  }
  return sum.code;  // lies in F_p, so the packed value is the residue
}

FieldElement FieldTower::conjugate(FieldElement x) const {
  if (m_ % 2 != 0) throw Error(ErrorKind::kOddDegree, "conjugation needs even m, got m=" + std::to_string(m_));
  for (unsigned i = 0; i < m_ / 2; ++i) x = frobenius(x);
  return x;
}

FpVector FieldTower::basis_coords(FieldElement x) const { return vec_mat(poly_coeffs(x), basis_inverse_); }

FieldElement FieldTower::from_basis_coords(std::span<const Scalar> coords) const {
  if (coords.size() != degree()) throw Error(ErrorKind::kLengthMismatch, "basis coordinate length mismatch");
  return from_poly(vec_mat(coords, basis_));
}

FpMatrix FieldTower::multiplication_matrix(FieldElement lambda) const {
  FpMatrix mat(p(), 0, degree());
  for (unsigned r = 0; r < degree(); ++r) {
    const FieldElement b = from_poly(basis_.row(r));
    mat.append_row(basis_coords(mul(b, lambda)));
  }
  return mat;
}

std::vector<FieldElement> FieldTower::elements() const {
  std::vector<FieldElement> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = {i};
  return out;
}

std::vector<FieldElement> FieldTower::subfield_elements() const {
  std::vector<FieldElement> out;
  out.push_back(zero());
  FieldElement x = one();
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    out.push_back(x);
    x = mul(x, gamma_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldElement FieldTower::random(std::mt19937_64& rng) const {
  return {std::uniform_int_distribution<std::uint32_t>(0, order_ - 1)(rng)};
}

std::string FieldTower::format(FieldElement x) const {
  const auto c = poly_coeffs(x);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i] << '*';
    out << 'a';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

std::string FieldTower::spec() const {
  std::ostringstream out;
  out << "q=" << q_ << " m=" << m_ << " modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  return out.str();
}

}  // namespace groupcodes
