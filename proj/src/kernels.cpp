#include "groupcodes/kernels.hpp"

#include <algorithm>
#include <limits>

#include "groupcodes/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcodes::kernels {

namespace {

void require_conformable(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows() || a.p() != b.p())
    throw Error(ErrorKind::kLengthMismatch, "matrix product dimensions do not conform");
}

// Row r of a·b, accumulated in 64 bits and reduced once per entry whenever
// the running sum cannot overflow.
void product_row(const FpMatrix& a, const FpMatrix& b, std::size_t r, std::span<Scalar> out) {
  const std::uint64_t p = a.p();
  const std::uint64_t max_term = (p - 1) * (p - 1);
  const std::uint64_t budget = max_term == 0 ? std::numeric_limits<std::uint64_t>::max()
                                             : (std::numeric_limits<std::uint64_t>::max() - p) / max_term;
  std::vector<std::uint64_t> acc(b.cols(), 0);
  std::uint64_t pending = 0;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const std::uint64_t x = a(r, k);
    if (x == 0) continue;
    auto brow = b.row(k);
    for (std::size_t c = 0; c < b.cols(); ++c) acc[c] += x * brow[c];
    if (++pending >= budget) {
      for (auto& v : acc) v %= p;
      pending = 1;
    }
  }
  for (std::size_t c = 0; c < b.cols(); ++c) out[c] = static_cast<Scalar>(acc[c] % p);
}

std::size_t block_weight(std::span<const Scalar> v, std::size_t block_size) {
  std::size_t w = 0;
  for (std::size_t start = 0; start < v.size(); start += block_size) {
    for (std::size_t i = start; i < start + block_size; ++i) {
      if (v[i] != 0) {
        ++w;
        break;
      }
    }
  }
  return w;
}

void check_block(const FpMatrix& basis, std::size_t block_size) {
  if (block_size == 0 || basis.cols() % block_size != 0)
    throw Error(ErrorKind::kInvalidArgument, "block size must divide the vector length");
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(ErrorKind::kTooLargeToEnumerate, "codeword count overflows 64 bits");
    r *= base;
  }
  return r;
}

// Walks every combination of rows [0, low) added onto `start`, in odometer
// order, and returns the minimum nonzero block weight seen.
std::size_t walk_low_digits(const FpMatrix& basis, std::size_t low, FpVector word, std::size_t block_size) {
  const PrimeField& f = basis.field();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Scalar> digits(low, 0);
  while (true) {
    const std::size_t w = block_weight(word, block_size);
    if (w != 0) best = std::min(best, w);
    std::size_t d = 0;
    for (; d < low; ++d) {
      auto row = basis.row(d);
      for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], row[c]);
      if (++digits[d] < f.p()) break;
      digits[d] = 0;  // p additions of the same row cancel out
    }
    if (d == low) break;
  }
  return best;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FpMatrix matmul_serial(const FpMatrix& a, const FpMatrix& b) {
  require_conformable(a, b);
  FpMatrix c(a.p(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = a.field().add(s, a.field().mul(a(r, k), b(k, j)));
      c(r, j) = s;
    }
  }
  return c;
}

FpMatrix matmul_parallel(const FpMatrix& a, const FpMatrix& b) {
  require_conformable(a, b);
  FpMatrix c(a.p(), a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
  const bool big = a.rows() * a.cols() * b.cols() >= (1U << 15);
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t r = 0; r < rows; ++r) product_row(a, b, static_cast<std::size_t>(r), c.row(static_cast<std::size_t>(r)));
  return c;
}

std::optional<std::size_t> min_block_weight_serial(const FpMatrix& basis, std::size_t block_size) {
  check_block(basis, block_size);
  if (basis.rows() == 0) return std::nullopt;
  const PrimeField& f = basis.field();
  const std::uint64_t total = checked_power(f.p(), basis.rows());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  FpVector word(basis.cols());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::fill(word.begin(), word.end(), 0);
    std::uint64_t rest = idx;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const auto digit = static_cast<Scalar>(rest % f.p());
      rest /= f.p();
      if (digit == 0) continue;
      auto row = basis.row(r);
      for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], f.mul(digit, row[c]));
    }
    const std::size_t w = block_weight(word, block_size);
    if (w != 0) best = std::min(best, w);
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::optional<std::size_t> min_block_weight_parallel(const FpMatrix& basis, std::size_t block_size) {
  check_block(basis, block_size);
  if (basis.rows() == 0) return std::nullopt;
  const PrimeField& f = basis.field();
  const std::size_t k = basis.rows();
  // Split on the top rows so there are enough chunks to balance.
  std::size_t high = 0;
  std::uint64_t chunks = 1;
  while (high < k && chunks < 256) {
    chunks *= f.p();
    ++high;
  }
  const std::size_t low = k - high;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto nchunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t chunk = 0; chunk < nchunks; ++chunk) {
    FpVector start(basis.cols(), 0);
    auto rest = static_cast<std::uint64_t>(chunk);
    for (std::size_t j = 0; j < high; ++j) {
      const auto digit = static_cast<Scalar>(rest % f.p());
      rest /= f.p();
      if (digit == 0) continue;
      auto row = basis.row(low + j);
      for (std::size_t c = 0; c < start.size(); ++c) start[c] = f.add(start[c], f.mul(digit, row[c]));
    }
    best = std::min(best, walk_low_digits(basis, low, std::move(start), block_size));
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<std::uint64_t> filter_indices_serial(std::uint64_t count,
                                                 const std::function<bool(std::uint64_t)>& accept) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t i = 0; i < count; ++i)
    if (accept(i)) hits.push_back(i);
  return hits;
}

std::vector<std::uint64_t> filter_indices_parallel(std::uint64_t count,
                                                   const std::function<bool(std::uint64_t)>& accept) {
  std::vector<std::uint64_t> hits;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i)
      if (accept(static_cast<std::uint64_t>(i))) local.push_back(static_cast<std::uint64_t>(i));
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace groupcodes::kernels
