#pragma once

// Data-parallel kernels.
//
// Each kernel comes as an OpenMP version and a plain serial reference.
// The library calls the parallel versions; the serial ones stay around so
// tests can check the two agree and the benchmark can compare them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "groupcodes/fp_matrix.hpp"

namespace groupcodes::kernels {

FpMatrix matmul_serial(const FpMatrix& a, const FpMatrix& b);
FpMatrix matmul_parallel(const FpMatrix& a, const FpMatrix& b);

/// Minimum block weight over all nonzero F_p-combinations of the rows of
/// `basis`. Columns are grouped into consecutive blocks of `block_size`; a
/// block counts toward the weight when any of its entries is nonzero.
/// Returns nullopt when the rows span no nonzero vector.
std::optional<std::size_t> min_block_weight_serial(const FpMatrix& basis, std::size_t block_size);
std::optional<std::size_t> min_block_weight_parallel(const FpMatrix& basis, std::size_t block_size);

/// Enumerates the indices in [0, count) accepted by `accept`, returned in
/// increasing order. `accept` must be safe to call concurrently.
std::vector<std::uint64_t> filter_indices_serial(std::uint64_t count,
                                                 const std::function<bool(std::uint64_t)>& accept);
std::vector<std::uint64_t> filter_indices_parallel(std::uint64_t count,
                                                   const std::function<bool(std::uint64_t)>& accept);

int max_threads();

}  // namespace groupcodes::kernels
