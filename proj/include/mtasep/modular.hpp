#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mtasep/poly.hpp"

namespace mtasep {

/// Sparse integer matrix given as (row, column, value) entries; duplicates add.
struct SparseEntry {
  std::size_t row;
  std::size_t col;
  BigInt value;
};

/// Outcome of a modular kernel computation.
struct ModularKernel {
  /// Coprime integer kernel vector, verified exactly against the input.
  std::vector<BigInt> vector;
  /// n - rank as observed modulo the primes used.
  std::size_t nullity = 0;
  std::size_t primes_used = 0;
};

/// Kernel of a square integer matrix of corank one.
///
/// The kernel is computed modulo 62-bit primes by dense elimination in
/// Montgomery form, lifted with the Chinese remainder theorem and rational
/// reconstruction, and accepted only once the candidate satisfies the
/// original integer system exactly. When the observed nullity is not one,
/// `vector` is empty and `nullity` reports it.
ModularKernel modular_kernel(std::size_t n, const std::vector<SparseEntry>& entries,
                             std::size_t max_primes = 400);

/// Primes just below 2^62, descending; deterministic.
std::uint64_t kernel_prime(std::size_t index);

/// Rational reconstruction of `residue` modulo `modulus`, or nothing when no
/// fraction with both parts below sqrt(modulus / 2) exists.
std::optional<BigRational> reconstruct_rational(const BigInt& residue, const BigInt& modulus);

}  // namespace mtasep
