#include "mtasep/modular.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <stdexcept>

namespace mtasep {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const u128 r = (static_cast<u128>(1) << 64) % p;
    r2_ = static_cast<u64>((r * r) % p);
  }

  u64 modulus() const { return p_; }
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 s = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return s >= p_ ? s - p_ : s;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return mul(a % p_, r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 inverse(u64 a) const {
    u64 plain = from(a);
    u64 result = to(1);
    u64 base = to(plain);
    u64 e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

u64 residue(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

// Kernel modulo p of a matrix whose rank is checked to be n - 1. Returns the
// observed rank and, when it is n - 1, fills `kernel` with plain residues.
std::size_t kernel_mod(std::size_t n, const std::vector<SparseEntry>& entries, u64 p,
                       std::vector<u64>& kernel) {
  const Montgomery mont(p);
  std::vector<u64> a(n * n, 0);
  for (const SparseEntry& e : entries) {
    u64& cell = a[e.row * n + e.col];
    u64 v = residue(e.value, p);
    cell = cell + v >= p || cell + v < cell ? cell + v - p : cell + v;
  }
  for (u64& cell : a) cell = mont.to(cell);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = row; i < n; ++i) {
      if (a[i * n + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[row * n + j]);
    }
    const u64 inv = mont.inverse(a[row * n + col]);
    u64* prow = &a[row * n];
    for (std::size_t j = col; j < n; ++j) prow[j] = mont.mul(prow[j], inv);
    for (std::size_t i = row + 1; i < n; ++i) {
      u64* irow = &a[i * n];
      const u64 f = irow[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        if (prow[j] != 0) irow[j] = mont.sub(irow[j], mont.mul(f, prow[j]));
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  const std::size_t rank = pivot_cols.size();
  if (rank != n - 1) return rank;

  std::size_t free_col = n - 1;
  for (std::size_t k = 0; k < rank; ++k) {
    if (pivot_cols[k] != k) {
      free_col = k;
      break;
    }
  }
  std::vector<u64> x(n, 0);
  x[free_col] = mont.to(1);
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    u64 acc = 0;
    const u64* krow = &a[k * n];
    for (std::size_t j = c + 1; j < n; ++j) {
      if (krow[j] != 0 && x[j] != 0) {
        u64 t = mont.mul(krow[j], x[j]);
        acc = acc + t >= p ? acc + t - p : acc + t;
      }
    }
    x[c] = mont.neg(acc);
  }
  kernel.resize(n);
  for (std::size_t i = 0; i < n; ++i) kernel[i] = mont.from(x[i]);
  return rank;
}

bool satisfies(std::size_t n, const std::vector<SparseEntry>& entries,
               const std::vector<BigInt>& x) {
  std::vector<BigInt> y(n, BigInt(0));
  for (const SparseEntry& e : entries) y[e.row] += e.value * x[e.col];
  for (const BigInt& v : y) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t kernel_prime(std::size_t index) {
  static std::vector<u64> primes;
  u64 candidate = primes.empty() ? (static_cast<u64>(1) << 62) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    if (boost::multiprecision::miller_rabin_test(BigInt(candidate), 25)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

std::optional<BigRational> reconstruct_rational(const BigInt& residue_value, const BigInt& modulus) {
  BigInt half = modulus / 2;
  BigInt bound = sqrt(half);
  BigInt r0 = modulus, r1 = residue_value % modulus;
  if (r1 < 0) r1 += modulus;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
  if (t1 < 0) return BigRational(-r1, -t1);
  return BigRational(r1, t1);
}

ModularKernel modular_kernel(std::size_t n, const std::vector<SparseEntry>& entries,
                             std::size_t max_primes) {
  ModularKernel out;
  if (n == 0) return out;
  std::vector<BigInt> lifted;
  BigInt modulus = 1;
  std::size_t anchor = n;
  std::size_t deficient = 0;
  std::vector<u64> kernel;

  for (std::size_t k = 0; k < max_primes; ++k) {
    const u64 p = kernel_prime(k);
    const std::size_t rank = kernel_mod(n, entries, p, kernel);
    ++out.primes_used;
    if (rank != n - 1) {
      out.nullity = n - rank;
      if (rank > n - 1 || ++deficient >= 3) return out;
      continue;
    }
    out.nullity = 1;
    if (anchor == n) {
      for (std::size_t i = 0; i < n; ++i) {
        if (kernel[i] != 0) {
          anchor = i;
          break;
        }
      }
    }
    if (kernel[anchor] == 0) continue;
    const Montgomery mont(p);
    const u64 scale = mont.from(mont.inverse(mont.to(kernel[anchor])));
    for (u64& v : kernel) v = static_cast<u64>((static_cast<u128>(v) * scale) % p);

    if (lifted.empty()) {
      lifted.assign(kernel.begin(), kernel.end());
      modulus = p;
    } else {
      const BigInt bp(p);
      const BigInt inv_mod = [&] {
        BigInt m = modulus % bp;
        BigInt result = 1, base = m;
        u64 e = p - 2;
        while (e) {
          if (e & 1) result = result * base % bp;
          base = base * base % bp;
          e >>= 1;
        }
        return result;
      }();
      for (std::size_t i = 0; i < n; ++i) {
        BigInt diff = (BigInt(kernel[i]) - lifted[i] % bp) % bp;
        if (diff < 0) diff += bp;
        lifted[i] += modulus * (diff * inv_mod % bp);
      }
      modulus *= bp;
    }

    std::vector<BigRational> candidate;
    candidate.reserve(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto r = reconstruct_rational(lifted[i], modulus);
      if (!r) ok = false;
      else candidate.push_back(*r);
    }
    if (!ok) continue;
    BigInt lcd = 1;
    for (const BigRational& c : candidate) lcd = lcm(lcd, denominator(c));
    std::vector<BigInt> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = numerator(candidate[i]) * (lcd / denominator(candidate[i]));
    if (satisfies(n, entries, x)) {
      out.vector = std::move(x);
      return out;
    }
  }
  out.vector.clear();
  return out;
}

}  // namespace mtasep
