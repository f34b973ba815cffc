#pragma once

// Landau's function, the prime-prefix function G, and the arithmetic
// progression of large representable sums of a coin set.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "uxnfa/error.hpp"
#include "uxnfa/natural.hpp"

namespace uxnfa {

/// Sieve of Eratosthenes; primes <= limit in ascending order.
inline std::vector<std::size_t> primes_up_to(std::size_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::size_t k = p * p; k <= limit; k += p) composite[k] = true;
  }
  return out;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

/// F(n): the largest lcm of positive integers summing to at most n.  An
/// optimal partition can always use prime powers of distinct primes, so this
/// is a knapsack over primes p <= n where each prime contributes p^e for the
/// best e with p^e inside the remaining budget.  F(0) = 1.
inline natural landau_f(std::size_t n) {
  std::vector<natural> best(n + 1, natural(1));
  for (std::size_t p : primes_up_to(n)) {
    for (std::size_t budget = n; budget >= p; --budget) {
      for (std::size_t power = p; power <= budget; power *= p) {
        const natural candidate = best[budget - power] * power;
        if (candidate > best[budget]) best[budget] = candidate;
        if (power > budget / p) break;
      }
    }
  }
  return best[n];
}

struct prime_product {
  natural value;
  std::vector<std::size_t> primes;
};

/// G(n): product of the longest prefix 2, 3, 5, ... of the primes whose sum
/// stays within n.
inline prime_product greedy_g(std::size_t n) {
  if (n < 2) throw error(errc::below_smallest_prime, "G(n) needs n >= 2, got " + std::to_string(n));
  prime_product out{natural(1), {}};
  std::size_t sum = 0;
  for (std::size_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (sum + p > n) break;
    sum += p;
    out.value *= p;
    out.primes.push_back(p);
  }
  return out;
}

/// {t + x*d | x >= 0}: the coin sums above n^2 for a coin set with gcd d.
struct arithmetic_progression {
  std::uint64_t offset = 0;  // least multiple of d strictly greater than n^2
  std::uint64_t period = 1;  // gcd of the coins
  std::uint64_t bound = 0;   // n

  bool contains(std::uint64_t z) const { return z >= offset && (z - offset) % period == 0; }
};

inline arithmetic_progression progression(const std::vector<std::uint64_t>& coins, std::uint64_t n) {
  if (coins.empty()) throw error(errc::unsorted_or_out_of_range, "coin list is empty");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < coins.size(); ++i) {
    if (coins[i] == 0 || coins[i] > n || (i > 0 && coins[i - 1] >= coins[i]))
      throw error(errc::unsorted_or_out_of_range,
                  "coins must satisfy 0 < c1 < c2 < ... <= n = " + std::to_string(n));
    d = std::gcd(d, coins[i]);
  }
  return {(n * n / d + 1) * d, d, n};
}

/// Coin-problem DP: can z be written as a non-negative combination of coins?
inline bool representable(const std::vector<std::uint64_t>& coins, std::uint64_t z) {
  std::vector<bool> reach(z + 1, false);
  reach[0] = true;
  for (std::uint64_t v = 1; v <= z; ++v)
    for (std::uint64_t c : coins)
      if (c > 0 && c <= v && reach[v - c]) {
        reach[v] = true;
        break;
      }
  return reach[z];
}

}  // namespace uxnfa
