#pragma once

// Path counting in the semiring {0, 1, >=2}.  Exclusive acceptance only has
// to tell "no path", "exactly one path" and "several paths" apart, so counts
// are capped at `many`.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace uxnfa {

enum class sat_count : std::uint8_t { zero = 0, one = 1, many = 2 };

constexpr sat_count saturate(unsigned long long n) noexcept {
  return n == 0 ? sat_count::zero : n == 1 ? sat_count::one : sat_count::many;
}

constexpr sat_count operator+(sat_count a, sat_count b) noexcept {
  const unsigned s = static_cast<unsigned>(a) + static_cast<unsigned>(b);
  return s >= 2 ? sat_count::many : static_cast<sat_count>(s);
}

constexpr sat_count operator*(sat_count a, sat_count b) noexcept {
  const unsigned p = static_cast<unsigned>(a) * static_cast<unsigned>(b);
  return p >= 2 ? sat_count::many : static_cast<sat_count>(p);
}

constexpr sat_count& operator+=(sat_count& a, sat_count b) noexcept { return a = a + b; }

inline std::ostream& operator<<(std::ostream& os, sat_count c) {
  switch (c) {
    case sat_count::zero: return os << "0";
    case sat_count::one: return os << "1";
    case sat_count::many: return os << ">=2";
  }
  return os;
}

using count_vector = std::vector<sat_count>;

/// Dense square matrix over sat_count, row-major.
class count_matrix {
 public:
  count_matrix() = default;
  explicit count_matrix(std::size_t n) : n_(n), cells_(n * n, sat_count::zero) {}

  static count_matrix identity(std::size_t n) {
    count_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = sat_count::one;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  sat_count& operator()(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
  sat_count operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

  friend count_matrix operator*(const count_matrix& a, const count_matrix& b) {
    assert(a.n_ == b.n_);
    const std::size_t n = a.n_;
    count_matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const sat_count aik = a(i, k);
        if (aik == sat_count::zero) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  bool operator==(const count_matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<sat_count> cells_;
};

}  // namespace uxnfa
