#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uxnfa {

enum class errc {
  index_out_of_range,
  nondeterministic_under_dfa_mode,
  duplicate_edge,
  empty_language_after_trim,
  vector_space_exceeded,
  superpath_budget_exceeded,
  lcm_overflow,
  below_smallest_prime,
  unsorted_or_out_of_range,
  invalid_primes,
  invalid_cycle_lengths,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::nondeterministic_under_dfa_mode: return "NondeterministicUnderDfaMode";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::empty_language_after_trim: return "EmptyLanguageAfterTrim";
    case errc::vector_space_exceeded: return "VectorSpaceExceeded";
    case errc::superpath_budget_exceeded: return "SuperpathBudgetExceeded";
    case errc::lcm_overflow: return "LcmOverflow";
    case errc::below_smallest_prime: return "BelowSmallestPrime";
    case errc::unsorted_or_out_of_range: return "UnsortedOrOutOfRange";
    case errc::invalid_primes: return "InvalidPrimes";
    case errc::invalid_cycle_lengths: return "InvalidCycleLengths";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is a single line suitable for a CLI diagnostic.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace uxnfa
