#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meetless {

enum class ErrorKind {
  // malformed or inconsistent input
  not_a_partial_order,
  join_not_lub,
  meet_not_glb,
  no_zero,
  unknown_element,
  parse_error,
  not_isotone,
  not_a_homomorphism,
  not_in_c,
  not_reduced,
  rank_too_high,
  support_not_contained,
  too_short,
  hypothesis_violated,
  not_leq,
  support_violation,
  index_out_of_poset,
  meet_unavailable,
  not_distributive,
  distributivity_split_failed,
  // guard overflow
  too_large,
  search_space_too_large,
  // a self-check failed: the implementation disagrees with itself
  internal,
};

std::string_view error_kind_name(ErrorKind kind);

// True for the kinds that signal a configurable enumeration guard tripping.
bool is_guard_overflow(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Names of the elements involved in the first violation, when the error
  // reports one (e.g. the pair for which a join is not a least upper bound).
  std::vector<std::string> const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

// Enumeration guard: value of MEETLESS_GUARD when set and numeric, else
// `fallback`.
std::size_t guard_from_env(std::size_t fallback);

}  // namespace meetless
