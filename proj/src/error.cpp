#include "meetless/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace meetless {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_a_partial_order: return "NotAPartialOrder";
    case ErrorKind::join_not_lub: return "JoinNotLub";
    case ErrorKind::meet_not_glb: return "MeetNotGlb";
    case ErrorKind::no_zero: return "NoZero";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::not_isotone: return "NotIsotone";
    case ErrorKind::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorKind::not_in_c: return "NotInC";
    case ErrorKind::not_reduced: return "NotReduced";
    case ErrorKind::rank_too_high: return "RankTooHigh";
    case ErrorKind::support_not_contained: return "SupportNotContained";
    case ErrorKind::too_short: return "TooShort";
    case ErrorKind::hypothesis_violated: return "HypothesisViolated";
    case ErrorKind::not_leq: return "NotLeq";
    case ErrorKind::support_violation: return "SupportViolation";
    case ErrorKind::index_out_of_poset: return "IndexOutOfPoset";
    case ErrorKind::meet_unavailable: return "MeetUnavailable";
    case ErrorKind::not_distributive: return "NotDistributive";
    case ErrorKind::distributivity_split_failed:
      return "DistributivitySplitFailed";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

bool is_guard_overflow(ErrorKind kind) {
  return kind == ErrorKind::too_large ||
         kind == ErrorKind::search_space_too_large;
}

std::size_t guard_from_env(std::size_t fallback) {
  char const* env = std::getenv("MEETLESS_GUARD");
  if (env == nullptr) return fallback;
  std::size_t value = 0;
  auto const* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) return fallback;
  return value;
}

}  // namespace meetless
