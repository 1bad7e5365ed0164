#pragma once

#include <stdexcept>
#include <string>

namespace spohn {

enum class Errc {
  invalid_argument,
  validation,
  parse,
  empty_evidence,
  space_too_large,
  not_sorted,
  bad_epsilon,
  rank_out_of_range,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::validation: return "ValidationError";
    case Errc::parse: return "ParseError";
    case Errc::empty_evidence: return "EmptyEvidence";
    case Errc::space_too_large: return "SpaceTooLarge";
    case Errc::not_sorted: return "NotSorted";
    case Errc::bad_epsilon: return "BadEpsilon";
    case Errc::rank_out_of_range: return "RankOutOfRange";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  // The description without the error-kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace spohn
