#ifndef SPANTK_ERRORS_HPP
#define SPANTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spantk {

/// Base class for every error raised by the toolkit.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A span or character offset lies outside its content.
struct bounds_error : error {
  using error::error;
};

/// Two spans in one set share at least one token.
struct overlap_error : error {
  using error::error;
};

/// Caller-supplied arguments violate an operation's preconditions
/// (empty input, mismatched sample coverage, bad ratios, ...).
struct input_error : error {
  using error::error;
};

/// A file could not be parsed; the message carries file/line context.
struct parse_error : error {
  using error::error;
};

/// A parsed record violates a corpus invariant; the message names the record.
struct validation_error : error {
  using error::error;
};

/// Base for chat-completion client failures.
struct llm_error : error {
  using error::error;
};

/// Request failed at the transport or HTTP level after all retries.
struct transport_error : llm_error {
  using llm_error::llm_error;
};

/// Endpoint rejected the credentials; never retried.
struct auth_error : llm_error {
  using llm_error::llm_error;
};

/// Request timed out after all retries.
struct timeout_error : llm_error {
  using llm_error::llm_error;
};

}  // namespace spantk

#endif  // SPANTK_ERRORS_HPP
