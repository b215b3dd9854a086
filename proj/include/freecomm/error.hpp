#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freecomm {

enum class ErrorCode {
  malformed_input,
  alphabet_mismatch,
  arity_mismatch,
  not_a_member,
  not_a_basis,
  incomplete_domain,
  infinite_index_image,
  not_injective,
  not_in_domain,
  not_a_subgroup_of_domain,
  level_too_large,
  invalid_element,
  degree_mismatch,
  invalid_table,
  order_too_large,
  not_isomorphic,
  not_subgroups,
  invalid_config,
  unknown_suite,
  io,
};

std::string_view to_string(ErrorCode code);

// The single exception type thrown by the library; `code()` says which
// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace freecomm
