#pragma once

#include <stdexcept>
#include <string>

namespace hmat {

enum class ErrorKind {
  not_a_member,
  empty_family,
  not_constructible,
  not_unit_increasing,
  invalid_h_spec,
  ground_mismatch,
  h_not_in_domain,
  domain_not_power_set,
  e_missing_from_domain,
  not_a_lattice,
  invalid_poset,
  out_of_range,
  zero_missing,
  zero_missing_from_h,
  budget_exceeded,
  too_large_for_exhaustive,
  unknown_predicate,
  invalid_value,
  parse_error,
  unresolved_name,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hmat
