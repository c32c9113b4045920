#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad ranges, sum mismatches, unknown names.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(const std::string& what_space, const std::string& count)
      : Error("enumeration of " + what_space + " too large: " + count +
              " elements exceeds budget of 10000000"),
        count_(count) {}
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

/// A model whose support is empty (zero normalizer, r > n for binary cells).
class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (e.g. non-exchangeable table).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of probability zero.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Time index or time vector outside the process horizon.
class HorizonError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

}  // namespace eom
