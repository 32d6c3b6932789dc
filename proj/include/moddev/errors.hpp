#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moddev {

/// Caller supplied something outside an operation's domain (bad vertex, bad
/// uniformity, malformed file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity the caller asked for is undefined for this input, e.g. a rate
/// for a degree-regular hypergraph.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive computations refuse work above a configured size.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(what), requested_(requested), limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

}  // namespace moddev
