#ifndef RENNER_ERRORS_HPP
#define RENNER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace renner {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unsupported (type, rank) pair or malformed weight / root-index input.
class InvalidType : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::string const& what_grew, std::size_t cap)
      : Error(what_grew + " exceeds the configured cap of " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// The unit permutations generated a group smaller than the Weyl group.
class FaithfulnessError : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  using Error::Error;
};

class NotInOrbit : public Error {
 public:
  using Error::Error;
};

// A structural fact that must hold by construction did not (lattice order,
// stratum discipline, face bookkeeping). Never silently recovered from.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace renner

#endif  // RENNER_ERRORS_HPP
