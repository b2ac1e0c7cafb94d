#pragma once

#include <stdexcept>
#include <string>

namespace ddm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (group elements, labels, index sets, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside their admissible range, or objects over different moduli.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A pair sequence violating the cross condition i_s * k_t == m/2 (mod m).
class IndexSetError : public DomainError {
 public:
  IndexSetError(const std::string& what, int s, int t)
      : DomainError(what), s_(s), t_(t) {}

  /// 1-based positions of the failing ordered pair, or 0 for range errors.
  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }

 private:
  int s_;
  int t_;
};

/// Exact linear algebra was handed incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A module that should split into catalog weights did not.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A structural certificate (simplicity, unique highest weight, invariance) failed.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddm
