#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ddm {

class CycNum;

/**
 * The cyclotomic field Q(w) with w a primitive m-th root of unity, realised
 * as Q[x] / Phi_m(x).
 *
 * Instances are interned: `get(m)` returns the same object for the lifetime of
 * the process, so elements may keep a plain pointer to their field. All state
 * is computed in the constructor and never mutated afterwards.
 */
class CyclotomicField {
 public:
  /// Interned field for modulus m (m >= 3). Thread-safe.
  static const CyclotomicField& get(int m);

  int order() const noexcept { return m_; }
  /// Euler phi(m): the number of stored coefficients.
  int degree() const noexcept { return phi_; }
  /// Coefficients of Phi_m, constant term first; monic of length phi(m)+1.
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }

  /// w^e with e reduced mod m.
  const CycNum& root_power(long long e) const;

  CycNum zero() const;
  CycNum one() const;

  /// x^j mod Phi_m for phi <= j <= 2 phi - 2, as integer coefficient rows.
  const std::vector<mpz_class>& reduction_row(int j) const {
    return reduction_[static_cast<std::size_t>(j - phi_)];
  }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(int m);

  int m_;
  int phi_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> reduction_;
  std::vector<CycNum> powers_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, by repeated exact
/// division of x^m - 1 by Phi_d for the proper divisors d of m.
std::vector<mpz_class> cyclotomic_polynomial(int m);

/**
 * Exact element of Q(w).
 *
 * Stored as the coefficient vector of a polynomial in w of degree < phi(m),
 * with trailing zero coefficients trimmed; zero is the empty vector. Every
 * mpq_class is kept canonical by GMP. Pure rationals (length <= 1) need no
 * field and may be combined with elements of any field.
 */
class CycNum {
 public:
  CycNum() = default;
  CycNum(long v);  // NOLINT(google-explicit-constructor): rational literals
  CycNum(const mpq_class& v);  // NOLINT(google-explicit-constructor)
  /// Polynomial sum c0 + c1 w + ...; reduced mod Phi_m if longer than phi(m).
  CycNum(const CyclotomicField& field, std::vector<mpq_class> coeffs);

  const CyclotomicField* field() const noexcept { return field_; }
  /// Trimmed coefficients; `coeff(j)` pads with zeros.
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : mpq_class(0);
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const noexcept { return c_.size() <= 1; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  /// Multiplicative inverse via extended Euclid against Phi_m.
  /// Throws DomainError on zero.
  CycNum inverse() const;

  /// this += a * b, avoiding a temporary in elimination inner loops.
  void add_product(const CycNum& a, const CycNum& b);

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// "c0 + c1*w + c2*w^2 ..." with exact rationals "p/q"; zero is "0".
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static CycNum parse(const CyclotomicField& field, std::string_view text);

 private:
  void trim();
  void adopt_field(const CycNum& o);

  const CyclotomicField* field_ = nullptr;
  std::vector<mpq_class> c_;
};

/// w^e in Q(w_m): canonical form with the exponent taken mod m.
inline const CycNum& cyc_power(int m, long long e) {
  return CyclotomicField::get(m).root_power(e);
}

}  // namespace ddm
