#include "ddm/cyclofield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

using QPoly = std::vector<mpq_class>;

void trim_poly(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; divisor is monic.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class q = num[k];
    quot[k - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= q * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw Error("cyclotomic division left a remainder");
  }
  return quot;
}

// Remainder and quotient of polynomials over Q.
void poly_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class q = a.back() / lead;
    quot[shift] = q;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    trim_poly(a);
  }
  rem = std::move(a);
  trim_poly(quot);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_poly(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim_poly(a);
  return a;
}

int euler_phi(int m) {
  int result = m;
  int r = m;
  for (int p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    while (r % p == 0) r /= p;
    result -= result / p;
  }
  if (r > 1) result -= result / r;
  return result;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic polynomial needs m >= 1");
  std::vector<mpz_class> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

CyclotomicField::CyclotomicField(int m)
    : m_(m), phi_(euler_phi(m)), modulus_(cyclotomic_polynomial(m)) {
  // x^j mod Phi_m for j in [phi, 2 phi - 2], built incrementally from x^phi.
  std::vector<mpz_class> row(static_cast<std::size_t>(phi_));
  for (int j = 0; j < phi_; ++j) row[static_cast<std::size_t>(j)] = -modulus_[static_cast<std::size_t>(j)];
  for (int j = phi_; j <= 2 * phi_ - 2; ++j) {
    reduction_.push_back(row);
    // multiply by x and reduce the overflowing top coefficient
    const mpz_class top = row.back();
    for (std::size_t t = row.size(); t-- > 1;) row[t] = row[t - 1];
    row[0] = 0;
    for (std::size_t t = 0; t < row.size(); ++t) row[t] -= top * modulus_[t];
  }
  powers_.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    powers_.emplace_back(*this, std::move(c));
  }
}

const CyclotomicField& CyclotomicField::get(int m) {
  if (m < 3) throw DomainError("cyclotomic modulus must be >= 3, got " + std::to_string(m));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot.reset(new CyclotomicField(m));
  return *slot;
}

const CycNum& CyclotomicField::root_power(long long e) const {
  long long r = e % m_;
  if (r < 0) r += m_;
  return powers_[static_cast<std::size_t>(r)];
}

CycNum CyclotomicField::zero() const { return CycNum(*this, {}); }
CycNum CyclotomicField::one() const { return CycNum(*this, {mpq_class(1)}); }

// ---------------------------------------------------------------------------

CycNum::CycNum(long v) {
  if (v != 0) c_.emplace_back(v);
}

CycNum::CycNum(const mpq_class& v) {
  if (v != 0) c_.push_back(v);
}

CycNum::CycNum(const CyclotomicField& field, std::vector<mpq_class> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  const auto phi = static_cast<std::size_t>(field.degree());
  if (c_.size() > phi) {
    // generic reduction: fold x^j for j >= phi using Phi_m repeatedly
    for (std::size_t j = c_.size(); j-- > phi;) {
      const mpq_class top = c_[j];
      c_.pop_back();
      if (top == 0) continue;
      const auto& mod = field.modulus();
      for (std::size_t t = 0; t < phi; ++t) c_[j - phi + t] -= top * mod[t];
    }
  }
  trim();
}

void CycNum::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void CycNum::adopt_field(const CycNum& o) {
  if (o.field_ == nullptr) return;
  if (field_ == nullptr) {
    field_ = o.field_;
  } else if (field_ != o.field_ && !o.is_rational() && !is_rational()) {
    throw DomainError("cyclotomic elements over different moduli");
  } else if (field_ != o.field_ && is_rational()) {
    field_ = o.field_;
  }
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  adopt_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  adopt_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  CycNum r;
  r.field_ = a.field_ != nullptr ? a.field_ : b.field_;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const bool a_scalar = a.c_.size() == 1;
    const mpq_class& s = a_scalar ? a.c_[0] : b.c_[0];
    const CycNum& p = a_scalar ? b : a;
    if (a_scalar && b.field_ != nullptr) r.field_ = b.field_;
    r.c_.reserve(p.c_.size());
    for (const auto& v : p.c_) r.c_.push_back(v * s);
    return r;
  }
  if (a.field_ == nullptr || b.field_ == nullptr || a.field_ != b.field_) {
    throw DomainError("cyclotomic elements over different moduli");
  }
  const CyclotomicField& f = *a.field_;
  const auto phi = static_cast<std::size_t>(f.degree());
  std::vector<mpq_class> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  if (prod.size() > phi) {
    for (std::size_t j = phi; j < prod.size(); ++j) {
      if (prod[j] == 0) continue;
      const auto& row = f.reduction_row(static_cast<int>(j));
      for (std::size_t t = 0; t < phi; ++t) {
        if (row[t] != 0) prod[t] += prod[j] * row[t];
      }
    }
    prod.resize(phi);
  }
  r.c_ = std::move(prod);
  r.trim();
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  *this = *this * o.inverse();
  return *this;
}

void CycNum::add_product(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(w)");
  if (is_rational()) return CycNum(mpq_class(1) / c_[0]);
  const CyclotomicField& f = *field_;
  // extended Euclid: track s with s * a == r (mod Phi_m)
  QPoly r0(f.modulus().begin(), f.modulus().end());
  QPoly r1 = c_;
  QPoly s0;
  QPoly s1 = {mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q;
    QPoly rem;
    poly_divmod(r0, r1, q, rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error("element shares a factor with Phi_m");
  const mpq_class scale = mpq_class(1) / r1[0];
  for (auto& v : s1) v *= scale;
  return CycNum(f, std::move(s1));
}

std::string CycNum::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[j].get_str();
    if (j == 1) out << "*w";
    if (j > 1) out << "*w^" << j;
  }
  return out.str();
}

CycNum CycNum::parse(const CyclotomicField& field, std::string_view text) {
  std::vector<mpq_class> coeffs;
  std::string s(text);
  auto fail = [&](const std::string& why) {
    throw ParseError("bad cyclotomic number '" + s + "': " + why);
  };
  std::size_t pos = 0;
  auto strip = [](std::string t) {
    const auto b = t.find_first_not_of(' ');
    const auto e = t.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = strip(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (term.empty()) fail("empty term");
    std::size_t exponent = 0;
    std::string coeff = term;
    if (const auto star = term.find("*w"); star != std::string::npos) {
      coeff = term.substr(0, star);
      const std::string tail = term.substr(star + 2);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail[0] == '^' && tail.size() > 1 &&
                 tail.find_first_not_of("0123456789", 1) == std::string::npos) {
        exponent = std::stoul(tail.substr(1));
      } else {
        fail("bad exponent");
      }
    }
    mpq_class v;
    if (coeff.empty() || v.set_str(coeff, 10) != 0) fail("bad coefficient '" + coeff + "'");
    if (v.get_den() == 0) fail("zero denominator");
    v.canonicalize();
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += v;
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  if (coeffs.size() == 1 && coeffs[0] == 0) coeffs.clear();
  return CycNum(field, std::move(coeffs));
}

}  // namespace ddm
