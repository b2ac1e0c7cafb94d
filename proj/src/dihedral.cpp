#include "ddm/dihedral.hpp"

#include <algorithm>
#include <charconv>

#include "ddm/errors.hpp"

namespace ddm {

Dihedral::Dihedral(int m, bool unsafe) : m_(m), unsafe_(unsafe) {
  if (unsafe) {
    if (m < 4 || m % 2 != 0) {
      throw DomainError("m must be even and >= 4, got " + std::to_string(m));
    }
  } else if (m < 12 || m % 4 != 0) {
    throw DomainError("m must be >= 12 and divisible by 4 (use the unsafe flag to relax), got " +
                      std::to_string(m));
  }
}

void Dihedral::check(const GroupElt& g) const {
  if (g.a < 0 || g.a > 1 || g.b < 0 || g.b >= m_) {
    throw DomainError("group element (" + std::to_string(g.a) + "," + std::to_string(g.b) +
                      ") is not in normal form for m=" + std::to_string(m_));
  }
}

GroupElt Dihedral::elt(int a, long long b) const {
  if (a != 0 && a != 1) throw DomainError("x exponent must be 0 or 1");
  return {a, wrap(b)};
}

GroupElt Dihedral::mul(const GroupElt& g, const GroupElt& h) const {
  check(g);
  check(h);
  // y^b x^c = x^c y^{(-1)^c b}
  const int b = h.a == 0 ? g.b : -g.b;
  return {(g.a + h.a) % 2, wrap(static_cast<long long>(b) + h.b)};
}

GroupElt Dihedral::inv(const GroupElt& g) const {
  check(g);
  if (g.a == 1) return g;
  return {0, wrap(-static_cast<long long>(g.b))};
}

GroupElt Dihedral::conj(const GroupElt& g, const GroupElt& h) const {
  return mul(mul(h, g), inv(h));
}

std::vector<GroupElt> Dihedral::elements() const {
  std::vector<GroupElt> out;
  out.reserve(static_cast<std::size_t>(2 * m_));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < m_; ++b) out.push_back({a, b});
  }
  return out;
}

int Dihedral::index(const GroupElt& g) const {
  check(g);
  return g.a * m_ + g.b;
}

std::vector<GroupElt> Dihedral::conjugacy_class(const GroupElt& g) const {
  std::vector<GroupElt> out;
  for (const auto& h : elements()) out.push_back(conj(g, h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElt> Dihedral::centralizer(const GroupElt& g) const {
  std::vector<GroupElt> out;
  for (const auto& h : elements()) {
    if (mul(g, h) == mul(h, g)) out.push_back(h);
  }
  return out;
}

std::vector<GroupElt> Dihedral::class_representatives() const {
  std::vector<GroupElt> reps = {e(), y(n()), x(), elt(1, 1)};
  for (int i = 1; i < n(); ++i) reps.push_back(y(i));
  return reps;
}

std::string Dihedral::to_string(const GroupElt& g) const {
  check(g);
  std::string out;
  if (g.a == 1) out = "x";
  if (g.b != 0) {
    if (!out.empty()) out += "*";
    out += "y";
    if (g.b != 1) out += "^" + std::to_string(g.b);
  }
  return out.empty() ? "e" : out;
}

GroupElt Dihedral::parse(std::string_view text) const {
  const std::string s(text);
  auto fail = [&]() -> GroupElt { throw ParseError("bad group element '" + s + "'"); };
  if (s == "e") return e();
  std::string_view rest = text;
  int a = 0;
  if (!rest.empty() && rest.front() == 'x') {
    a = 1;
    rest.remove_prefix(1);
    if (rest.empty()) return x();
    if (rest.front() != '*') return fail();
    rest.remove_prefix(1);
  }
  if (rest.empty() || rest.front() != 'y') return fail();
  rest.remove_prefix(1);
  long long b = 1;
  if (!rest.empty()) {
    if (rest.front() != '^' || rest.size() < 2) return fail();
    rest.remove_prefix(1);
    const auto* end = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars(rest.data(), end, b);
    if (ec != std::errc() || ptr != end) return fail();
    if (b < 0 || b >= m_) throw ParseError("exponent out of range in '" + s + "'");
  }
  return {a, static_cast<int>(b)};
}

}  // namespace ddm
