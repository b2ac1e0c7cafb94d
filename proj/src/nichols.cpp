#include "ddm/nichols.hpp"

#include <algorithm>
#include <bit>

#include "ddm/errors.hpp"

namespace ddm {

IndexSet IndexSet::without(std::size_t p) const {
  IndexSet out = *this;
  out.pairs_.erase(out.pairs_.begin() + static_cast<std::ptrdiff_t>(p));
  return out;
}

IndexSet IndexSet::subset(const std::vector<std::size_t>& positions) const {
  IndexSet out;
  out.m_ = m_;
  for (std::size_t p : positions) out.pairs_.push_back(pairs_.at(p));
  return out;
}

IndexSet validate_index_set(const Dihedral& g, std::vector<Pair> pairs) {
  const int m = g.m();
  const int n = g.n();
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const Pair& p = pairs[s];
    if (p.i < 1 || p.i > n || p.k < 0 || p.k > m - 1) {
      throw IndexSetError("pair (" + std::to_string(p.i) + "," + std::to_string(p.k) +
                              ") out of range 1 <= i <= n, 0 <= k <= m-1",
                          static_cast<int>(s) + 1, 0);
    }
  }
  if (2 * pairs.size() > 32) throw DomainError("index sets are limited to 16 pairs");
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const long long prod = static_cast<long long>(pairs[s].i) * pairs[t].k;
      if (prod % m != n) {
        throw IndexSetError("cross condition fails at (s,t)=(" + std::to_string(s + 1) + "," +
                                std::to_string(t + 1) + "): " + std::to_string(pairs[s].i) + "*" +
                                std::to_string(pairs[t].k) + " != " + std::to_string(n) + " mod " +
                                std::to_string(m),
                            static_cast<int>(s) + 1, static_cast<int>(t) + 1);
      }
    }
  }
  IndexSet out;
  out.m_ = m;
  out.pairs_ = std::move(pairs);
  return out;
}

std::optional<std::pair<int, ExtMonomial>> ext_multiply(ExtMonomial m1, ExtMonomial m2) {
  if ((m1 & m2) != 0) return std::nullopt;
  // each letter of m2 passes over the letters of m1 that are larger than it
  int crossings = 0;
  for (ExtMonomial rest = m2; rest != 0; rest &= rest - 1) {
    const int letter = std::countr_zero(rest);
    const ExtMonomial above = letter >= 31 ? 0U : (~ExtMonomial{0} << (letter + 1));
    crossings += std::popcount(m1 & above);
  }
  return std::make_pair(crossings % 2 == 0 ? 1 : -1, m1 | m2);
}

std::vector<ExtMonomial> nichols_basis(const IndexSet& I, int d) {
  const int letters = static_cast<int>(2 * I.size());
  if (d < 0 || d > letters) throw DomainError("degree outside [0, 2|I|]");
  std::vector<ExtMonomial> out;
  for (ExtMonomial mono = 0; mono < (ExtMonomial{1} << letters); ++mono) {
    if (std::popcount(mono) == d) out.push_back(mono);
  }
  return out;
}

GroupElt monomial_degree(const Dihedral& g, const IndexSet& I, ExtMonomial mono) {
  long long b = 0;
  for (ExtMonomial rest = mono; rest != 0; rest &= rest - 1) {
    const int letter = std::countr_zero(rest);
    const int i = I[static_cast<std::size_t>(letter_pair(letter))].i;
    b += letter_is_plus(letter) ? i : -i;
  }
  return g.y(b);
}

std::pair<int, ExtMonomial> monomial_x(ExtMonomial mono, std::size_t pairs) {
  ExtMonomial out = 0;
  int sign = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    const ExtMonomial plus = ExtMonomial{1} << (2 * p);
    const ExtMonomial minus = plus << 1;
    const bool has_plus = (mono & plus) != 0;
    const bool has_minus = (mono & minus) != 0;
    if (has_plus) out |= minus;
    if (has_minus) out |= plus;
    if (has_plus && has_minus) sign = -sign;
  }
  return {sign, out};
}

long long monomial_y_exponent(const IndexSet& I, ExtMonomial mono) {
  long long e = 0;
  for (ExtMonomial rest = mono; rest != 0; rest &= rest - 1) {
    const int letter = std::countr_zero(rest);
    const int k = I[static_cast<std::size_t>(letter_pair(letter))].k;
    e += letter_is_plus(letter) ? k : -k;
  }
  return e;
}

DDModule exterior_power(const Dihedral& g, const IndexSet& I, int d) {
  const auto basis = nichols_basis(I, d);
  const std::size_t dim = basis.size();
  DDModule mod;
  mod.group = g;
  mod.x = CycMatrix(dim, dim);
  mod.y = CycMatrix(dim, dim);
  std::map<ExtMonomial, std::size_t> pos;
  for (std::size_t c = 0; c < dim; ++c) pos[basis[c]] = c;
  for (std::size_t c = 0; c < dim; ++c) {
    const ExtMonomial mono = basis[c];
    const auto [sign, image] = monomial_x(mono, I.size());
    mod.x(pos.at(image), c) = CycNum(sign);
    mod.y(c, c) = cyc_power(g.m(), monomial_y_exponent(I, mono));
    mod.degree.push_back(monomial_degree(g, I, mono));
    mod.basis.push_back("v" + std::to_string(mono));
  }
  return mod;
}

WeightLabel volume_weight(const Dihedral& g, const IndexSet& I) {
  if (I.size() != 1) throw DomainError("volume_weight needs a singleton index set");
  const auto dec = decompose(exterior_power(g, I, 2));
  if (dec.parts.size() != 1 || dec.parts[0].mult() != 1) {
    throw DecompositionError("volume element is not a single weight");
  }
  return dec.parts[0].label;
}

}  // namespace ddm
