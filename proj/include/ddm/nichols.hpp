#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ddm/dihedral.hpp"
#include "ddm/weights.hpp"

namespace ddm {

struct Pair {
  int i = 0;
  int k = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A validated, lexicographically sorted sequence of pairs (i, k) with
/// i_s * k_t == n (mod m) for all s, t. Repetitions are allowed.
class IndexSet {
 public:
  IndexSet() = default;

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const Pair& operator[](std::size_t p) const { return pairs_[p]; }
  int m() const noexcept { return m_; }

  /// The same sequence with position p removed.
  IndexSet without(std::size_t p) const;
  /// Sub-sequence at the given positions (kept in order).
  IndexSet subset(const std::vector<std::size_t>& positions) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.m_ == b.m_ && a.pairs_ == b.pairs_;
  }

 private:
  friend IndexSet validate_index_set(const Dihedral& g, std::vector<Pair> pairs);
  int m_ = 0;
  std::vector<Pair> pairs_;
};

/// Checks ranges and the cross condition, then sorts. Throws IndexSetError
/// naming the first failing ordered pair (1-based, in sorted order).
IndexSet validate_index_set(const Dihedral& g, std::vector<Pair> pairs);

/// Letter 2p is v+ of pair p, letter 2p+1 is v- of pair p.
/// A monomial is the bitmask of its letters; the word is read in increasing letter order.
using ExtMonomial = std::uint32_t;

inline int letter_pair(int letter) { return letter / 2; }
inline bool letter_is_plus(int letter) { return letter % 2 == 0; }

/// Product m1 * m2 as (sign, monomial), or nullopt when a letter repeats.
std::optional<std::pair<int, ExtMonomial>> ext_multiply(ExtMonomial m1, ExtMonomial m2);

/// All monomials with d letters over |I| pairs, in increasing bitmask order.
/// Throws DomainError for d outside [0, 2|I|].
std::vector<ExtMonomial> nichols_basis(const IndexSet& I, int d);

/// D_m-degree of a monomial: product of y^{+i} / y^{-i} over its letters.
GroupElt monomial_degree(const Dihedral& g, const IndexSet& I, ExtMonomial mono);

/// x . mono = sign * mono' (x swaps + and - within every pair).
std::pair<int, ExtMonomial> monomial_x(ExtMonomial mono, std::size_t pairs);
/// y . mono = w^e * mono; returns e.
long long monomial_y_exponent(const IndexSet& I, ExtMonomial mono);

/// The degree-d component of the exterior algebra as a D(D_m)-module,
/// basis in nichols_basis order.
DDModule exterior_power(const Dihedral& g, const IndexSet& I, int d);

/// The weight of the volume element v+ v- of a singleton, computed by decomposition.
WeightLabel volume_weight(const Dihedral& g, const IndexSet& I);

}  // namespace ddm
