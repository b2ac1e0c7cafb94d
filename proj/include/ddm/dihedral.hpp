#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ddm {

/// x^a y^b in normal form: a in {0,1}, 0 <= b < m.
struct GroupElt {
  int a = 0;
  int b = 0;

  bool is_reflection() const noexcept { return a == 1; }
  friend auto operator<=>(const GroupElt&, const GroupElt&) = default;
};

/**
 * The dihedral group D_m = <x, y | x^2, y^m, xyxy> of order 2m.
 *
 * A small value type carrying the modulus. By default m must satisfy
 * m >= 12 and 4 | m; `unsafe` relaxes this to any even m >= 4.
 */
class Dihedral {
 public:
  explicit Dihedral(int m, bool unsafe = false);

  int m() const noexcept { return m_; }
  int n() const noexcept { return m_ / 2; }
  int order() const noexcept { return 2 * m_; }
  bool unsafe() const noexcept { return unsafe_; }

  GroupElt e() const { return {0, 0}; }
  GroupElt x() const { return {1, 0}; }
  GroupElt y(long long power = 1) const { return {0, wrap(power)}; }
  GroupElt elt(int a, long long b) const;

  GroupElt mul(const GroupElt& g, const GroupElt& h) const;
  GroupElt inv(const GroupElt& g) const;
  /// h g h^-1
  GroupElt conj(const GroupElt& g, const GroupElt& h) const;

  /// All elements: rotations y^0..y^{m-1}, then reflections xy^0..xy^{m-1}.
  std::vector<GroupElt> elements() const;
  /// Dense index in [0, 2m): a * m + b.
  int index(const GroupElt& g) const;

  std::vector<GroupElt> conjugacy_class(const GroupElt& g) const;
  std::vector<GroupElt> centralizer(const GroupElt& g) const;
  /// e, y^n, x, xy, y^1 .. y^{n-1}.
  std::vector<GroupElt> class_representatives() const;

  /// "e", "x", "y^3", "x*y^5" ("y" and "x*y" for exponent 1).
  std::string to_string(const GroupElt& g) const;
  GroupElt parse(std::string_view text) const;

  int wrap(long long b) const {
    long long r = b % m_;
    return static_cast<int>(r < 0 ? r + m_ : r);
  }

  friend bool operator==(const Dihedral& a, const Dihedral& b) { return a.m_ == b.m_; }

 private:
  void check(const GroupElt& g) const;

  int m_;
  bool unsafe_;
};

}  // namespace ddm
