#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ddm/dihedral.hpp"
#include "ddm/linalg.hpp"

namespace ddm {

enum class Family { EChi, ERho, YnChi, YnRho, Mik, Mx, Mxy };

/**
 * Label of a simple D(D_m)-module.
 *
 * p and q hold the family parameters: j for EChi/YnChi, l for ERho/YnRho,
 * (i, k) for Mik and (s, t) for Mx/Mxy. The defaulted ordering is the
 * catalog order used for all printed output.
 */
struct WeightLabel {
  Family family = Family::EChi;
  int p = 1;
  int q = 0;

  static WeightLabel e_chi(int j) { return {Family::EChi, j, 0}; }
  static WeightLabel e_rho(int l) { return {Family::ERho, l, 0}; }
  static WeightLabel yn_chi(int j) { return {Family::YnChi, j, 0}; }
  static WeightLabel yn_rho(int l) { return {Family::YnRho, l, 0}; }
  static WeightLabel mik(int i, int k) { return {Family::Mik, i, k}; }
  static WeightLabel mx(int s, int t) { return {Family::Mx, s, t}; }
  static WeightLabel mxy(int s, int t) { return {Family::Mxy, s, t}; }

  bool is_mrst() const noexcept { return family == Family::Mx || family == Family::Mxy; }

  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

/// M_{r,s,t} with all indices read mod 2: Mx for r even, Mxy for r odd.
WeightLabel mrst(long long r, long long s, long long t);

/// The unified M_{i,k} for 1 <= i <= n: Mik for i < n,
/// and M(y^n, rho_k) rewritten to its canonical YnRho label for i = n.
WeightLabel unified_mik(const Dihedral& g, int i, long long k);

/// Throws DomainError when a parameter is outside its range for this m.
void validate_label(const Dihedral& g, const WeightLabel& label);

/// Explicit D(D_m)-module: x and y matrices plus a D_m-degree per basis vector.
struct DDModule {
  Dihedral group{12};
  std::vector<std::string> basis;
  CycMatrix x;
  CycMatrix y;
  std::vector<GroupElt> degree;

  std::size_t dim() const noexcept { return degree.size(); }
};

/// Empty string when the group relations and grading compatibility hold,
/// otherwise a description of the first failure.
std::string check_dd(const DDModule& mod);

/// Matrix of the group element g = x^a y^b acting on mod.
CycMatrix group_action(const DDModule& mod, const GroupElt& g);

DDModule build_weight(const Dihedral& g, const WeightLabel& label);

/// M_{i,k} built literally from the parameters, 1 <= i <= n and any k:
/// basis (m+, m-) in degrees (y^i, y^-i), x swapping, y = diag(w^k, w^-k).
/// For i = n this is M(y^n, rho_k) without relabelling.
DDModule build_mik(const Dihedral& g, int i, long long k);

/// Direct sum of modules over the same group.
DDModule direct_sum(const std::vector<DDModule>& parts);

/// A (x) B with diagonal x, y and degree deg(a) deg(b); index a * dim B + b.
DDModule tensor_dd(const DDModule& a, const DDModule& b);

/// The D(D_m)-submodule spanned by an invariant homogeneous basis `vectors`.
DDModule restrict_dd(const DDModule& mod, const std::vector<CycVector>& vectors);

/// Basis of all degree-preserving linear maps A -> B commuting with x and y,
/// each returned as a dim B x dim A matrix.
std::vector<CycMatrix> hom_space(const DDModule& a, const DDModule& b);

bool is_isomorphic(const DDModule& a, const DDModule& b);

struct DecompositionPart {
  WeightLabel label;
  /// One injective intertwiner label -> M (dim M x dim label) per copy.
  std::vector<CycMatrix> embeddings;
  std::size_t mult() const noexcept { return embeddings.size(); }
};

struct Decomposition {
  std::vector<DecompositionPart> parts;  ///< catalog order
  std::map<WeightLabel, std::size_t> multiplicities() const;
};

/// Splits a module into catalog weights with explicit embeddings.
/// Throws DecompositionError if the embedded images do not span M.
Decomposition decompose(const DDModule& mod);
/// Multiplicities only (same computation, embeddings discarded).
std::map<WeightLabel, std::size_t> decompose_multiplicities(const DDModule& mod);

/// Catalog of all simple D(D_m)-modules together with the data used to
/// compute multiplicities by Frobenius reciprocity.
class Catalog {
 public:
  struct Entry {
    WeightLabel label;
    DDModule module;
    /// The line spanned by basis vector 0 is stable under `stabilizer`,
    /// acting there by `character`; the module is induced from it.
    std::vector<GroupElt> stabilizer_gens;
    std::vector<CycNum> character;
    /// For j > 0: gen * b_parent = scale * b_j with gen = x (0) or y (1).
    struct Step {
      std::size_t parent;
      int gen;
      CycNum scale;
    };
    std::vector<Step> steps;
  };

  /// Shared catalog for this modulus; built once and never mutated.
  static const Catalog& get(const Dihedral& g);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry& entry(const WeightLabel& label) const;
  std::vector<WeightLabel> labels() const;

  explicit Catalog(const Dihedral& g);

 private:
  std::vector<Entry> entries_;
  std::map<WeightLabel, std::size_t> index_;
};

}  // namespace ddm
