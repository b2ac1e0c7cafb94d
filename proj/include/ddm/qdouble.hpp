#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ddm/linalg.hpp"
#include "ddm/nichols.hpp"
#include "ddm/weights.hpp"

namespace ddm {

/**
 * Finite-dimensional representation of D(M_I, D_m).
 *
 * Generators are numbered 0 = x, 1 = y, then 2 + 4p + {0: v+, 1: v-, 2: a+, 3: a-}
 * for pair p of the index set. Every basis vector carries a Z-degree and a
 * D_m-degree; all generator matrices map bigraded blocks to single blocks.
 */
struct QDModule {
  Dihedral group{12};
  IndexSet index;
  std::vector<std::string> basis;
  std::vector<int> zdeg;
  std::vector<GroupElt> gdeg;
  CycMatrix x;
  CycMatrix y;
  struct PairOps {
    CycMatrix vp, vm, ap, am;
  };
  std::vector<PairOps> ops;

  std::size_t dim() const noexcept { return gdeg.size(); }
  std::size_t generator_count() const noexcept { return 2 + 4 * ops.size(); }
  const CycMatrix& generator(std::size_t gen) const;
  const CycMatrix& v(std::size_t p, int eps) const { return eps > 0 ? ops[p].vp : ops[p].vm; }
  const CycMatrix& a(std::size_t p, int eps) const { return eps > 0 ? ops[p].ap : ops[p].am; }

  /// Underlying D(D_m)-module (forgets v, a and the Z-grading).
  DDModule restriction() const;
  /// The Z-degree-z component as a D(D_m)-module.
  DDModule layer(int z) const;
};

/// Per Z-degree multiplicities of weights, degrees descending.
struct GradedCharacter {
  struct Layer {
    int degree = 0;
    std::map<WeightLabel, std::size_t> summands;
    friend bool operator==(const Layer&, const Layer&) = default;
  };
  std::vector<Layer> layers;

  std::size_t dimension(const Dihedral& g) const;
  GradedCharacter shifted(int d) const;
  /// Adds `mult` copies of a weight in degree d, keeping layers sorted.
  void add(int degree, const WeightLabel& label, std::size_t mult = 1);
  void add(const GradedCharacter& other);
  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;
};

// --- Phi / Theta --------------------------------------------------------------

/// Matrix of Phi_{e1 e2} for pair (i, k) on a module given by its y-matrix
/// and D_m-degrees; e1, e2 are +1 or -1.
CycMatrix phi_matrix(const Dihedral& g, const CycMatrix& ymat, const std::vector<GroupElt>& deg,
                     int e1, int e2, const Pair& pair);
CycMatrix phi_matrix(const DDModule& mod, int e1, int e2, const Pair& pair);
CycMatrix phi_matrix(const QDModule& mod, int e1, int e2, const Pair& pair);
/// Theta = -Phi++ Phi-- + Phi+- Phi-+.
CycMatrix theta_matrix(const DDModule& mod, const Pair& pair);
CycMatrix theta_matrix(const QDModule& mod, const Pair& pair);

CycVector phi_action(int e1, int e2, const Pair& pair, const DDModule& mod, const CycVector& v);
CycVector phi_action(int e1, int e2, const Pair& pair, const QDModule& mod, const CycVector& v);
CycVector theta_action(const Pair& pair, const DDModule& mod, const CycVector& v);

// --- Verma modules ---------------------------------------------------------------

/// Basis bookkeeping of a Verma module: (monomial, weight index) pairs,
/// ordered by monomial length, then bitmask, then weight index.
class VermaBasis {
 public:
  VermaBasis(const IndexSet& I, std::size_t weight_dim);

  std::size_t size() const noexcept { return monos_.size() * wdim_; }
  std::size_t index(ExtMonomial mono, std::size_t j) const { return pos_.at(mono) * wdim_ + j; }
  ExtMonomial monomial(std::size_t idx) const { return monos_[idx / wdim_]; }
  std::size_t weight_index(std::size_t idx) const { return idx % wdim_; }
  std::size_t weight_dim() const noexcept { return wdim_; }

 private:
  std::size_t wdim_;
  std::vector<ExtMonomial> monos_;
  std::map<ExtMonomial, std::size_t> pos_;
};

/// a_eps^{(p)} applied to the basis vector mono (x) m_j of a Verma module,
/// commuting a past the leading letters; phi[p] holds the four Phi matrices
/// (++, +-, -+, --) of pair p on the whole Verma module.
CycVector alpha_rewrite(const VermaBasis& basis, const std::vector<std::array<CycMatrix, 4>>& phi,
                        int eps, std::size_t p, ExtMonomial mono, std::size_t j);

QDModule build_verma(const Dihedral& g, const IndexSet& I, const DDModule& lambda);
QDModule build_verma(const Dihedral& g, const IndexSet& I, const WeightLabel& lambda);

// --- relations -------------------------------------------------------------------

struct RelationReport {
  bool ok = true;
  std::string failure;  ///< first violated relation
  std::size_t checked = 0;
};

RelationReport check_relations(const QDModule& mod);
/// (a+ a-)(v+ v-) agrees with Theta on the Z-degree-0 columns, for pair p.
bool theta_congruence(const QDModule& verma, std::size_t p);

// --- graded subspaces --------------------------------------------------------------

/// Bigraded blocks (Z-degree, D_m-degree) of a module, with the local
/// matrices of every generator between blocks.
class BlockIndex {
 public:
  struct Block {
    int z;
    GroupElt g;
    std::vector<std::size_t> idx;
  };
  struct LocalMap {
    int target = -1;  ///< -1 when the generator kills the block
    CycMatrix mat;
  };

  explicit BlockIndex(const QDModule& mod);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  std::size_t local_of(std::size_t i) const { return local_of_[i]; }
  int find(int z, const GroupElt& g) const;
  const LocalMap& map(std::size_t gen, std::size_t block) const {
    return maps_[gen * blocks_.size() + block];
  }
  std::size_t generator_count() const noexcept { return gens_; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> local_of_;
  std::vector<LocalMap> maps_;
  std::size_t gens_ = 0;
};

/// A bigraded subspace: one row-reduced span per block, in local coordinates.
struct GradedSubspace {
  std::vector<SpanBuilder> spans;
  std::size_t dim() const;
  /// Basis vectors in global coordinates.
  std::vector<CycVector> basis(const BlockIndex& blocks, std::size_t ambient) const;
};

/// Joint kernel of all a-generators on Z-degree d, as homogeneous global vectors.
std::vector<CycVector> highest_weight_vectors(const QDModule& mod, const BlockIndex& blocks, int d);
std::vector<CycVector> highest_weight_vectors(const QDModule& mod, int d);

/// Smallest invariant subspace containing the vectors. Each vector must be
/// Z-homogeneous; it is split into D_m-homogeneous components.
GradedSubspace submodule_generated(const QDModule& mod, const BlockIndex& blocks,
                                   const std::vector<CycVector>& vectors);

/// M / S with the complement basis of non-pivot coordinates in every block.
QDModule quotient(const QDModule& mod, const BlockIndex& blocks, const GradedSubspace& sub);
/// S as a module in its own right, basis = the row-reduced block bases.
QDModule restrict_to(const QDModule& mod, const BlockIndex& blocks, const GradedSubspace& sub);

GradedCharacter graded_character(const QDModule& mod);

/// Simple top of a module generated in Z-degree 0 by a single weight.
/// Throws CertificateError if the result is not certified simple.
QDModule head(const QDModule& mod);

struct SocleResult {
  int degree = 0;            ///< Z-degree of the generating highest weight
  WeightLabel weight;        ///< the weight found there
  GradedSubspace subspace;
  QDModule module;
  GradedCharacter character;
};

/// Submodule generated by the highest weight of minimum Z-degree.
/// Throws CertificateError if that highest-weight space is not a single weight.
SocleResult socle(const QDModule& mod);

/// Underlying space Ext(M_{i,k}) (x) L over I u {(i,k)}; L must be simple.
QDModule induce_from_simple(const QDModule& L, const Pair& pair);

/// A (x) B via the coproducts of v and a.
QDModule tensor_qd(const QDModule& a, const QDModule& b);

/// Module over D(M_I, D_m) on which v and a act by zero: a weight in Z-degree 0.
QDModule rigid_module(const Dihedral& g, const IndexSet& I, const DDModule& lambda);

}  // namespace ddm
