#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddm/qdouble.hpp"

namespace ddm {

enum class WeightClass { Rigid, Projective, Other };

char class_letter(WeightClass c);

/// Case table for the zone of a weight with respect to M_{i,k}.
WeightClass classify_weight(const Dihedral& g, const WeightLabel& label, const Pair& pair);

/// The same classification read off the action of the Phi and Theta operators on
/// the weight. Returns nullopt when the action fits none of the three patterns.
std::optional<WeightClass> classify_oracle(const Dihedral& g, const WeightLabel& label,
                                           const Pair& pair);

struct IndexSplit {
  IndexSet rigid;
  IndexSet projective;
};

/// Throws DomainError for weights M_{r,s,t}.
IndexSplit split_index(const Dihedral& g, const IndexSet& I, const WeightLabel& label);

/// How the s-index of M_{r,s,t} moves along a subset J of I when J holds pairs (n, l).
enum class EpsilonRule {
  /// s + l_J + eps_J with l_J the integer sum and eps_J = [l_J != 0]
  IntegerSum,
  /// s + l_J + (number of pairs (n, l) in J)
  PairCount,
};

GradedCharacter predicted_character(const Dihedral& g, const IndexSet& I, const WeightLabel& label,
                                    EpsilonRule rule = EpsilonRule::IntegerSum);

/// Decomposition of M_{i,k} (x) M_{r,s,t} predicted in closed form: (N+ label, N- label).
std::pair<WeightLabel, WeightLabel> mik_tensor_mrst(const Dihedral& g, int i, int k,
                                                    const WeightLabel& mrst_label);

struct TensorLemmaReport {
  bool decomposition_ok = false;
  bool n_plus_ok = false;
  bool n_minus_ok = false;
  std::string detail;
  bool ok() const { return decomposition_ok && n_plus_ok && n_minus_ok; }
};

/// Compares decompose(M_{i,k} (x) M_{r,s,t}) with mik_tensor_mrst and checks that
/// w^{rk} m- (x) m0 +- m+ (x) m_i lies in the N+- summand.
TensorLemmaReport check_mik_tensor(const Dihedral& g, int i, int k, const WeightLabel& mrst_label);

struct SimpleReport {
  WeightLabel weight;
  std::optional<WeightClass> zone;  ///< set for singletons
  std::size_t verma_dim = 0;
  std::size_t head_dim = 0;
  GradedCharacter head;
  GradedCharacter predicted;
  int socle_degree = 0;
  WeightLabel socle_weight;
  GradedCharacter socle;
  bool relations_ok = true;
  bool theta_ok = true;
  bool head_ok = true;
  bool socle_ok = true;
  bool recursion_ok = true;
  std::vector<std::string> failures;
  std::size_t modules_checked = 0;
  /// Pairs p for which the socle of the module induced from the head over I \ {p}
  /// already equals the socle; informational only.
  std::size_t literal_socle_matches = 0;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  bool recursion = true;
  EpsilonRule rule = EpsilonRule::IntegerSum;
};

/// Computes head and socle of the Verma module by brute force and compares them with
/// the closed forms. Failures are collected in the report, never thrown.
SimpleReport verify_simple(const Dihedral& g, const IndexSet& I, const WeightLabel& label,
                           const VerifyOptions& options = {});

struct RigidTensorReport {
  GradedCharacter computed;
  GradedCharacter expected;
  bool relations_ok = false;
  bool top_only = false;  ///< highest-weight vectors only in Z-degree 0
  bool ok() const { return relations_ok && top_only && computed == expected; }
};

/// L(mu) (x) L(lambda) for mu rigid with respect to every pair of I.
RigidTensorReport check_rigid_tensor(const Dihedral& g, const IndexSet& I, const WeightLabel& mu,
                                     const WeightLabel& lambda);

bool is_spherical(const IndexSet& I);

/// chi_j evaluated on x^a y^b.
int chi_value(int j, const GroupElt& h);

/// y^n composed with chi_j on degrees.
CycMatrix pivot_matrix(const QDModule& mod, int j);

struct PivotReport {
  std::array<bool, 4> candidate_ok{};  ///< chi_1 .. chi_4
  bool involutive = true;
  bool any() const { return candidate_ok[0] || candidate_ok[1] || candidate_ok[2] || candidate_ok[3]; }
};

/// Tests P Z P = -Z on all v and a generators for the four candidates P = y^n chi_j.
PivotReport pivot_check(const QDModule& mod);

/// Trace of y^n chi_3. Throws DomainError for non-spherical index sets.
CycNum quantum_dimension(const QDModule& mod);

}  // namespace ddm
