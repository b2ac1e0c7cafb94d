#include "ddm/theorems.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ddm/errors.hpp"
#include "ddm/serialize.hpp"

namespace ddm {

namespace {

bool root_is_one(const Dihedral& g, long long e) { return ((e % g.m()) + g.m()) % g.m() == 0; }

std::string character_text(const GradedCharacter& c) {
  std::string out;
  for (const auto& layer : c.layers) {
    out += "[" + std::to_string(layer.degree) + "]";
    for (const auto& [label, mult] : layer.summands) {
      out += " " + (mult > 1 ? std::to_string(mult) + "*" : "") + label_to_string(label);
    }
    out += ";";
  }
  return out;
}

// (r, s, t) of a weight M_{r,s,t}
std::array<int, 3> rst(const WeightLabel& label) {
  return {label.family == Family::Mx ? 0 : 1, label.p, label.q};
}

bool layers_have_hw_below_zero(const QDModule& mod) {
  const BlockIndex blocks(mod);
  std::set<int> degrees(mod.zdeg.begin(), mod.zdeg.end());
  for (int z : degrees) {
    if (z < 0 && !highest_weight_vectors(mod, blocks, z).empty()) return true;
  }
  return false;
}

}  // namespace

char class_letter(WeightClass c) {
  switch (c) {
    case WeightClass::Rigid:
      return 'R';
    case WeightClass::Projective:
      return 'P';
    case WeightClass::Other:
      return 'O';
  }
  return '?';
}

WeightClass classify_weight(const Dihedral& g, const WeightLabel& label, const Pair& pair) {
  const int i = pair.i;
  const int k = pair.k;
  const auto rigid_if = [](bool r) { return r ? WeightClass::Rigid : WeightClass::Projective; };
  switch (label.family) {
    case Family::EChi:
      return rigid_if(label.p <= 2 || i % 2 == 0);
    case Family::ERho:
      return rigid_if(root_is_one(g, static_cast<long long>(i) * label.p));
    case Family::YnChi:
      return rigid_if(label.p <= 2 ? k % 2 == 0 : (i + k) % 2 == 0);
    case Family::YnRho:
      return rigid_if(root_is_one(g, static_cast<long long>(i) * label.p + static_cast<long long>(g.n()) * k));
    case Family::Mik:
      return rigid_if(root_is_one(g, static_cast<long long>(i) * label.q + static_cast<long long>(label.p) * k));
    case Family::Mx:
    case Family::Mxy:
      return WeightClass::Other;
  }
  throw DomainError("unknown weight family");
}

std::optional<WeightClass> classify_oracle(const Dihedral& g, const WeightLabel& label,
                                           const Pair& pair) {
  const DDModule mod = build_weight(g, label);
  const CycMatrix pp = phi_matrix(mod, 1, 1, pair);
  const CycMatrix pm = phi_matrix(mod, 1, -1, pair);
  const CycMatrix mp = phi_matrix(mod, -1, 1, pair);
  const CycMatrix mm = phi_matrix(mod, -1, -1, pair);
  if (!pm.is_zero() || !mp.is_zero()) return WeightClass::Other;
  if (pp.is_zero() && mm.is_zero()) return WeightClass::Rigid;
  if (!theta_matrix(mod, pair).is_zero()) return WeightClass::Projective;
  return std::nullopt;
}

IndexSplit split_index(const Dihedral& g, const IndexSet& I, const WeightLabel& label) {
  if (label.is_mrst()) throw DomainError("split_index is undefined for weights M_{r,s,t}");
  std::vector<std::size_t> rigid;
  std::vector<std::size_t> projective;
  for (std::size_t p = 0; p < I.size(); ++p) {
    (classify_weight(g, label, I[p]) == WeightClass::Rigid ? rigid : projective).push_back(p);
  }
  return {I.subset(rigid), I.subset(projective)};
}

GradedCharacter predicted_character(const Dihedral& g, const IndexSet& I, const WeightLabel& label,
                                    EpsilonRule rule) {
  GradedCharacter out;
  if (!label.is_mrst()) {
    const IndexSplit split = split_index(g, I, label);
    const DDModule lambda = build_weight(g, label);
    for (int d = 0; d <= static_cast<int>(2 * split.projective.size()); ++d) {
      const DDModule layer = tensor_dd(exterior_power(g, split.projective, d), lambda);
      for (const auto& [lab, mult] : decompose_multiplicities(layer)) out.add(-d, lab, mult);
    }
    return out;
  }
  const auto [r, s, t] = rst(label);
  const std::size_t count = I.size();
  for (std::uint32_t mask = 0; mask < (1U << count); ++mask) {
    long long iJ = 0;
    long long kJ = 0;
    long long lJ = 0;
    long long nJ = 0;
    for (std::size_t p = 0; p < count; ++p) {
      if (((mask >> p) & 1U) == 0) continue;
      iJ += I[p].i;
      kJ += I[p].k;
      if (I[p].i == g.n()) {
        lJ += I[p].k;
        ++nJ;
      }
    }
    const long long eps = rule == EpsilonRule::IntegerSum ? (lJ != 0 ? 1 : 0) : nJ;
    const long long sJ = s + lJ + eps;
    out.add(-std::popcount(mask), mrst(r + iJ, sJ, t + kJ));
  }
  return out;
}

std::pair<WeightLabel, WeightLabel> mik_tensor_mrst(const Dihedral& g, int i, int k,
                                                    const WeightLabel& mrst_label) {
  const auto [r, s, t] = rst(mrst_label);
  const int delta = i == g.n() ? t : 0;
  return {mrst(r + i, s + 1 + delta, t + k), mrst(r + i, s + delta, t + k)};
}

TensorLemmaReport check_mik_tensor(const Dihedral& g, int i, int k, const WeightLabel& mrst_label) {
  TensorLemmaReport rep;
  const DDModule a = build_mik(g, i, k);
  const DDModule b = build_weight(g, mrst_label);
  const DDModule prod = tensor_dd(a, b);
  const auto dec = decompose(prod);
  const auto [plus, minus] = mik_tensor_mrst(g, i, k, mrst_label);
  std::map<WeightLabel, std::size_t> expected{{plus, 1}, {minus, 1}};
  rep.decomposition_ok = dec.multiplicities() == expected;
  if (!rep.decomposition_ok) {
    rep.detail = "decomposition differs";
    return rep;
  }
  const auto [r, s, t] = rst(mrst_label);
  (void)s;
  (void)t;
  const std::size_t n = static_cast<std::size_t>(g.n());
  const std::size_t db = b.dim();
  const CycNum scale = cyc_power(g.m(), static_cast<long long>(r) * k);
  for (int sign : {1, -1}) {
    CycVector v(prod.dim());
    v[1 * db + 0] = scale;
    v[0 * db + static_cast<std::size_t>(i) % n] += CycNum(sign);
    const WeightLabel& target = sign > 0 ? plus : minus;
    bool inside = false;
    for (const auto& part : dec.parts) {
      if (!(part.label == target)) continue;
      std::vector<CycVector> cols;
      for (std::size_t c = 0; c < part.embeddings[0].cols(); ++c) cols.push_back(part.embeddings[0].column(c));
      const std::size_t base = mat_rank(CycMatrix::from_columns(prod.dim(), cols));
      cols.push_back(v);
      inside = mat_rank(CycMatrix::from_columns(prod.dim(), cols)) == base;
    }
    (sign > 0 ? rep.n_plus_ok : rep.n_minus_ok) = inside;
  }
  if (!rep.n_plus_ok) rep.detail += "n+ outside its summand;";
  if (!rep.n_minus_ok) rep.detail += "n- outside its summand;";
  return rep;
}

SimpleReport verify_simple(const Dihedral& g, const IndexSet& I, const WeightLabel& label,
                           const VerifyOptions& options) {
  SimpleReport rep;
  rep.weight = label;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    rep.failures.push_back(what);
  };
  auto relations = [&](const QDModule& mod, const std::string& name) {
    ++rep.modules_checked;
    const auto r = check_relations(mod);
    if (!r.ok) fail(rep.relations_ok, name + ": " + r.failure);
  };
  if (I.size() == 1) rep.zone = classify_weight(g, label, I[0]);

  const QDModule verma = build_verma(g, I, label);
  rep.verma_dim = verma.dim();
  relations(verma, "verma");
  for (std::size_t p = 0; p < I.size(); ++p) {
    if (!theta_congruence(verma, p)) fail(rep.theta_ok, "theta congruence fails for pair " + std::to_string(p + 1));
  }

  try {
    const QDModule h = head(verma);
    relations(h, "head");
    rep.head_dim = h.dim();
    rep.head = graded_character(h);
    rep.predicted = predicted_character(g, I, label, options.rule);
    if (!(rep.head == rep.predicted)) {
      fail(rep.head_ok, "head " + character_text(rep.head) + " predicted " + character_text(rep.predicted));
    }
    const std::size_t wdim = build_weight(g, label).dim();
    std::size_t expected_dim = 0;
    if (label.is_mrst()) {
      expected_dim = (std::size_t{1} << I.size()) * static_cast<std::size_t>(g.n());
    } else {
      expected_dim = (std::size_t{1} << (2 * split_index(g, I, label).projective.size())) * wdim;
    }
    if (rep.head_dim != expected_dim) {
      fail(rep.head_ok, "head dimension " + std::to_string(rep.head_dim) + " expected " +
                            std::to_string(expected_dim));
    }
  } catch (const Error& e) {
    fail(rep.head_ok, std::string("head: ") + e.what());
  }

  try {
    const SocleResult soc = socle(verma);
    relations(soc.module, "socle");
    rep.socle_degree = soc.degree;
    rep.socle_weight = soc.weight;
    rep.socle = soc.character;
    // the socle is the simple module of its lowest weight, shifted
    const GradedCharacter simple = predicted_character(g, I, soc.weight, options.rule).shifted(soc.degree);
    if (!(rep.socle == simple)) {
      fail(rep.socle_ok, "socle " + character_text(rep.socle) + " is not L(" + label_to_string(soc.weight) + ")");
    }
    if (label.is_mrst() && I.size() == 1) {
      const auto [r, s, t] = rst(label);
      GradedCharacter closed;
      closed.add(-1, mrst(r + I[0].i, s + 1, t + I[0].k));
      closed.add(-2, mrst(r, s + 1, t));
      if (!(rep.socle == closed)) {
        fail(rep.socle_ok, "socle " + character_text(rep.socle) + " closed form " + character_text(closed));
      }
    }
    if (!label.is_mrst() && split_index(g, I, label).rigid.empty() && soc.module.dim() != verma.dim()) {
      fail(rep.socle_ok, "projective Verma module has a proper socle");
    }
  } catch (const Error& e) {
    fail(rep.socle_ok, std::string("socle: ") + e.what());
  }

  if (options.recursion && I.size() > 1) {
    for (std::size_t p = 0; p < I.size(); ++p) {
      try {
        const QDModule inner = head(build_verma(g, I.without(p), label));
        const QDModule induced = induce_from_simple(inner, I[p]);
        relations(induced, "induced");
        const QDModule h = head(induced);
        relations(h, "induced head");
        if (!(graded_character(h) == rep.head)) {
          fail(rep.recursion_ok, "induced head differs for pair " + std::to_string(p + 1));
        }
        if (socle(induced).character == rep.socle) ++rep.literal_socle_matches;
        // socle of the module induced from the socle over the smaller index set
        const QDModule inner_socle = socle(build_verma(g, I.without(p), label)).module;
        const QDModule induced_socle = induce_from_simple(inner_socle, I[p]);
        relations(induced_socle, "induced socle");
        if (!(socle(induced_socle).character == rep.socle)) {
          fail(rep.recursion_ok, "induced socle differs for pair " + std::to_string(p + 1));
        }
      } catch (const Error& e) {
        fail(rep.recursion_ok, std::string("recursion: ") + e.what());
      }
    }
  }
  return rep;
}

RigidTensorReport check_rigid_tensor(const Dihedral& g, const IndexSet& I, const WeightLabel& mu,
                                     const WeightLabel& lambda) {
  for (const auto& p : I.pairs()) {
    if (classify_weight(g, mu, p) != WeightClass::Rigid) throw DomainError("mu is not rigid");
  }
  RigidTensorReport rep;
  const QDModule a = head(build_verma(g, I, mu));
  const QDModule b = head(build_verma(g, I, lambda));
  const QDModule prod = tensor_qd(a, b);
  rep.relations_ok = check_relations(prod).ok;
  rep.top_only = !layers_have_hw_below_zero(prod);
  rep.computed = graded_character(prod);
  const auto parts = decompose_multiplicities(tensor_dd(build_weight(g, mu), build_weight(g, lambda)));
  for (const auto& [label, mult] : parts) {
    const GradedCharacter c = predicted_character(g, I, label);
    for (std::size_t t = 0; t < mult; ++t) rep.expected.add(c);
  }
  return rep;
}

bool is_spherical(const IndexSet& I) {
  return std::none_of(I.pairs().begin(), I.pairs().end(),
                      [](const Pair& p) { return p.i % 2 == 0 && p.k % 2 == 0; });
}

int chi_value(int j, const GroupElt& h) {
  switch (j) {
    case 1:
      return 1;
    case 2:
      return h.a % 2 == 0 ? 1 : -1;
    case 3:
      return h.b % 2 == 0 ? 1 : -1;
    case 4:
      return (h.a + h.b) % 2 == 0 ? 1 : -1;
  }
  throw DomainError("chi index must be 1..4");
}

CycMatrix pivot_matrix(const QDModule& mod, int j) {
  CycMatrix diag(mod.dim(), mod.dim());
  for (std::size_t r = 0; r < mod.dim(); ++r) diag(r, r) = CycNum(chi_value(j, mod.gdeg[r]));
  return matrix_power(mod.y, static_cast<unsigned>(mod.group.n())) * diag;
}

PivotReport pivot_check(const QDModule& mod) {
  PivotReport rep;
  for (int j = 1; j <= 4; ++j) {
    const CycMatrix P = pivot_matrix(mod, j);
    const bool inv = (P * P).is_identity();
    if (!inv) rep.involutive = false;
    bool ok = inv;
    for (std::size_t gen = 2; ok && gen < mod.generator_count(); ++gen) {
      const CycMatrix& z = mod.generator(gen);
      ok = P * z * P == -z;
    }
    rep.candidate_ok[static_cast<std::size_t>(j - 1)] = ok;
  }
  return rep;
}

CycNum quantum_dimension(const QDModule& mod) {
  if (!is_spherical(mod.index)) throw DomainError("quantum dimension needs a spherical index set");
  const CycMatrix P = pivot_matrix(mod, 3);
  CycNum tr(0);
  for (std::size_t r = 0; r < mod.dim(); ++r) tr += P(r, r);
  return tr;
}

}  // namespace ddm
