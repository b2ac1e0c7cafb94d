#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "ddm/errors.hpp"
#include "ddm/serialize.hpp"
#include "ddm/theorems.hpp"

using namespace ddm;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

std::vector<Pair> valid_pairs(const Dihedral& g) {
  std::vector<Pair> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int k = 0; k < g.m(); ++k) {
      if ((i * k) % g.m() == g.n()) out.push_back({i, k});
    }
  }
  return out;
}

bool rigid_everywhere(const Dihedral& g, const IndexSet& I, const WeightLabel& l) {
  if (l.is_mrst()) return false;
  for (const auto& p : I.pairs()) {
    if (classify_weight(g, l, p) != WeightClass::Rigid) return false;
  }
  return true;
}

// relations and theta congruence results collected from every sweep
std::size_t g_modules = 0;
std::size_t g_relation_failures = 0;

void absorb(const SimpleReport& r) {
  g_modules += r.modules_checked;
  if (!r.relations_ok || !r.theta_ok) ++g_relation_failures;
}

Outcome catalog() {
  const Dihedral g(12);
  const Catalog cat(g);
  Outcome out;
  std::set<GroupElt> classes;
  std::size_t sq = 0;
  for (const auto& e : cat.entries()) {
    sq += e.module.dim() * e.module.dim();
    for (const auto& r : g.class_representatives()) {
      const auto cls = g.conjugacy_class(r);
      if (std::find(cls.begin(), cls.end(), e.module.degree[0]) != cls.end()) classes.insert(r);
    }
  }
  std::size_t iso = 0;
  const auto& es = cat.entries();
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      if (!hom_space(es[a].module, es[b].module).empty()) ++iso;
    }
  }
  out.ok = es.size() == 86 && classes.size() == 9 && sq == 576 && iso == 0;
  out.note = std::to_string(es.size()) + " labels over " + std::to_string(classes.size()) + " classes, sum dim^2 = " +
             std::to_string(sq) + ", isomorphic pairs " + std::to_string(iso);
  return out;
}

Outcome tensor_lemma() {
  Outcome out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  for (int m : {12, 16}) {
    const Dihedral g(m);
    for (const auto& p : valid_pairs(g)) {
      for (int c = 0; c < 8; ++c) {
        ++cases;
        const auto rep = check_mik_tensor(g, p.i, p.k, mrst(c >> 2, (c >> 1) & 1, c & 1));
        if (!rep.ok()) ++bad;
      }
    }
  }
  out.ok = bad == 0;
  out.note = std::to_string(cases - bad) + "/" + std::to_string(cases) + " (i,k) x M_{r,s,t} cases";
  return out;
}

Outcome table_oracle() {
  Outcome out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  for (int m : {12, 16}) {
    const Dihedral g(m);
    for (const auto& p : valid_pairs(g)) {
      for (const auto& l : Catalog::get(g).labels()) {
        ++cases;
        const auto o = classify_oracle(g, l, p);
        if (!o || *o != classify_weight(g, l, p)) ++bad;
      }
    }
  }
  out.ok = bad == 0;
  out.note = std::to_string(cases - bad) + "/" + std::to_string(cases) + " weight x pair cases";
  return out;
}

Outcome singletons() {
  const Dihedral g(12);
  Outcome out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  for (const auto& pairs : {std::vector<Pair>{{2, 3}}, std::vector<Pair>{{1, 6}}}) {
    const IndexSet I = validate_index_set(g, pairs);
    for (const auto& l : Catalog::get(g).labels()) {
      ++cases;
      const SimpleReport r = verify_simple(g, I, l);
      absorb(r);
      bool ok = r.ok();
      const std::size_t wdim = build_weight(g, l).dim();
      if (r.zone == WeightClass::Rigid) ok = ok && r.head_dim == wdim;
      if (r.zone == WeightClass::Projective) ok = ok && r.head_dim == 4 * wdim && r.head_dim == r.verma_dim;
      if (r.zone == WeightClass::Other) ok = ok && r.head_dim == 12 && r.socle_degree == -1;
      if (!ok) {
        ++bad;
        std::cerr << "  criterion 4: " << index_set_to_string(I) << " " << label_to_string(l) << "\n";
      }
    }
  }
  out.ok = bad == 0;
  out.note = std::to_string(cases - bad) + "/" + std::to_string(cases) + " weights";
  return out;
}

std::vector<std::pair<IndexSet, SimpleReport>> g_two_pair;

Outcome two_pairs() {
  const Dihedral g(12);
  Outcome out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  bool mixed_seen = false;
  bool other_seen = true;
  for (const auto& pairs : {std::vector<Pair>{{1, 6}, {3, 6}}, std::vector<Pair>{{2, 3}, {2, 9}}}) {
    const IndexSet I = validate_index_set(g, pairs);
    for (const auto& l : Catalog::get(g).labels()) {
      ++cases;
      SimpleReport r = verify_simple(g, I, l);
      absorb(r);
      const bool ok = r.head_ok && r.socle_ok && r.relations_ok && r.theta_ok;
      if (l == WeightLabel::mik(1, 2) && I == validate_index_set(g, {{1, 6}, {3, 6}})) {
        mixed_seen = ok && r.head_dim == 8;
      }
      if (l.is_mrst()) other_seen = other_seen && ok && r.head_dim == 24;
      if (!ok) {
        ++bad;
        std::cerr << "  criterion 5: " << index_set_to_string(I) << " " << label_to_string(l) << "\n";
      }
      g_two_pair.emplace_back(I, std::move(r));
    }
  }
  out.ok = bad == 0 && mixed_seen && other_seen;
  out.note = std::to_string(cases - bad) + "/" + std::to_string(cases) + " weights; M1,2 dim 8 " +
             (mixed_seen ? "ok" : "FAILED") + "; M_{r,s,t} dim 24 " + (other_seen ? "ok" : "FAILED");
  return out;
}

Outcome recursion() {
  Outcome out;
  std::size_t bad = 0;
  for (const auto& [I, r] : g_two_pair) {
    if (!r.recursion_ok) {
      ++bad;
      std::cerr << "  criterion 6: " << index_set_to_string(I) << " " << label_to_string(r.weight) << "\n";
    }
  }
  out.ok = bad == 0 && !g_two_pair.empty();
  out.note = std::to_string(g_two_pair.size() - bad) + "/" + std::to_string(g_two_pair.size()) +
             " cases, heads and socles through both removable pairs";
  return out;
}

Outcome rigid_tensor() {
  const Dihedral g(12);
  Outcome out;
  std::size_t cases = 0;
  std::size_t bad = 0;
  const std::vector<WeightLabel> lambdas = {WeightLabel::mx(0, 0),  WeightLabel::mxy(1, 1), WeightLabel::e_rho(3),
                                            WeightLabel::mik(1, 2), WeightLabel::e_chi(3),  WeightLabel::yn_chi(1)};
  for (const auto& pairs : {std::vector<Pair>{{2, 3}}, std::vector<Pair>{{1, 6}}}) {
    const IndexSet I = validate_index_set(g, pairs);
    for (const auto& mu : Catalog::get(g).labels()) {
      if (!rigid_everywhere(g, I, mu)) continue;
      for (const auto& l : lambdas) {
        ++cases;
        const auto rep = check_rigid_tensor(g, I, mu, l);
        ++g_modules;
        if (!rep.relations_ok) ++g_relation_failures;
        if (!rep.ok()) {
          ++bad;
          std::cerr << "  criterion 7: " << label_to_string(mu) << " (x) " << label_to_string(l) << "\n";
        }
      }
    }
  }
  out.ok = bad == 0 && cases >= 10;
  out.note = std::to_string(cases - bad) + "/" + std::to_string(cases) + " (rigid mu, lambda) pairs";
  return out;
}

Outcome relations() {
  Outcome out;
  out.ok = g_relation_failures == 0 && g_modules > 0;
  out.note = std::to_string(g_modules) + " modules checked, " + std::to_string(g_relation_failures) + " failures";
  return out;
}

Outcome spherical() {
  Outcome out;
  std::size_t sets = 0;
  std::size_t bad = 0;
  for (int m : {12, 16}) {
    const Dihedral g(m);
    for (const auto& p : valid_pairs(g)) {
      ++sets;
      const IndexSet I = validate_index_set(g, {p});
      bool pivot_everywhere = true;
      bool some_without_pivot = false;
      for (const auto& l : Catalog::get(g).labels()) {
        const PivotReport r = pivot_check(build_verma(g, I, l));
        pivot_everywhere = pivot_everywhere && r.candidate_ok[2] && r.involutive;
        some_without_pivot = some_without_pivot || !r.any();
      }
      const bool agree = is_spherical(I) ? pivot_everywhere : some_without_pivot;
      if (!agree) {
        ++bad;
        std::cerr << "  criterion 9: m=" << m << " " << index_set_to_string(I) << "\n";
      }
    }
  }
  const Dihedral g(12);
  std::size_t qd_bad = 0;
  std::size_t qd_cases = 0;
  for (const auto& pairs : {std::vector<Pair>{{2, 3}}, std::vector<Pair>{{1, 6}}}) {
    const IndexSet I = validate_index_set(g, pairs);
    for (const auto& l : Catalog::get(g).labels()) {
      ++qd_cases;
      const CycNum q = quantum_dimension(head(build_verma(g, I, l)));
      if (q.is_zero() == rigid_everywhere(g, I, l)) ++qd_bad;
    }
  }
  out.ok = bad == 0 && qd_bad == 0;
  out.note = std::to_string(sets - bad) + "/" + std::to_string(sets) + " singletons agree with the pivot; " +
             std::to_string(qd_cases - qd_bad) + "/" + std::to_string(qd_cases) + " quantum dimensions";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "weight catalog at m=12", 5, catalog},
      {2, "M_{i,k} (x) M_{r,s,t} decompositions and vectors n+-", 30, tensor_lemma},
      {3, "zone table against the Phi/Theta oracle", 60, table_oracle},
      {4, "singleton index sets, all weights", 120, singletons},
      {5, "two-pair index sets, all weights", 600, two_pairs},
      {6, "induction coherence of heads and socles", 600, recursion},
      {7, "tensor products with rigid simples", 120, rigid_tensor},
      {8, "defining relations and Theta congruence", 1e9, relations},
      {9, "sphericality and quantum dimensions", 60, spherical},
  };
  bool all = true;
  double five_seconds = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // criterion 6 reuses the criterion 5 sweep and shares its budget
    if (c.id == 5) five_seconds = secs;
    if (c.id == 6) secs += five_seconds;
    const bool in_time = secs <= c.limit;
    const bool pass = o.ok && in_time;
    all = all && pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " - " << o.note << " ("
         << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit < 1e8) line << ", limit " << c.limit << " s";
    line << ")" << (in_time ? "" : " over time limit");
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
