#include "ddm/weights.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

const CycNum& omega(const Dihedral& g, long long e) { return cyc_power(g.m(), e); }

DDModule make_module(const Dihedral& g, std::size_t dim) {
  DDModule mod;
  mod.group = g;
  mod.x = CycMatrix(dim, dim);
  mod.y = CycMatrix(dim, dim);
  mod.degree.assign(dim, g.e());
  mod.basis.resize(dim);
  return mod;
}

DDModule one_dim(const Dihedral& g, int j, const GroupElt& deg, const std::string& name) {
  if (j < 1 || j > 4) throw DomainError("chi index must be in 1..4");
  DDModule mod = make_module(g, 1);
  mod.x(0, 0) = CycNum((j == 2 || j == 4) ? -1 : 1);
  mod.y(0, 0) = CycNum((j == 3 || j == 4) ? -1 : 1);
  mod.degree[0] = deg;
  mod.basis[0] = name;
  return mod;
}

DDModule two_dim(const Dihedral& g, long long k, const GroupElt& deg_plus, const GroupElt& deg_minus,
                 const std::string& name) {
  DDModule mod = make_module(g, 2);
  mod.x(1, 0) = CycNum(1);
  mod.x(0, 1) = CycNum(1);
  mod.y(0, 0) = omega(g, k);
  mod.y(1, 1) = omega(g, -k);
  mod.degree = {deg_plus, deg_minus};
  mod.basis = {name + "+", name + "-"};
  return mod;
}

DDModule reflection_module(const Dihedral& g, int r, int s, int t) {
  const int n = g.n();
  const auto dim = static_cast<std::size_t>(n);
  const long long sigma = s == 0 ? 1 : -1;
  const long long tau = t == 0 ? 1 : -1;
  DDModule mod = make_module(g, dim);
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    mod.degree[uj] = g.elt(1, 2LL * j + r);
    mod.basis[uj] = "m" + std::to_string(j);
    if (j == 0) {
      mod.y(dim - 1, 0) = CycNum(tau);
    } else {
      mod.y(uj - 1, uj) = CycNum(1);
    }
    if (r == 0) {
      if (j == 0) {
        mod.x(0, 0) = CycNum(sigma);
      } else {
        mod.x(static_cast<std::size_t>(n - j), uj) = CycNum(sigma * tau);
      }
    } else {
      mod.x(static_cast<std::size_t>(n - j - 1), uj) = CycNum(sigma * tau);
    }
  }
  return mod;
}

// Smallest subgroup containing gens, by closure under multiplication.
std::set<GroupElt> generated(const Dihedral& g, const std::vector<GroupElt>& gens) {
  std::set<GroupElt> sub = {g.e()};
  std::deque<GroupElt> queue = {g.e()};
  while (!queue.empty()) {
    const GroupElt h = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      const GroupElt p = g.mul(h, s);
      if (sub.insert(p).second) queue.push_back(p);
    }
  }
  return sub;
}

// Applies x^a y^b to a vector by repeated matrix-vector products.
CycVector act(const DDModule& mod, const GroupElt& h, CycVector v) {
  for (int t = 0; t < h.b; ++t) v = mod.y.apply(v);
  if (h.a == 1) v = mod.x.apply(v);
  return v;
}

}  // namespace

WeightLabel mrst(long long r, long long s, long long t) {
  return mod2(r) == 0 ? WeightLabel::mx(mod2(s), mod2(t)) : WeightLabel::mxy(mod2(s), mod2(t));
}

WeightLabel unified_mik(const Dihedral& g, int i, long long k) {
  const int n = g.n();
  const int kk = g.wrap(k);
  if (i < 1 || i > n) throw DomainError("M_{i,k} needs 1 <= i <= n");
  if (i < n) return WeightLabel::mik(i, kk);
  if (kk == 0 || kk == n) throw DomainError("M(y^n, rho_k) is reducible for k = 0, n");
  return WeightLabel::yn_rho(kk < n ? kk : g.m() - kk);
}

void validate_label(const Dihedral& g, const WeightLabel& label) {
  const int n = g.n();
  auto bad = [&](const std::string& why) { throw DomainError("invalid weight label: " + why); };
  switch (label.family) {
    case Family::EChi:
    case Family::YnChi:
      if (label.p < 1 || label.p > 4) bad("chi index must be 1..4");
      break;
    case Family::ERho:
    case Family::YnRho:
      if (label.p < 1 || label.p > n - 1) bad("rho index must be 1..n-1");
      break;
    case Family::Mik:
      if (label.p < 1 || label.p > n - 1) bad("M_{i,k} needs 1 <= i <= n-1");
      if (label.q < 0 || label.q > g.m() - 1) bad("M_{i,k} needs 0 <= k <= m-1");
      break;
    case Family::Mx:
    case Family::Mxy:
      if (label.p < 0 || label.p > 1 || label.q < 0 || label.q > 1) bad("s, t must be 0 or 1");
      break;
  }
}

std::string check_dd(const DDModule& mod) {
  const Dihedral& g = mod.group;
  const std::size_t d = mod.dim();
  if (mod.x.rows() != d || mod.x.cols() != d || mod.y.rows() != d || mod.y.cols() != d) {
    return "matrix shape does not match the dimension";
  }
  if (!(mod.x * mod.x).is_identity()) return "x^2 != 1";
  if (!matrix_power(mod.y, static_cast<unsigned>(g.m())).is_identity()) return "y^m != 1";
  if (!(mod.x * mod.y * mod.x * mod.y).is_identity()) return "xyxy != 1";
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!mod.x(i, j).is_zero() && mod.degree[i] != g.conj(mod.degree[j], g.x())) {
        return "x does not conjugate degrees";
      }
      if (!mod.y(i, j).is_zero() && mod.degree[i] != g.conj(mod.degree[j], g.y())) {
        return "y does not conjugate degrees";
      }
    }
  }
  return {};
}

CycMatrix group_action(const DDModule& mod, const GroupElt& h) {
  CycMatrix r = matrix_power(mod.y, static_cast<unsigned>(h.b));
  if (h.a == 1) r = mod.x * r;
  return r;
}

DDModule build_weight(const Dihedral& g, const WeightLabel& label) {
  validate_label(g, label);
  const GroupElt yn = g.y(g.n());
  switch (label.family) {
    case Family::EChi:
      return one_dim(g, label.p, g.e(), "u" + std::to_string(label.p));
    case Family::YnChi:
      return one_dim(g, label.p, yn, "u" + std::to_string(label.p) + ",n");
    case Family::ERho:
      return two_dim(g, label.p, g.e(), g.e(), "m");
    case Family::YnRho:
      return two_dim(g, label.p, yn, yn, "m");
    case Family::Mik:
      return build_mik(g, label.p, label.q);
    case Family::Mx:
      return reflection_module(g, 0, label.p, label.q);
    case Family::Mxy:
      return reflection_module(g, 1, label.p, label.q);
  }
  throw DomainError("unknown weight family");
}

DDModule build_mik(const Dihedral& g, int i, long long k) {
  if (i < 1 || i > g.n()) throw DomainError("M_{i,k} needs 1 <= i <= n");
  return two_dim(g, k, g.y(i), g.y(-i), "m");
}

DDModule direct_sum(const std::vector<DDModule>& parts) {
  if (parts.empty()) throw DimensionError("direct sum of no modules");
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p.dim();
  DDModule out = make_module(parts.front().group, dim);
  std::size_t off = 0;
  for (const auto& p : parts) {
    if (!(p.group == out.group)) throw DomainError("direct sum over different moduli");
    for (std::size_t i = 0; i < p.dim(); ++i) {
      out.degree[off + i] = p.degree[i];
      out.basis[off + i] = p.basis[i];
      for (std::size_t j = 0; j < p.dim(); ++j) {
        out.x(off + i, off + j) = p.x(i, j);
        out.y(off + i, off + j) = p.y(i, j);
      }
    }
    off += p.dim();
  }
  return out;
}

DDModule tensor_dd(const DDModule& a, const DDModule& b) {
  if (!(a.group == b.group)) throw DomainError("tensor product over different moduli");
  DDModule out;
  out.group = a.group;
  out.x = kronecker(a.x, b.x);
  out.y = kronecker(a.y, b.y);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out.degree.push_back(a.group.mul(a.degree[i], b.degree[j]));
      out.basis.push_back(a.basis[i] + "*" + b.basis[j]);
    }
  }
  return out;
}

DDModule restrict_dd(const DDModule& mod, const std::vector<CycVector>& vectors) {
  const Dihedral& g = mod.group;
  std::map<GroupElt, SpanBuilder> spans;
  for (const auto& v : vectors) {
    std::optional<GroupElt> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (deg && *deg != mod.degree[i]) throw DimensionError("restrict_dd needs homogeneous vectors");
      deg = mod.degree[i];
    }
    if (!deg) continue;
    spans.try_emplace(*deg, mod.dim()).first->second.insert(v);
  }
  std::vector<std::pair<GroupElt, std::size_t>> order;  // (degree, row) per new basis vector
  std::map<GroupElt, std::size_t> offset;
  std::size_t dim = 0;
  for (const auto& [deg, span] : spans) {
    offset[deg] = dim;
    for (std::size_t r = 0; r < span.size(); ++r) order.emplace_back(deg, r);
    dim += span.size();
  }
  DDModule out = make_module(g, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto& [deg, r] = order[c];
    out.degree[c] = deg;
    out.basis[c] = "b" + std::to_string(c);
    const CycVector& v = spans.at(deg).rows()[r];
    for (int which = 0; which < 2; ++which) {
      const CycVector w = (which == 0 ? mod.x : mod.y).apply(v);
      const GroupElt target = g.conj(deg, which == 0 ? g.x() : g.y());
      auto it = spans.find(target);
      if (it == spans.end()) {
        if (!is_zero_vector(w)) throw DimensionError("restrict_dd: subspace is not invariant");
        continue;
      }
      if (!is_zero_vector(it->second.reduce(w))) {
        throw DimensionError("restrict_dd: subspace is not invariant");
      }
      const CycVector coords = it->second.coordinates(w);
      CycMatrix& target_mat = which == 0 ? out.x : out.y;
      for (std::size_t t = 0; t < coords.size(); ++t) target_mat(offset[target] + t, c) = coords[t];
    }
  }
  return out;
}

std::vector<CycMatrix> hom_space(const DDModule& a, const DDModule& b) {
  if (!(a.group == b.group)) throw DomainError("hom_space over different moduli");
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t c = 0; c < da; ++c) {
      if (b.degree[r] == a.degree[c]) unknowns.emplace_back(r, c);
    }
  }
  if (unknowns.empty()) return {};
  // equations (F X_A - X_B F)(r, c) = 0, then the same for y
  CycMatrix eq(2 * db * da, unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [r0, c0] = unknowns[u];
    for (int which = 0; which < 2; ++which) {
      const CycMatrix& ma = which == 0 ? a.x : a.y;
      const CycMatrix& mb = which == 0 ? b.x : b.y;
      const std::size_t base = static_cast<std::size_t>(which) * db * da;
      for (std::size_t c = 0; c < da; ++c) {
        if (!ma(c0, c).is_zero()) eq(base + r0 * da + c, u) += ma(c0, c);
      }
      for (std::size_t r = 0; r < db; ++r) {
        if (!mb(r, r0).is_zero()) eq(base + r * da + c0, u) -= mb(r, r0);
      }
    }
  }
  std::vector<CycMatrix> basis;
  for (const auto& v : mat_kernel(eq)) {
    CycMatrix f(db, da);
    for (std::size_t u = 0; u < unknowns.size(); ++u) f(unknowns[u].first, unknowns[u].second) = v[u];
    basis.push_back(std::move(f));
  }
  return basis;
}

bool is_isomorphic(const DDModule& a, const DDModule& b) {
  if (a.dim() != b.dim()) return false;
  std::vector<GroupElt> da = a.degree;
  std::vector<GroupElt> db = b.degree;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  const auto hom = hom_space(a, b);
  if (hom.empty()) return a.dim() == 0;
  if (hom.size() == 1) return mat_rank(hom.front()) == a.dim();
  return decompose_multiplicities(a) == decompose_multiplicities(b);
}

std::map<WeightLabel, std::size_t> Decomposition::multiplicities() const {
  std::map<WeightLabel, std::size_t> out;
  for (const auto& p : parts) out[p.label] = p.mult();
  return out;
}

Decomposition decompose(const DDModule& mod) {
  const Catalog& cat = Catalog::get(mod.group);
  Decomposition out;
  std::map<GroupElt, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < mod.dim(); ++i) by_degree[mod.degree[i]].push_back(i);
  std::map<GroupElt, CycMatrix> actions;
  auto action = [&](const GroupElt& h) -> const CycMatrix& {
    auto it = actions.find(h);
    if (it == actions.end()) it = actions.emplace(h, group_action(mod, h)).first;
    return it->second;
  };
  std::size_t covered = 0;
  for (const auto& entry : cat.entries()) {
    const GroupElt g0 = entry.module.degree[0];
    auto it = by_degree.find(g0);
    if (it == by_degree.end()) continue;
    const auto& idx = it->second;
    const std::size_t k = idx.size();
    CycMatrix eq(entry.stabilizer_gens.size() * k, k);
    for (std::size_t s = 0; s < entry.stabilizer_gens.size(); ++s) {
      const CycMatrix& act_s = action(entry.stabilizer_gens[s]);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          CycNum v = act_s(idx[r], idx[c]);
          if (r == c) v -= entry.character[s];
          eq(s * k + r, c) = std::move(v);
        }
      }
    }
    const auto kernel = mat_kernel(eq);
    if (kernel.empty()) continue;
    DecompositionPart part{entry.label, {}};
    for (const auto& w_local : kernel) {
      const std::size_t dl = entry.module.dim();
      std::vector<CycVector> images(dl);
      images[0] = CycVector(mod.dim());
      for (std::size_t r = 0; r < k; ++r) images[0][idx[r]] = w_local[r];
      std::vector<bool> done(dl, false);
      done[0] = true;
      const auto fill = [&](auto&& self, std::size_t j) -> void {
        if (done[j]) return;
        const auto& step = entry.steps[j];
        self(self, step.parent);
        CycVector v = (step.gen == 0 ? mod.x : mod.y).apply(images[step.parent]);
        const CycNum inv = step.scale.inverse();
        for (auto& c : v) {
          if (!c.is_zero()) c = c * inv;
        }
        images[j] = std::move(v);
        done[j] = true;
      };
      for (std::size_t j = 1; j < dl; ++j) fill(fill, j);
      part.embeddings.push_back(CycMatrix::from_columns(mod.dim(), images));
    }
    covered += part.mult() * entry.module.dim();
    out.parts.push_back(std::move(part));
  }
  if (covered != mod.dim()) {
    throw DecompositionError("weights cover dimension " + std::to_string(covered) + " of " +
                             std::to_string(mod.dim()));
  }
  // the embedded images must span every homogeneous component
  for (const auto& [deg, idx] : by_degree) {
    std::vector<CycVector> cols;
    for (const auto& part : out.parts) {
      const auto& entry = cat.entry(part.label);
      for (const auto& emb : part.embeddings) {
        for (std::size_t j = 0; j < entry.module.dim(); ++j) {
          if (entry.module.degree[j] != deg) continue;
          CycVector c(idx.size());
          for (std::size_t r = 0; r < idx.size(); ++r) c[r] = emb(idx[r], j);
          cols.push_back(std::move(c));
        }
      }
    }
    if (cols.size() != idx.size() || mat_rank(CycMatrix::from_columns(idx.size(), cols)) != idx.size()) {
      throw DecompositionError("embedded weights do not span degree " + mod.group.to_string(deg));
    }
  }
  return out;
}

std::map<WeightLabel, std::size_t> decompose_multiplicities(const DDModule& mod) {
  return decompose(mod).multiplicities();
}

// ---------------------------------------------------------------------------

Catalog::Catalog(const Dihedral& g) {
  const int n = g.n();
  std::vector<WeightLabel> labels;
  for (int j = 1; j <= 4; ++j) labels.push_back(WeightLabel::e_chi(j));
  for (int l = 1; l < n; ++l) labels.push_back(WeightLabel::e_rho(l));
  for (int j = 1; j <= 4; ++j) labels.push_back(WeightLabel::yn_chi(j));
  for (int l = 1; l < n; ++l) labels.push_back(WeightLabel::yn_rho(l));
  for (int i = 1; i < n; ++i) {
    for (int k = 0; k < g.m(); ++k) labels.push_back(WeightLabel::mik(i, k));
  }
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) labels.push_back(WeightLabel::mx(s, t));
  }
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) labels.push_back(WeightLabel::mxy(s, t));
  }

  for (const auto& label : labels) {
    Entry e;
    e.label = label;
    e.module = build_weight(g, label);
    if (auto err = check_dd(e.module); !err.empty()) {
      throw CertificateError("weight fails the module axioms: " + err);
    }
    const std::size_t d = e.module.dim();
    CycVector u0(d);
    u0[0] = CycNum(1);
    std::vector<GroupElt> stab;
    std::vector<CycNum> chars;
    for (const auto& h : g.elements()) {
      const CycVector v = act(e.module, h, u0);
      bool line = true;
      for (std::size_t i = 1; i < d; ++i) line = line && v[i].is_zero();
      if (line) {
        stab.push_back(h);
        chars.push_back(v[0]);
      }
    }
    if (stab.size() * d != static_cast<std::size_t>(g.order())) {
      throw CertificateError("weight basis vector 0 does not induce the module");
    }
    std::vector<GroupElt> gens;
    std::set<GroupElt> sub = {g.e()};
    for (std::size_t t = 0; t < stab.size(); ++t) {
      if (sub.count(stab[t])) continue;
      gens.push_back(stab[t]);
      e.character.push_back(chars[t]);
      sub = generated(g, gens);
    }
    e.stabilizer_gens = std::move(gens);
    e.steps.assign(d, Entry::Step{0, 0, CycNum(1)});
    std::vector<bool> seen(d, false);
    seen[0] = true;
    std::deque<std::size_t> queue = {0};
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      for (int gen = 0; gen < 2; ++gen) {
        const CycMatrix& mat = gen == 0 ? e.module.x : e.module.y;
        for (std::size_t j = 0; j < d; ++j) {
          if (mat(j, p).is_zero() || seen[j]) continue;
          seen[j] = true;
          e.steps[j] = Entry::Step{p, gen, mat(j, p)};
          queue.push_back(j);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw CertificateError("weight is not generated by basis vector 0");
    }
    index_[label] = entries_.size();
    entries_.push_back(std::move(e));
  }

  // labels with identical degree data must still be pairwise non-isomorphic
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    for (std::size_t b = a + 1; b < entries_.size(); ++b) {
      const DDModule& ma = entries_[a].module;
      const DDModule& mb = entries_[b].module;
      if (ma.dim() != mb.dim() || ma.degree[0] != mb.degree[0]) continue;
      if (!hom_space(ma, mb).empty()) {
        throw CertificateError("catalog labels are isomorphic: entries " + std::to_string(a) +
                               " and " + std::to_string(b));
      }
    }
  }
}

const Catalog& Catalog::get(const Dihedral& g) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Catalog>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[g.m()];
  if (!slot) slot = std::make_unique<Catalog>(g);
  return *slot;
}

const Catalog::Entry& Catalog::entry(const WeightLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw DomainError("label not in catalog");
  return entries_[it->second];
}

std::vector<WeightLabel> Catalog::labels() const {
  std::vector<WeightLabel> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

}  // namespace ddm
