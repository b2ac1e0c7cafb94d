#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "ddm/errors.hpp"
#include "ddm/qdouble.hpp"

namespace ddm {

namespace {

// Expected (z-shift, D_m-degree) image of a basis vector of degree g under gen.
std::pair<int, GroupElt> generator_target(const QDModule& mod, std::size_t gen, const GroupElt& g) {
  const Dihedral& grp = mod.group;
  if (gen == 0) return {0, grp.conj(g, grp.x())};
  if (gen == 1) return {0, grp.conj(g, grp.y())};
  const std::size_t p = (gen - 2) / 4;
  const int kind = static_cast<int>((gen - 2) % 4);
  const int i = mod.index[p].i;
  const int shift = (kind == 0 || kind == 3) ? i : -i;
  return {kind < 2 ? -1 : 1, grp.mul(grp.y(shift), g)};
}

QDModule empty_like(const QDModule& mod, std::size_t dim) {
  QDModule out;
  out.group = mod.group;
  out.index = mod.index;
  out.x = CycMatrix(dim, dim);
  out.y = CycMatrix(dim, dim);
  out.ops.assign(mod.ops.size(), QDModule::PairOps{CycMatrix(dim, dim), CycMatrix(dim, dim),
                                                    CycMatrix(dim, dim), CycMatrix(dim, dim)});
  return out;
}

CycMatrix& mutable_generator(QDModule& mod, std::size_t gen) {
  return const_cast<CycMatrix&>(static_cast<const QDModule&>(mod).generator(gen));
}

}  // namespace

BlockIndex::BlockIndex(const QDModule& mod) : gens_(mod.generator_count()) {
  std::map<std::pair<int, GroupElt>, std::size_t> key;
  // Z-degree descending, then D_m-degree
  std::vector<std::pair<int, GroupElt>> keys;
  for (std::size_t i = 0; i < mod.dim(); ++i) keys.emplace_back(-mod.zdeg[i], mod.gdeg[i]);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& k : keys) {
    key[k] = blocks_.size();
    blocks_.push_back(Block{-k.first, k.second, {}});
  }
  block_of_.resize(mod.dim());
  local_of_.resize(mod.dim());
  for (std::size_t i = 0; i < mod.dim(); ++i) {
    const std::size_t b = key.at({-mod.zdeg[i], mod.gdeg[i]});
    block_of_[i] = b;
    local_of_[i] = blocks_[b].idx.size();
    blocks_[b].idx.push_back(i);
  }
  maps_.resize(gens_ * blocks_.size());
  for (std::size_t gen = 0; gen < gens_; ++gen) {
    const CycMatrix& z = mod.generator(gen);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const auto [dz, g] = generator_target(mod, gen, blocks_[b].g);
      const int t = find(blocks_[b].z + dz, g);
      std::size_t inside = 0;
      LocalMap& lm = maps_[gen * blocks_.size() + b];
      if (t >= 0) {
        lm.target = t;
        lm.mat = z.submatrix(blocks_[static_cast<std::size_t>(t)].idx, blocks_[b].idx);
        inside = lm.mat.nonzeros();
      }
      std::size_t total = 0;
      for (std::size_t c : blocks_[b].idx) {
        for (std::size_t r = 0; r < mod.dim(); ++r) total += z(r, c).is_zero() ? 0 : 1;
      }
      if (total != inside) throw CertificateError("generator does not respect the bigrading");
      if (inside == 0) lm.target = -1;
    }
  }
}

int BlockIndex::find(int z, const GroupElt& g) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), std::make_pair(-z, g),
                             [](const Block& b, const std::pair<int, GroupElt>& k) {
                               return std::make_pair(-b.z, b.g) < k;
                             });
  if (it == blocks_.end() || it->z != z || it->g != g) return -1;
  return static_cast<int>(it - blocks_.begin());
}

std::size_t GradedSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& s : spans) d += s.size();
  return d;
}

std::vector<CycVector> GradedSubspace::basis(const BlockIndex& blocks, std::size_t ambient) const {
  std::vector<CycVector> out;
  for (std::size_t b = 0; b < spans.size(); ++b) {
    for (const auto& row : spans[b].rows()) {
      CycVector v(ambient);
      for (std::size_t l = 0; l < row.size(); ++l) v[blocks.blocks()[b].idx[l]] = row[l];
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<CycVector> highest_weight_vectors(const QDModule& mod, const BlockIndex& blocks, int d) {
  std::vector<CycVector> out;
  for (std::size_t b = 0; b < blocks.blocks().size(); ++b) {
    const auto& blk = blocks.blocks()[b];
    if (blk.z != d) continue;
    std::vector<CycVector> rows;
    for (std::size_t gen = 2; gen < blocks.generator_count(); ++gen) {
      if ((gen - 2) % 4 < 2) continue;
      const auto& lm = blocks.map(gen, b);
      if (lm.target < 0) continue;
      for (std::size_t r = 0; r < lm.mat.rows(); ++r) rows.push_back(lm.mat.row(r));
    }
    std::vector<CycVector> kernel;
    if (rows.empty()) {
      for (std::size_t l = 0; l < blk.idx.size(); ++l) {
        CycVector e(blk.idx.size());
        e[l] = CycNum(1);
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = mat_kernel(CycMatrix::from_rows(blk.idx.size(), rows));
    }
    for (const auto& k : kernel) {
      CycVector v(mod.dim());
      for (std::size_t l = 0; l < k.size(); ++l) v[blk.idx[l]] = k[l];
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<CycVector> highest_weight_vectors(const QDModule& mod, int d) {
  return highest_weight_vectors(mod, BlockIndex(mod), d);
}

GradedSubspace submodule_generated(const QDModule& mod, const BlockIndex& blocks,
                                   const std::vector<CycVector>& vectors) {
  GradedSubspace sub;
  for (const auto& blk : blocks.blocks()) sub.spans.emplace_back(blk.idx.size());
  std::deque<std::pair<std::size_t, CycVector>> work;
  auto push = [&](std::size_t b, const CycVector& local) {
    if (sub.spans[b].insert(local)) work.emplace_back(b, local);
  };
  for (const auto& v : vectors) {
    if (v.size() != mod.dim()) throw DimensionError("generating vector has the wrong length");
    std::optional<int> z;
    std::map<std::size_t, CycVector> parts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (z && *z != mod.zdeg[i]) throw DomainError("generating vectors must be Z-homogeneous");
      z = mod.zdeg[i];
      const std::size_t b = blocks.block_of(i);
      auto& part = parts.try_emplace(b, CycVector(blocks.blocks()[b].idx.size())).first->second;
      part[blocks.local_of(i)] = v[i];
    }
    for (const auto& [b, local] : parts) push(b, local);
  }
  while (!work.empty()) {
    auto [b, v] = std::move(work.front());
    work.pop_front();
    for (std::size_t gen = 0; gen < blocks.generator_count(); ++gen) {
      const auto& lm = blocks.map(gen, b);
      if (lm.target < 0) continue;
      CycVector w = lm.mat.apply(v);
      if (!is_zero_vector(w)) push(static_cast<std::size_t>(lm.target), w);
    }
  }
  return sub;
}

QDModule quotient(const QDModule& mod, const BlockIndex& blocks, const GradedSubspace& sub) {
  const auto& blks = blocks.blocks();
  // complement basis: local indices that are not pivots of the subspace
  std::vector<std::vector<std::size_t>> keep(blks.size());
  std::vector<std::vector<long>> new_index(blks.size());
  std::size_t dim = 0;
  for (std::size_t b = 0; b < blks.size(); ++b) {
    std::vector<bool> pivot(blks[b].idx.size(), false);
    for (std::size_t p : sub.spans[b].pivots()) pivot[p] = true;
    new_index[b].assign(blks[b].idx.size(), -1);
    for (std::size_t l = 0; l < blks[b].idx.size(); ++l) {
      if (pivot[l]) continue;
      keep[b].push_back(l);
      new_index[b][l] = static_cast<long>(dim++);
    }
  }
  QDModule out = empty_like(mod, dim);
  for (std::size_t b = 0; b < blks.size(); ++b) {
    for (std::size_t l : keep[b]) {
      out.zdeg.push_back(blks[b].z);
      out.gdeg.push_back(blks[b].g);
      out.basis.push_back(mod.basis[blks[b].idx[l]]);
    }
  }
  for (std::size_t b = 0; b < blks.size(); ++b) {
    for (std::size_t l : keep[b]) {
      const auto col = static_cast<std::size_t>(new_index[b][l]);
      for (std::size_t gen = 0; gen < blocks.generator_count(); ++gen) {
        const auto& lm = blocks.map(gen, b);
        if (lm.target < 0) continue;
        const auto t = static_cast<std::size_t>(lm.target);
        const CycVector w = sub.spans[t].reduce(lm.mat.column(l));
        CycMatrix& target = mutable_generator(out, gen);
        for (std::size_t r = 0; r < w.size(); ++r) {
          if (w[r].is_zero()) continue;
          if (new_index[t][r] < 0) throw CertificateError("quotient by a non-invariant subspace");
          target(static_cast<std::size_t>(new_index[t][r]), col) = w[r];
        }
      }
    }
  }
  return out;
}

QDModule restrict_to(const QDModule& mod, const BlockIndex& blocks, const GradedSubspace& sub) {
  const auto& blks = blocks.blocks();
  std::vector<std::size_t> offset(blks.size());
  std::size_t dim = 0;
  for (std::size_t b = 0; b < blks.size(); ++b) {
    offset[b] = dim;
    dim += sub.spans[b].size();
  }
  QDModule out = empty_like(mod, dim);
  for (std::size_t b = 0; b < blks.size(); ++b) {
    for (std::size_t r = 0; r < sub.spans[b].size(); ++r) {
      out.zdeg.push_back(blks[b].z);
      out.gdeg.push_back(blks[b].g);
      out.basis.push_back("s" + std::to_string(offset[b] + r));
    }
  }
  for (std::size_t b = 0; b < blks.size(); ++b) {
    for (std::size_t r = 0; r < sub.spans[b].size(); ++r) {
      const CycVector& row = sub.spans[b].rows()[r];
      for (std::size_t gen = 0; gen < blocks.generator_count(); ++gen) {
        const auto& lm = blocks.map(gen, b);
        if (lm.target < 0) continue;
        const auto t = static_cast<std::size_t>(lm.target);
        const CycVector w = lm.mat.apply(row);
        if (is_zero_vector(w)) continue;
        if (!sub.spans[t].contains(w)) throw CertificateError("restriction to a non-invariant subspace");
        const CycVector coords = sub.spans[t].coordinates(w);
        CycMatrix& target = mutable_generator(out, gen);
        for (std::size_t s = 0; s < coords.size(); ++s) {
          if (!coords[s].is_zero()) target(offset[t] + s, offset[b] + r) = coords[s];
        }
      }
    }
  }
  return out;
}

GradedCharacter graded_character(const QDModule& mod) {
  std::set<int, std::greater<>> degrees(mod.zdeg.begin(), mod.zdeg.end());
  GradedCharacter out;
  for (int z : degrees) {
    for (const auto& [label, mult] : decompose_multiplicities(mod.layer(z))) out.add(z, label, mult);
  }
  return out;
}

QDModule head(const QDModule& mod) {
  QDModule cur = mod;
  const std::size_t max_passes = 2 * mod.index.size() + 2;
  for (std::size_t pass = 0;; ++pass) {
    const BlockIndex blocks(cur);
    std::set<int> degrees(cur.zdeg.begin(), cur.zdeg.end());
    std::vector<CycVector> hw;
    for (int z : degrees) {
      if (z >= 0) continue;
      auto v = highest_weight_vectors(cur, blocks, z);
      hw.insert(hw.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    if (hw.empty()) break;
    if (pass >= max_passes) throw CertificateError("head did not stabilise");
    // HW vectors of different Z-degrees generate separately
    cur = quotient(cur, blocks, submodule_generated(cur, blocks, hw));
  }
  for (int z : cur.zdeg) {
    if (z > 0) throw CertificateError("head has components above degree 0");
  }
  const auto top = decompose(cur.layer(0));
  if (top.parts.size() != 1 || top.parts[0].mult() != 1) {
    throw CertificateError("degree-0 component of the head is not a single weight");
  }
  return cur;
}

SocleResult socle(const QDModule& mod) {
  const BlockIndex blocks(mod);
  std::set<int> degrees(mod.zdeg.begin(), mod.zdeg.end());
  for (int z : degrees) {
    auto hw = highest_weight_vectors(mod, blocks, z);
    if (hw.empty()) continue;
    const DDModule hw_mod = restrict_dd(mod.restriction(), hw);
    const auto dec = decompose(hw_mod);
    if (dec.parts.size() != 1 || dec.parts[0].mult() != 1) {
      throw CertificateError("minimal-degree highest-weight space at degree " + std::to_string(z) +
                             " is not a single weight");
    }
    SocleResult out;
    out.degree = z;
    out.weight = dec.parts[0].label;
    out.subspace = submodule_generated(mod, blocks, hw);
    out.module = restrict_to(mod, blocks, out.subspace);
    out.character = graded_character(out.module);
    return out;
  }
  throw CertificateError("module has no highest-weight vectors");
}

QDModule rigid_module(const Dihedral& g, const IndexSet& I, const DDModule& lambda) {
  QDModule out;
  out.group = g;
  out.index = I;
  const std::size_t d = lambda.dim();
  out.x = lambda.x;
  out.y = lambda.y;
  out.gdeg = lambda.degree;
  out.basis = lambda.basis;
  out.zdeg.assign(d, 0);
  out.ops.assign(I.size(), QDModule::PairOps{CycMatrix(d, d), CycMatrix(d, d), CycMatrix(d, d),
                                               CycMatrix(d, d)});
  return out;
}

QDModule induce_from_simple(const QDModule& L, const Pair& pair) {
  const Dihedral& g = L.group;
  std::vector<Pair> all = L.index.pairs();
  all.push_back(pair);
  const IndexSet I = validate_index_set(g, all);
  // position of the new pair inside I; old pairs keep their relative order
  std::size_t pnew = 0;
  while (pnew < I.size() && I[pnew] < pair) ++pnew;
  std::vector<std::size_t> old_to_new(L.index.size());
  for (std::size_t q = 0; q < L.index.size(); ++q) old_to_new[q] = q < pnew ? q : q + 1;

  const std::size_t dl = L.dim();
  const std::size_t N = 4 * dl;
  // local exterior algebra on the new pair: masks 0, 1 (v+), 2 (v-), 3 (v+ v-)
  const std::array<ExtMonomial, 4> order = {0, 1, 2, 3};
  auto idx = [&](ExtMonomial w, std::size_t l) { return static_cast<std::size_t>(w) * dl + l; };
  (void)order;
  QDModule out;
  out.group = g;
  out.index = I;
  out.x = CycMatrix(N, N);
  out.y = CycMatrix(N, N);
  out.ops.assign(I.size(), QDModule::PairOps{CycMatrix(N, N), CycMatrix(N, N), CycMatrix(N, N),
                                               CycMatrix(N, N)});
  const IndexSet single = validate_index_set(g, {pair});
  for (ExtMonomial w = 0; w < 4; ++w) {
    const int len = std::popcount(w);
    const GroupElt wdeg = monomial_degree(g, single, w);
    const auto [xsign, xw] = monomial_x(w, 1);
    const CycNum& yscale = cyc_power(g.m(), monomial_y_exponent(single, w));
    const CycNum sign_cross(len % 2 == 0 ? 1 : -1);
    for (std::size_t l = 0; l < dl; ++l) {
      const std::size_t c = idx(w, l);
      out.zdeg.push_back(L.zdeg[l] - len);
      out.gdeg.push_back(g.mul(wdeg, L.gdeg[l]));
      out.basis.push_back(std::string(w == 0 ? "1" : w == 1 ? "v+" : w == 2 ? "v-" : "v+v-") + "|" +
                          L.basis[l]);
      for (std::size_t r = 0; r < dl; ++r) {
        if (!L.x(r, l).is_zero()) out.x(idx(xw, r), c) = L.x(r, l) * CycNum(xsign);
        if (!L.y(r, l).is_zero()) out.y(idx(w, r), c) = L.y(r, l) * yscale;
      }
      // old generators pass the new letters with a sign
      for (std::size_t q = 0; q < L.index.size(); ++q) {
        for (std::size_t kind = 0; kind < 4; ++kind) {
          const CycMatrix& z = L.generator(2 + 4 * q + kind);
          CycMatrix& target = mutable_generator(out, 2 + 4 * old_to_new[q] + kind);
          for (std::size_t r = 0; r < dl; ++r) {
            if (!z(r, l).is_zero()) target(idx(w, r), c) = z(r, l) * sign_cross;
          }
        }
      }
      // new v's multiply on the left
      for (int eps : {1, -1}) {
        const ExtMonomial letter = eps > 0 ? 1U : 2U;
        if (auto prod = ext_multiply(letter, w)) {
          CycMatrix& v = eps > 0 ? out.ops[pnew].vp : out.ops[pnew].vm;
          v(idx(prod->second, l), c) = CycNum(prod->first);
        }
      }
    }
  }
  // new a's: a z1..zr (x) l = sum_q (-1)^{q-1} z1..z_{q-1} Phi(z_{q+1}..zr (x) l)
  std::array<CycMatrix, 4> phi;
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      phi[static_cast<std::size_t>((e1 > 0 ? 0 : 2) + (e2 > 0 ? 0 : 1))] = phi_matrix(out, e1, e2, pair);
    }
  }
  for (int eps : {1, -1}) {
    CycMatrix& a = eps > 0 ? out.ops[pnew].ap : out.ops[pnew].am;
    for (ExtMonomial w = 1; w < 4; ++w) {
      int position = 0;
      for (int letter = 0; letter < 2; ++letter) {
        if (((w >> letter) & 1U) == 0) continue;
        const int eta = letter == 0 ? 1 : -1;
        const ExtMonomial prefix = w & ((1U << letter) - 1);
        const ExtMonomial suffix = w & ~((1U << (letter + 1)) - 1);
        const CycMatrix& ph = phi[static_cast<std::size_t>((eps > 0 ? 0 : 2) + (eta > 0 ? 0 : 1))];
        for (std::size_t l = 0; l < dl; ++l) {
          const std::size_t c = idx(w, l);
          const std::size_t src = idx(suffix, l);
          for (std::size_t r = 0; r < N; ++r) {
            const CycNum& coef = ph(r, src);
            if (coef.is_zero()) continue;
            const ExtMonomial rw = static_cast<ExtMonomial>(r / dl);
            const std::size_t target = idx(prefix | rw, r % dl);
            if (position % 2 == 1) {
              a(target, c) -= coef;
            } else {
              a(target, c) += coef;
            }
          }
        }
        ++position;
      }
    }
  }
  return out;
}

QDModule tensor_qd(const QDModule& A, const QDModule& B) {
  if (!(A.index == B.index)) throw DomainError("tensor_qd needs modules over the same index set");
  if (!(A.group == B.group)) throw DomainError("tensor_qd over different moduli");
  const Dihedral& g = A.group;
  const int m = g.m();
  const std::size_t da = A.dim();
  const std::size_t db = B.dim();
  QDModule out;
  out.group = g;
  out.index = A.index;
  out.x = kronecker(A.x, B.x);
  out.y = kronecker(A.y, B.y);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      out.zdeg.push_back(A.zdeg[i] + B.zdeg[j]);
      out.gdeg.push_back(g.mul(A.gdeg[i], B.gdeg[j]));
      out.basis.push_back(A.basis[i] + "*" + B.basis[j]);
    }
  }
  const CycMatrix ib = CycMatrix::identity(db);
  for (std::size_t p = 0; p < A.index.size(); ++p) {
    const Pair& pr = A.index[p];
    QDModule::PairOps ops;
    // v(a (x) b) = v a (x) b + y^{+-i} a (x) v b
    const CycMatrix yi = matrix_power(A.y, static_cast<unsigned>(g.wrap(pr.i)));
    const CycMatrix ymi = matrix_power(A.y, static_cast<unsigned>(g.wrap(-pr.i)));
    ops.vp = kronecker(A.ops[p].vp, ib) + kronecker(yi, B.ops[p].vp);
    ops.vm = kronecker(A.ops[p].vm, ib) + kronecker(ymi, B.ops[p].vm);
    // a(a (x) b) = a a (x) b + sum_s w^{-+sk} (delta_{y^-s} a (x) a b + delta_{y^-s x} a (x) a' b)
    for (int eps : {1, -1}) {
      CycMatrix rot(da, da);
      CycMatrix ref(da, da);
      for (std::size_t i = 0; i < da; ++i) {
        const GroupElt& d = A.gdeg[i];
        if (d.a == 0) {
          rot(i, i) = cyc_power(m, static_cast<long long>(eps) * d.b * pr.k);
        } else {
          ref(i, i) = cyc_power(m, -static_cast<long long>(eps) * d.b * pr.k);
        }
      }
      const CycMatrix& a_same = eps > 0 ? B.ops[p].ap : B.ops[p].am;
      const CycMatrix& a_other = eps > 0 ? B.ops[p].am : B.ops[p].ap;
      CycMatrix mat = kronecker(eps > 0 ? A.ops[p].ap : A.ops[p].am, ib) + kronecker(rot, a_same) +
                      kronecker(ref, a_other);
      (eps > 0 ? ops.ap : ops.am) = std::move(mat);
    }
    out.ops.push_back(std::move(ops));
  }
  return out;
}

}  // namespace ddm
