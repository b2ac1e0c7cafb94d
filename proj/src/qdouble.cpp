#include "ddm/qdouble.hpp"

#include <algorithm>
#include <bit>

#include "ddm/errors.hpp"

namespace ddm {

const CycMatrix& QDModule::generator(std::size_t gen) const {
  if (gen == 0) return x;
  if (gen == 1) return y;
  const std::size_t p = (gen - 2) / 4;
  switch ((gen - 2) % 4) {
    case 0: return ops.at(p).vp;
    case 1: return ops.at(p).vm;
    case 2: return ops.at(p).ap;
    default: return ops.at(p).am;
  }
}

DDModule QDModule::restriction() const {
  DDModule mod;
  mod.group = group;
  mod.basis = basis;
  mod.x = x;
  mod.y = y;
  mod.degree = gdeg;
  return mod;
}

DDModule QDModule::layer(int z) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (zdeg[i] == z) idx.push_back(i);
  }
  DDModule mod;
  mod.group = group;
  mod.x = x.submatrix(idx, idx);
  mod.y = y.submatrix(idx, idx);
  for (std::size_t i : idx) {
    mod.degree.push_back(gdeg[i]);
    mod.basis.push_back(basis[i]);
  }
  return mod;
}

std::size_t GradedCharacter::dimension(const Dihedral& g) const {
  const Catalog& cat = Catalog::get(g);
  std::size_t d = 0;
  for (const auto& layer : layers) {
    for (const auto& [label, mult] : layer.summands) d += mult * cat.entry(label).module.dim();
  }
  return d;
}

GradedCharacter GradedCharacter::shifted(int d) const {
  GradedCharacter out = *this;
  for (auto& layer : out.layers) layer.degree += d;
  return out;
}

void GradedCharacter::add(int degree, const WeightLabel& label, std::size_t mult) {
  if (mult == 0) return;
  auto it = std::find_if(layers.begin(), layers.end(),
                         [&](const Layer& l) { return l.degree <= degree; });
  if (it == layers.end() || it->degree != degree) it = layers.insert(it, Layer{degree, {}});
  it->summands[label] += mult;
}

void GradedCharacter::add(const GradedCharacter& other) {
  for (const auto& layer : other.layers) {
    for (const auto& [label, mult] : layer.summands) add(layer.degree, label, mult);
  }
}

// ---------------------------------------------------------------------------

CycMatrix phi_matrix(const Dihedral& g, const CycMatrix& ymat, const std::vector<GroupElt>& deg,
                     int e1, int e2, const Pair& pair) {
  const int m = g.m();
  const unsigned exponent = static_cast<unsigned>(e2 > 0 ? pair.i % m : (m - pair.i % m) % m);
  CycMatrix yp = matrix_power(ymat, exponent);
  const bool diagonal_case = e1 == e2;
  // row r is selected when its degree is y^s (diagonal case) or x y^s (mixed case),
  // with coefficient w^{e2 s k}
  for (std::size_t r = 0; r < yp.rows(); ++r) {
    const GroupElt& d = deg[r];
    const bool selected = diagonal_case ? d.a == 0 : d.a == 1;
    for (std::size_t c = 0; c < yp.cols(); ++c) {
      if (yp(r, c).is_zero()) continue;
      if (!selected) {
        yp(r, c) = CycNum();
      } else {
        yp(r, c) = -(yp(r, c) * cyc_power(m, static_cast<long long>(e2) * d.b * pair.k));
      }
    }
  }
  if (diagonal_case) yp += CycMatrix::identity(yp.rows());
  return yp;
}

CycMatrix phi_matrix(const DDModule& mod, int e1, int e2, const Pair& pair) {
  return phi_matrix(mod.group, mod.y, mod.degree, e1, e2, pair);
}

CycMatrix phi_matrix(const QDModule& mod, int e1, int e2, const Pair& pair) {
  return phi_matrix(mod.group, mod.y, mod.gdeg, e1, e2, pair);
}

CycMatrix theta_matrix(const DDModule& mod, const Pair& pair) {
  return -(phi_matrix(mod, 1, 1, pair) * phi_matrix(mod, -1, -1, pair)) +
         phi_matrix(mod, 1, -1, pair) * phi_matrix(mod, -1, 1, pair);
}

CycMatrix theta_matrix(const QDModule& mod, const Pair& pair) {
  return -(phi_matrix(mod, 1, 1, pair) * phi_matrix(mod, -1, -1, pair)) +
         phi_matrix(mod, 1, -1, pair) * phi_matrix(mod, -1, 1, pair);
}

CycVector phi_action(int e1, int e2, const Pair& pair, const DDModule& mod, const CycVector& v) {
  return phi_matrix(mod, e1, e2, pair).apply(v);
}

CycVector phi_action(int e1, int e2, const Pair& pair, const QDModule& mod, const CycVector& v) {
  return phi_matrix(mod, e1, e2, pair).apply(v);
}

CycVector theta_action(const Pair& pair, const DDModule& mod, const CycVector& v) {
  return theta_matrix(mod, pair).apply(v);
}

// ---------------------------------------------------------------------------

VermaBasis::VermaBasis(const IndexSet& I, std::size_t weight_dim) : wdim_(weight_dim) {
  for (int d = 0; d <= static_cast<int>(2 * I.size()); ++d) {
    for (ExtMonomial mono : nichols_basis(I, d)) {
      pos_[mono] = monos_.size();
      monos_.push_back(mono);
    }
  }
}

namespace {

std::size_t phi_slot(int e1, int e2) { return (e1 > 0 ? 0 : 2) + (e2 > 0 ? 0 : 1); }

std::string monomial_name(ExtMonomial mono) {
  if (mono == 0) return "1";
  std::string out;
  for (ExtMonomial rest = mono; rest != 0; rest &= rest - 1) {
    const int letter = std::countr_zero(rest);
    out += "v" + std::to_string(letter_pair(letter) + 1) + (letter_is_plus(letter) ? "+" : "-");
  }
  return out;
}

}  // namespace

CycVector alpha_rewrite(const VermaBasis& basis, const std::vector<std::array<CycMatrix, 4>>& phi,
                        int eps, std::size_t p, ExtMonomial mono, std::size_t j) {
  CycVector out(basis.size());
  int position = 0;
  for (ExtMonomial rest = mono; rest != 0; rest &= rest - 1, ++position) {
    const int letter = std::countr_zero(rest);
    if (static_cast<std::size_t>(letter_pair(letter)) != p) continue;
    const int eta = letter_is_plus(letter) ? 1 : -1;
    const ExtMonomial below = (ExtMonomial{1} << letter) - 1;
    const ExtMonomial prefix = mono & below;
    const ExtMonomial suffix = mono & ~below & ~(ExtMonomial{1} << letter);
    const CycMatrix& ph = phi[p][phi_slot(eps, eta)];
    const std::size_t col = basis.index(suffix, j);
    const bool negative = position % 2 == 1;
    for (std::size_t r = 0; r < ph.rows(); ++r) {
      const CycNum& c = ph(r, col);
      if (c.is_zero()) continue;
      // prefix letters all precede the suffix letters, so the product keeps its sign
      const std::size_t target = basis.index(prefix | basis.monomial(r), basis.weight_index(r));
      if (negative) {
        out[target] -= c;
      } else {
        out[target] += c;
      }
    }
  }
  return out;
}

QDModule build_verma(const Dihedral& g, const IndexSet& I, const DDModule& lambda) {
  if (I.m() != g.m()) throw DomainError("index set and group have different moduli");
  if (!(lambda.group == g)) throw DomainError("weight and group have different moduli");
  const VermaBasis basis(I, lambda.dim());
  const std::size_t N = basis.size();
  const std::size_t wd = lambda.dim();
  QDModule mod;
  mod.group = g;
  mod.index = I;
  mod.x = CycMatrix(N, N);
  mod.y = CycMatrix(N, N);
  for (std::size_t c = 0; c < N; ++c) {
    const ExtMonomial mono = basis.monomial(c);
    const std::size_t j = basis.weight_index(c);
    mod.zdeg.push_back(-std::popcount(mono));
    mod.gdeg.push_back(g.mul(monomial_degree(g, I, mono), lambda.degree[j]));
    mod.basis.push_back(monomial_name(mono) + "|" + lambda.basis[j]);
    const auto [sign, xmono] = monomial_x(mono, I.size());
    const CycNum& yscale = cyc_power(g.m(), monomial_y_exponent(I, mono));
    for (std::size_t jj = 0; jj < wd; ++jj) {
      if (!lambda.x(jj, j).is_zero()) mod.x(basis.index(xmono, jj), c) = lambda.x(jj, j) * CycNum(sign);
      if (!lambda.y(jj, j).is_zero()) mod.y(basis.index(mono, jj), c) = lambda.y(jj, j) * yscale;
    }
  }
  std::vector<std::array<CycMatrix, 4>> phi;
  for (std::size_t p = 0; p < I.size(); ++p) {
    std::array<CycMatrix, 4> mats;
    for (int e1 : {1, -1}) {
      for (int e2 : {1, -1}) mats[phi_slot(e1, e2)] = phi_matrix(mod, e1, e2, I[p]);
    }
    phi.push_back(std::move(mats));
  }
  for (std::size_t p = 0; p < I.size(); ++p) {
    QDModule::PairOps ops{CycMatrix(N, N), CycMatrix(N, N), CycMatrix(N, N), CycMatrix(N, N)};
    for (std::size_t c = 0; c < N; ++c) {
      const ExtMonomial mono = basis.monomial(c);
      const std::size_t j = basis.weight_index(c);
      for (int eps : {1, -1}) {
        const int letter = static_cast<int>(2 * p) + (eps > 0 ? 0 : 1);
        if (auto prod = ext_multiply(ExtMonomial{1} << letter, mono)) {
          CycMatrix& v = eps > 0 ? ops.vp : ops.vm;
          v(basis.index(prod->second, j), c) = CycNum(prod->first);
        }
        const CycVector col = alpha_rewrite(basis, phi, eps, p, mono, j);
        CycMatrix& a = eps > 0 ? ops.ap : ops.am;
        for (std::size_t r = 0; r < N; ++r) {
          if (!col[r].is_zero()) a(r, c) = col[r];
        }
      }
    }
    mod.ops.push_back(std::move(ops));
  }
  return mod;
}

QDModule build_verma(const Dihedral& g, const IndexSet& I, const WeightLabel& lambda) {
  return build_verma(g, I, Catalog::get(g).entry(lambda).module);
}

// ---------------------------------------------------------------------------

RelationReport check_relations(const QDModule& mod) {
  RelationReport rep;
  const Dihedral& g = mod.group;
  const std::size_t N = mod.dim();
  const std::size_t pairs = mod.ops.size();
  auto fail = [&](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = what;
    }
  };
  auto expect = [&](bool cond, const std::string& what) {
    ++rep.checked;
    if (!cond) fail(what);
    return cond;
  };
  auto pname = [](std::size_t p) { return " (pair " + std::to_string(p + 1) + ")"; };

  if (pairs != mod.index.size()) {
    fail("generator count does not match the index set");
    return rep;
  }
  for (std::size_t gen = 0; gen < mod.generator_count(); ++gen) {
    const CycMatrix& z = mod.generator(gen);
    if (z.rows() != N || z.cols() != N) {
      fail("generator " + std::to_string(gen) + " has the wrong shape");
      return rep;
    }
  }
  expect((mod.x * mod.x).is_identity(), "x^2 = 1");
  expect(matrix_power(mod.y, static_cast<unsigned>(g.m())).is_identity(), "y^m = 1");
  expect((mod.x * mod.y * mod.x * mod.y).is_identity(), "xyxy = 1");

  // bigrading: delta_{tst^-1} t = t delta_s and the degrees of v, a
  for (std::size_t gen = 0; gen < mod.generator_count(); ++gen) {
    const CycMatrix& z = mod.generator(gen);
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        if (z(r, c).is_zero()) continue;
        GroupElt want;
        int dz = 0;
        if (gen == 0) {
          want = g.conj(mod.gdeg[c], g.x());
        } else if (gen == 1) {
          want = g.conj(mod.gdeg[c], g.y());
        } else {
          const std::size_t p = (gen - 2) / 4;
          const int kind = static_cast<int>((gen - 2) % 4);
          const int i = mod.index[p].i;
          const int shift = kind == 0 ? i : kind == 1 ? -i : kind == 2 ? -i : i;
          want = g.mul(g.y(shift), mod.gdeg[c]);
          dz = kind < 2 ? -1 : 1;
        }
        if (!expect(mod.gdeg[r] == want && mod.zdeg[r] == mod.zdeg[c] + dz,
                    "generator " + std::to_string(gen) + " respects the bigrading")) {
          return rep;
        }
      }
    }
  }

  for (std::size_t p = 0; p < pairs; ++p) {
    const Pair& pr = mod.index[p];
    const CycNum& wk = cyc_power(g.m(), pr.k);
    const CycNum& wmk = cyc_power(g.m(), -pr.k);
    const auto& o = mod.ops[p];
    expect(mod.x * o.vp == o.vm * mod.x, "x v+ = v- x" + pname(p));
    expect(mod.x * o.vm == o.vp * mod.x, "x v- = v+ x" + pname(p));
    expect(mod.y * o.vp == (o.vp * mod.y) * wk, "y v+ = w^k v+ y" + pname(p));
    expect(mod.y * o.vm == (o.vm * mod.y) * wmk, "y v- = w^-k v- y" + pname(p));
    expect(mod.x * o.ap == o.am * mod.x, "x a+ = a- x" + pname(p));
    expect(mod.x * o.am == o.ap * mod.x, "x a- = a+ x" + pname(p));
    expect(mod.y * o.ap == (o.ap * mod.y) * wmk, "y a+ = w^-k a+ y" + pname(p));
    expect(mod.y * o.am == (o.am * mod.y) * wk, "y a- = w^k a- y" + pname(p));
    for (int e1 : {1, -1}) {
      for (int e2 : {1, -1}) {
        const CycMatrix& a = mod.a(p, e1);
        const CycMatrix& v = mod.v(p, e2);
        const std::string name = std::string("a") + (e1 > 0 ? "+" : "-") + " v" + (e2 > 0 ? "+" : "-") +
                                 " + v a = Phi" + pname(p);
        expect(a * v + v * a == phi_matrix(mod, e1, e2, pr), name);
      }
    }
    expect((o.vp * o.vp).is_zero(), "v+^2 = 0" + pname(p));
    expect((o.vm * o.vm).is_zero(), "v-^2 = 0" + pname(p));
    expect((o.vp * o.vm + o.vm * o.vp).is_zero(), "v+ v- = -v- v+" + pname(p));
    expect((o.ap * o.ap).is_zero(), "a+^2 = 0" + pname(p));
    expect((o.am * o.am).is_zero(), "a-^2 = 0" + pname(p));
    expect((o.ap * o.am + o.am * o.ap).is_zero(), "a+ a- = -a- a+" + pname(p));
  }
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t q = p + 1; q < pairs; ++q) {
      for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t t = 0; t < 4; ++t) {
          const CycMatrix& z = mod.generator(2 + 4 * p + s);
          const CycMatrix& w = mod.generator(2 + 4 * q + t);
          expect((z * w + w * z).is_zero(), "generators of pairs " + std::to_string(p + 1) + " and " +
                                                std::to_string(q + 1) + " anticommute");
        }
      }
    }
  }
  return rep;
}

bool theta_congruence(const QDModule& verma, std::size_t p) {
  const auto& o = verma.ops.at(p);
  const CycMatrix lhs = o.ap * o.am * o.vp * o.vm;
  const CycMatrix theta = theta_matrix(verma, verma.index[p]);
  for (std::size_t c = 0; c < verma.dim(); ++c) {
    if (verma.zdeg[c] != 0) continue;
    for (std::size_t r = 0; r < verma.dim(); ++r) {
      if (lhs(r, c) != theta(r, c)) return false;
    }
  }
  return true;
}

}  // namespace ddm
