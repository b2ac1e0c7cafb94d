#include <doctest.h>

#include "ddm/errors.hpp"
#include "ddm/qdouble.hpp"

using namespace ddm;

namespace {

GradedCharacter chars(std::initializer_list<std::tuple<int, WeightLabel, std::size_t>> items) {
  GradedCharacter c;
  for (const auto& [d, l, mult] : items) c.add(d, l, mult);
  return c;
}

CycVector basis_vector(std::size_t n, std::size_t i) {
  CycVector v(n);
  v[i] = CycNum(1);
  return v;
}

}  // namespace

TEST_SUITE("qdouble") {
  TEST_CASE("phi operators on weights") {
    const Dihedral g(12);
    const Pair p{2, 3};
    CHECK(phi_matrix(build_weight(g, WeightLabel::e_chi(1)), 1, 1, p).is_zero());
    CHECK(phi_matrix(build_weight(g, WeightLabel::e_rho(3)), 1, -1, p).is_zero());
    CHECK(phi_matrix(build_weight(g, WeightLabel::mik(1, 6)), -1, 1, p).is_zero());
    const DDModule mx = build_weight(g, WeightLabel::mx(0, 0));
    const CycVector m0 = basis_vector(mx.dim(), 0);
    CHECK(phi_action(1, 1, p, mx, m0) == m0);
    CHECK(theta_matrix(mx, p).is_zero());
    CHECK_FALSE(theta_matrix(build_weight(g, WeightLabel::e_rho(3)), p).is_zero());
    CHECK(theta_matrix(build_weight(g, WeightLabel::e_chi(1)), p).is_zero());
  }

  TEST_CASE("verma dimensions and relations") {
    const Dihedral g(12);
    const IndexSet one = validate_index_set(g, {{2, 3}});
    const IndexSet two = validate_index_set(g, {{1, 6}, {3, 6}});
    const QDModule a = build_verma(g, one, WeightLabel::e_chi(1));
    const QDModule b = build_verma(g, two, WeightLabel::mx(0, 0));
    CHECK(a.dim() == 4);
    CHECK(b.dim() == 96);
    CHECK(check_relations(a).ok);
    CHECK(check_relations(b).ok);
    CHECK(theta_congruence(b, 0));
    CHECK(theta_congruence(b, 1));
    CHECK(graded_character(a) == chars({{0, WeightLabel::e_chi(1), 1},
                                        {-1, WeightLabel::mik(2, 3), 1},
                                        {-2, WeightLabel::e_chi(2), 1}}));
  }

  TEST_CASE("alpha on low monomials") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    const DDModule lambda = build_weight(g, WeightLabel::mx(0, 0));
    const QDModule v = build_verma(g, I, lambda);
    const VermaBasis basis(I, lambda.dim());
    for (std::size_t j = 0; j < lambda.dim(); ++j) {
      CHECK(is_zero_vector(v.a(0, 1).apply(basis_vector(v.dim(), basis.index(0, j)))));
      CHECK(is_zero_vector(v.a(0, -1).apply(basis_vector(v.dim(), basis.index(0, j)))));
    }
    // a+ (v+ (x) m) = 1 (x) Phi++ m
    const CycMatrix pp = phi_matrix(lambda, 1, 1, I[0]);
    for (std::size_t j = 0; j < lambda.dim(); ++j) {
      const CycVector got = v.a(0, 1).apply(basis_vector(v.dim(), basis.index(0b01, j)));
      CycVector want(v.dim());
      for (std::size_t r = 0; r < lambda.dim(); ++r) want[basis.index(0, r)] = pp(r, j);
      CHECK(got == want);
    }
    // a+ (v+ v- (x) m) = -v+ (x) Phi+- m + Phi++ (v- (x) m)
    const CycMatrix vphi = phi_matrix(v, 1, 1, I[0]);
    const CycMatrix pm = phi_matrix(lambda, 1, -1, I[0]);
    for (std::size_t j = 0; j < lambda.dim(); ++j) {
      const CycVector got = v.a(0, 1).apply(basis_vector(v.dim(), basis.index(0b11, j)));
      CycVector want = vphi.apply(basis_vector(v.dim(), basis.index(0b10, j)));
      for (std::size_t r = 0; r < lambda.dim(); ++r) want[basis.index(0b01, r)] -= pm(r, j);
      CHECK(got == want);
    }
  }

  TEST_CASE("a sign flip breaks the relations") {
    const Dihedral g(12);
    QDModule v = build_verma(g, validate_index_set(g, {{2, 3}}), WeightLabel::mx(0, 0));
    bool flipped = false;
    for (std::size_t r = 0; r < v.dim() && !flipped; ++r) {
      for (std::size_t c = 0; c < v.dim() && !flipped; ++c) {
        if (!v.ops[0].ap(r, c).is_zero()) {
          v.ops[0].ap(r, c) = -v.ops[0].ap(r, c);
          flipped = true;
        }
      }
    }
    REQUIRE(flipped);
    CHECK_FALSE(check_relations(v).ok);
  }

  TEST_CASE("highest weight vectors") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    const QDModule v = build_verma(g, I, WeightLabel::mx(0, 0));
    CHECK(highest_weight_vectors(v, 0).size() == 6);
    const auto hw = highest_weight_vectors(v, -1);
    CHECK(restrict_dd(v.restriction(), hw).dim() == 6);
    CHECK(decompose_multiplicities(restrict_dd(v.restriction(), hw)) ==
          std::map<WeightLabel, std::size_t>{{WeightLabel::mx(1, 1), 1}});
    // projective zone: nothing below the top
    const QDModule p = build_verma(g, I, WeightLabel::e_rho(3));
    CHECK(highest_weight_vectors(p, -1).empty());
    CHECK(highest_weight_vectors(p, -2).empty());
  }

  TEST_CASE("submodules and quotients") {
    const Dihedral g(12);
    const QDModule v = build_verma(g, validate_index_set(g, {{2, 3}}), WeightLabel::mx(0, 0));
    const BlockIndex blocks(v);
    CHECK(submodule_generated(v, blocks, {CycVector(v.dim())}).dim() == 0);
    CHECK(submodule_generated(v, blocks, highest_weight_vectors(v, 0)).dim() == v.dim());
    const GradedSubspace s = submodule_generated(v, blocks, highest_weight_vectors(v, -1));
    CHECK(s.dim() == 12);
    const QDModule q = quotient(v, blocks, s);
    CHECK(q.dim() == 12);
    CHECK(check_relations(q).ok);
    CHECK(graded_character(q) == chars({{0, WeightLabel::mx(0, 0), 1}, {-1, WeightLabel::mx(0, 1), 1}}));
    CHECK(quotient(v, blocks, GradedSubspace{[&] {
                     std::vector<SpanBuilder> spans;
                     for (const auto& b : blocks.blocks()) spans.emplace_back(b.idx.size());
                     return spans;
                   }()})
              .dim() == v.dim());
    CHECK(quotient(v, blocks, submodule_generated(v, blocks, highest_weight_vectors(v, 0))).dim() == 0);
    CycVector mixed(v.dim());
    mixed[0] = CycNum(1);
    mixed[v.dim() - 1] = CycNum(1);
    CHECK_THROWS_AS(submodule_generated(v, blocks, {mixed}), DomainError);
  }

  TEST_CASE("head and socle of a two-factor Verma module") {
    const Dihedral g(12);
    const QDModule v = build_verma(g, validate_index_set(g, {{2, 3}}), WeightLabel::mx(0, 0));
    const QDModule h = head(v);
    CHECK(h.dim() == 12);
    CHECK(check_relations(h).ok);
    CHECK(graded_character(h) == chars({{0, WeightLabel::mx(0, 0), 1}, {-1, WeightLabel::mx(0, 1), 1}}));
    CHECK(head(h).dim() == 12);
    const SocleResult s = socle(v);
    CHECK(s.degree == -1);
    CHECK(s.weight == WeightLabel::mx(1, 1));
    CHECK(s.character == chars({{-1, WeightLabel::mx(1, 1), 1}, {-2, WeightLabel::mx(1, 0), 1}}));
    CHECK(h.dim() + s.module.dim() == v.dim());
  }

  TEST_CASE("rigid and projective singletons") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    const QDModule r = build_verma(g, I, WeightLabel::e_chi(1));
    CHECK(head(r).dim() == 1);
    CHECK(socle(r).degree == -2);
    const QDModule p = build_verma(g, I, WeightLabel::e_rho(3));
    CHECK(head(p).dim() == 8);
    CHECK(socle(p).degree == 0);
    CHECK(socle(p).module.dim() == 8);
  }

  TEST_CASE("two pairs") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{1, 6}, {3, 6}});
    const QDModule h = head(build_verma(g, I, WeightLabel::mx(0, 0)));
    CHECK(h.dim() == 24);
    CHECK(graded_character(h) == chars({{0, WeightLabel::mx(0, 0), 1},
                                        {-1, WeightLabel::mxy(0, 0), 2},
                                        {-2, WeightLabel::mx(0, 0), 1}}));
  }

  TEST_CASE("induction from a simple module") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{1, 6}, {3, 6}});
    const QDModule inner = head(build_verma(g, validate_index_set(g, {{3, 6}}), WeightLabel::mx(0, 0)));
    const QDModule ind = induce_from_simple(inner, {1, 6});
    CHECK(ind.dim() == 4 * inner.dim());
    CHECK(ind.index == I);
    CHECK(check_relations(ind).ok);
    CHECK(graded_character(head(ind)) == graded_character(head(build_verma(g, I, WeightLabel::mx(0, 0)))));
    // rigid on (3,6), projective on (1,6): inducing the weight itself gives the simple module
    const QDModule lam = rigid_module(g, validate_index_set(g, {{3, 6}}), build_weight(g, WeightLabel::mik(1, 2)));
    CHECK(check_relations(lam).ok);
    const QDModule ind2 = induce_from_simple(lam, {1, 6});
    CHECK(head(ind2).dim() == ind2.dim());
    CHECK_THROWS_AS(induce_from_simple(inner, {2, 3}), IndexSetError);
  }

  TEST_CASE("tensor products of representations") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    const QDModule a = build_verma(g, I, WeightLabel::mx(0, 0));
    const QDModule b = build_verma(g, I, WeightLabel::e_rho(1));
    CHECK(check_relations(tensor_qd(a, b)).ok);
    const QDModule one = rigid_module(g, I, build_weight(g, WeightLabel::e_chi(1)));
    const QDModule t = tensor_qd(one, a);
    CHECK(t.dim() == a.dim());
    CHECK(graded_character(t) == graded_character(a));
    CHECK(t.ops[0].ap == a.ops[0].ap);
    CHECK(t.ops[0].vm == a.ops[0].vm);
    CHECK_THROWS_AS(tensor_qd(a, build_verma(g, validate_index_set(g, {{2, 9}}), WeightLabel::e_chi(1))), DomainError);
  }

  TEST_CASE("empty module") {
    const Dihedral g(12);
    const QDModule v = build_verma(g, validate_index_set(g, {{2, 3}}), WeightLabel::e_chi(1));
    const BlockIndex blocks(v);
    const QDModule zero = quotient(v, blocks, submodule_generated(v, blocks, highest_weight_vectors(v, 0)));
    CHECK(graded_character(zero).layers.empty());
  }
}
