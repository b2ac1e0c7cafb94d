#include <doctest.h>

#include "ddm/errors.hpp"
#include "ddm/theorems.hpp"

using namespace ddm;

namespace {

GradedCharacter chars(std::initializer_list<std::tuple<int, WeightLabel, std::size_t>> items) {
  GradedCharacter c;
  for (const auto& [d, l, mult] : items) c.add(d, l, mult);
  return c;
}

std::vector<Pair> valid_pairs(const Dihedral& g) {
  std::vector<Pair> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int k = 0; k < g.m(); ++k) {
      if ((i * k) % g.m() == g.n()) out.push_back({i, k});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("table examples") {
    const Dihedral g(12);
    CHECK(classify_weight(g, WeightLabel::e_chi(1), {2, 3}) == WeightClass::Rigid);
    CHECK(classify_weight(g, WeightLabel::e_chi(1), {1, 6}) == WeightClass::Rigid);
    CHECK(classify_weight(g, WeightLabel::e_rho(3), {2, 3}) == WeightClass::Projective);
    CHECK(classify_weight(g, WeightLabel::mik(2, 3), {2, 3}) == WeightClass::Rigid);
    CHECK(classify_weight(g, WeightLabel::e_chi(3), {1, 6}) == WeightClass::Projective);
    CHECK(classify_weight(g, WeightLabel::yn_chi(1), {2, 3}) == WeightClass::Projective);
    CHECK(classify_weight(g, WeightLabel::mxy(1, 0), {2, 3}) == WeightClass::Other);
  }

  TEST_CASE("table agrees with the operator oracle") {
    for (int m : {12, 16}) {
      const Dihedral g(m);
      for (const auto& p : valid_pairs(g)) {
        for (const auto& l : Catalog::get(g).labels()) {
          const auto oracle = classify_oracle(g, l, p);
          REQUIRE(oracle.has_value());
          CHECK(*oracle == classify_weight(g, l, p));
        }
      }
    }
  }

  TEST_CASE("splitting index sets") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{1, 6}, {3, 6}});
    const IndexSplit s = split_index(g, I, WeightLabel::mik(1, 2));
    CHECK(s.projective == validate_index_set(g, {{1, 6}}));
    CHECK(s.rigid == validate_index_set(g, {{3, 6}}));
    CHECK(split_index(g, I, WeightLabel::e_chi(1)).rigid == I);
    CHECK_THROWS_AS(split_index(g, I, WeightLabel::mx(0, 0)), DomainError);
  }

  TEST_CASE("predicted characters") {
    const Dihedral g(12);
    CHECK(predicted_character(g, validate_index_set(g, {{2, 3}}), WeightLabel::mx(0, 0)) ==
          chars({{0, WeightLabel::mx(0, 0), 1}, {-1, WeightLabel::mx(0, 1), 1}}));
    const GradedCharacter two = predicted_character(g, validate_index_set(g, {{1, 6}, {3, 6}}), WeightLabel::mx(0, 0));
    CHECK(two == chars({{0, WeightLabel::mx(0, 0), 1}, {-1, WeightLabel::mxy(0, 0), 2}, {-2, WeightLabel::mx(0, 0), 1}}));
    CHECK(two.dimension(g) == 24);
    CHECK(predicted_character(g, validate_index_set(g, {{2, 3}, {2, 9}}), WeightLabel::e_chi(1)) ==
          chars({{0, WeightLabel::e_chi(1), 1}}));
    CHECK(predicted_character(g, validate_index_set(g, {{1, 6}, {3, 6}}), WeightLabel::mik(1, 2)).dimension(g) == 8);
  }

  TEST_CASE("epsilon readings for pairs (n, l)") {
    const Dihedral g(12);
    const IndexSet one = validate_index_set(g, {{6, 1}});
    const IndexSet two = validate_index_set(g, {{6, 1}, {6, 3}});
    for (const auto& l : {WeightLabel::mx(0, 0), WeightLabel::mxy(1, 1)}) {
      CHECK(predicted_character(g, one, l, EpsilonRule::IntegerSum) ==
            predicted_character(g, one, l, EpsilonRule::PairCount));
      CHECK_FALSE(predicted_character(g, two, l, EpsilonRule::IntegerSum) ==
                  predicted_character(g, two, l, EpsilonRule::PairCount));
      const GradedCharacter computed = graded_character(head(build_verma(g, two, l)));
      CHECK(computed == predicted_character(g, two, l, EpsilonRule::PairCount));
    }
  }

  TEST_CASE("tensor lemma with explicit vectors") {
    for (int m : {12, 16}) {
      const Dihedral g(m);
      for (const auto& p : valid_pairs(g)) {
        for (int r = 0; r < 2; ++r) {
          for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
              const auto rep = check_mik_tensor(g, p.i, p.k, mrst(r, s, t));
              CHECK_MESSAGE(rep.ok(), rep.detail);
            }
          }
        }
      }
    }
  }

  TEST_CASE("verify simple modules") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{1, 6}, {3, 6}});
    const SimpleReport r = verify_simple(g, I, WeightLabel::mik(1, 2));
    CHECK(r.ok());
    CHECK(r.head_dim == 8);
    const SimpleReport o = verify_simple(g, I, WeightLabel::mx(0, 0));
    CHECK(o.ok());
    CHECK(o.head_dim == 24);
    const SimpleReport p = verify_simple(g, validate_index_set(g, {{2, 3}}), WeightLabel::e_rho(3));
    CHECK(p.ok());
    CHECK(p.head_dim == p.verma_dim);
    CHECK(p.zone == WeightClass::Projective);
  }

  TEST_CASE("literal epsilon reading is reported, not repaired") {
    const Dihedral g(12);
    const SimpleReport r = verify_simple(g, validate_index_set(g, {{6, 1}, {6, 3}}), WeightLabel::mx(0, 0), {false, EpsilonRule::IntegerSum});
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.head_ok);
  }

  TEST_CASE("rigid tensor products") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    CHECK(check_rigid_tensor(g, I, WeightLabel::mik(2, 3), WeightLabel::mx(0, 0)).ok());
    CHECK(check_rigid_tensor(g, I, WeightLabel::e_chi(2), WeightLabel::e_rho(3)).ok());
    CHECK_THROWS_AS(check_rigid_tensor(g, I, WeightLabel::e_rho(3), WeightLabel::mx(0, 0)), DomainError);
  }

  TEST_CASE("sphericality") {
    const Dihedral g12(12);
    const Dihedral g16(16);
    CHECK(is_spherical(validate_index_set(g12, {{2, 3}})));
    CHECK(is_spherical(validate_index_set(g12, {{6, 1}})));
    CHECK_FALSE(is_spherical(validate_index_set(g16, {{2, 4}})));
    const PivotReport ok = pivot_check(build_verma(g12, validate_index_set(g12, {{2, 3}}), WeightLabel::e_chi(1)));
    CHECK(ok.candidate_ok[2]);
    CHECK(ok.involutive);
    const PivotReport bad = pivot_check(build_verma(g16, validate_index_set(g16, {{2, 4}}), WeightLabel::e_chi(1)));
    CHECK_FALSE(bad.any());
    CHECK(bad.involutive);
  }

  TEST_CASE("quantum dimensions") {
    const Dihedral g(12);
    const IndexSet I = validate_index_set(g, {{2, 3}});
    CHECK(quantum_dimension(head(build_verma(g, I, WeightLabel::e_chi(1)))).is_one());
    CHECK(quantum_dimension(head(build_verma(g, I, WeightLabel::mx(0, 0)))).is_zero());
    CHECK(quantum_dimension(head(build_verma(g, I, WeightLabel::e_rho(3)))).is_zero());
    const Dihedral g16(16);
    CHECK_THROWS_AS(quantum_dimension(build_verma(g16, validate_index_set(g16, {{2, 4}}), WeightLabel::e_chi(1))),
                    DomainError);
  }
}
