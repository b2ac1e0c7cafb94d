#include <doctest.h>

#include "ddm/errors.hpp"
#include "ddm/weights.hpp"

using namespace ddm;

namespace {
std::map<WeightLabel, std::size_t> tensor(const Dihedral& g, const WeightLabel& a, const WeightLabel& b) {
  return decompose_multiplicities(tensor_dd(build_weight(g, a), build_weight(g, b)));
}
}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("catalog sizes") {
    // 2(n+3) + (n-1)m + 8 labels and (2m)^2 for the squared dimensions
    for (const auto& [m, count] : std::vector<std::pair<int, std::size_t>>{{12, 86}, {16, 142}}) {
      const Dihedral g(m);
      const auto& cat = Catalog::get(g);
      CHECK(cat.entries().size() == count);
      std::size_t sq = 0;
      for (const auto& e : cat.entries()) {
        sq += e.module.dim() * e.module.dim();
        CHECK(check_dd(e.module).empty());
      }
      CHECK(sq == static_cast<std::size_t>(4 * m * m));
    }
  }

  TEST_CASE("dimensions") {
    const Dihedral g(12);
    CHECK(build_weight(g, WeightLabel::e_chi(3)).dim() == 1);
    CHECK(build_weight(g, WeightLabel::e_rho(2)).dim() == 2);
    CHECK(build_weight(g, WeightLabel::mik(2, 3)).dim() == 2);
    CHECK(build_weight(g, WeightLabel::mx(0, 1)).dim() == 6);
    CHECK(build_weight(g, WeightLabel::mxy(1, 1)).dim() == 6);
    CHECK_THROWS_AS(validate_label(g, WeightLabel::e_rho(6)), DomainError);
    CHECK_THROWS_AS(validate_label(g, WeightLabel::mx(2, 0)), DomainError);
  }

  TEST_CASE("tensor products") {
    const Dihedral g(12);
    CHECK(tensor(g, WeightLabel::mik(2, 3), WeightLabel::mx(0, 0)) ==
          std::map<WeightLabel, std::size_t>{{WeightLabel::mx(0, 1), 1}, {WeightLabel::mx(1, 1), 1}});
    CHECK(tensor(g, WeightLabel::e_chi(2), WeightLabel::mxy(1, 0)) ==
          std::map<WeightLabel, std::size_t>{{WeightLabel::mxy(0, 0), 1}});
    // rho_1 (x) rho_1 = 1 + sign + rho_2 for the dihedral group
    CHECK(tensor(g, WeightLabel::e_rho(1), WeightLabel::e_rho(1)) ==
          std::map<WeightLabel, std::size_t>{
              {WeightLabel::e_chi(1), 1}, {WeightLabel::e_chi(2), 1}, {WeightLabel::e_rho(2), 1}});
    for (const auto& l : Catalog::get(g).labels()) {
      CHECK(tensor(g, WeightLabel::e_chi(1), l) == std::map<WeightLabel, std::size_t>{{l, 1}});
    }
  }

  TEST_CASE("intertwiners") {
    const Dihedral g(12);
    const DDModule a = build_weight(g, WeightLabel::mx(1, 0));
    CHECK(hom_space(a, a).size() == 1);
    CHECK(hom_space(a, build_weight(g, WeightLabel::mx(1, 1))).empty());
    const DDModule sum = direct_sum({a, a, build_weight(g, WeightLabel::e_chi(4))});
    CHECK(hom_space(a, sum).size() == 2);
    CHECK(decompose_multiplicities(sum) ==
          std::map<WeightLabel, std::size_t>{{WeightLabel::e_chi(4), 1}, {WeightLabel::mx(1, 0), 2}});
  }

  TEST_CASE("embeddings are intertwiners") {
    const Dihedral g(12);
    const DDModule m = tensor_dd(build_weight(g, WeightLabel::mik(1, 6)), build_weight(g, WeightLabel::mxy(0, 1)));
    for (const auto& part : decompose(m).parts) {
      const DDModule w = build_weight(g, part.label);
      for (const auto& f : part.embeddings) {
        CHECK(m.x * f == f * w.x);
        CHECK(m.y * f == f * w.y);
      }
    }
  }

  TEST_CASE("unified M_{i,k}") {
    const Dihedral g(12);
    CHECK(unified_mik(g, 2, 3) == WeightLabel::mik(2, 3));
    CHECK(unified_mik(g, 6, 1) == WeightLabel::yn_rho(1));
    CHECK(unified_mik(g, 6, 11) == WeightLabel::yn_rho(1));
    CHECK(is_isomorphic(build_mik(g, 6, 7), build_weight(g, WeightLabel::yn_rho(5))));
    CHECK(mrst(3, 2, -1) == WeightLabel::mxy(0, 1));
  }
}
