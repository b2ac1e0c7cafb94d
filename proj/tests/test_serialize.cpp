#include <doctest.h>

#include "ddm/errors.hpp"
#include "ddm/serialize.hpp"

using namespace ddm;

TEST_SUITE("serialize") {
  TEST_CASE("labels round trip") {
    const Dihedral g(12);
    for (const auto& l : Catalog::get(g).labels()) CHECK(parse_label(g, label_to_string(l)) == l);
    CHECK(label_to_string(WeightLabel::mik(2, 3)) == "M2,3");
    CHECK(label_to_string(WeightLabel::mxy(1, 0)) == "Mxy:1,0");
    CHECK(parse_label(g, " e:rho3 ") == WeightLabel::e_rho(3));
    CHECK_THROWS_AS(parse_label(g, "q:chi1"), ParseError);
    CHECK_THROWS_AS(parse_label(g, "Mx:0"), ParseError);
    CHECK_THROWS_AS(parse_label(g, "e:chi5"), DomainError);
  }

  TEST_CASE("index sets") {
    const Dihedral g(12);
    const IndexSet I = parse_index_set(g, "(3,6),(1,6)");
    CHECK(index_set_to_string(I) == "(1,6),(3,6)");
    CHECK(parse_index_set(g, index_set_to_string(I)) == I);
    CHECK(parse_index_set(g, "").empty());
    CHECK_THROWS_AS(parse_index_set(g, "(1,6"), ParseError);
    CHECK_THROWS_AS(parse_index_set(g, "(1,6),(2,3)"), IndexSetError);
  }

  TEST_CASE("characters round trip") {
    const Dihedral g(12);
    GradedCharacter c;
    c.add(0, WeightLabel::mx(0, 0));
    c.add(-1, WeightLabel::mxy(0, 0), 2);
    c.add(-2, WeightLabel::mx(0, 0));
    const auto j = character_to_json(g, c);
    CHECK(j[1]["dimension"] == 12);
    CHECK(j[1]["summands"][0]["label"] == "Mxy:0,0");
    CHECK(character_from_json(g, j) == c);
    CHECK(character_from_json(g, nlohmann::json::array()).layers.empty());
    CHECK_THROWS_AS(character_from_json(g, nlohmann::json::object()), ParseError);
    CHECK(character_table(g, c).find("2*Mxy:0,0") != std::string::npos);
  }
}
