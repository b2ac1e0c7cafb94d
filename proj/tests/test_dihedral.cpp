#include <doctest.h>

#include "ddm/dihedral.hpp"
#include "ddm/errors.hpp"

using namespace ddm;

TEST_SUITE("dihedral") {
  TEST_CASE("multiplication") {
    const Dihedral g(12);
    CHECK(g.mul(g.y(), g.x()) == g.elt(1, 11));
    CHECK(g.mul(g.x(), g.x()) == g.e());
    CHECK(g.mul(g.mul(g.x(), g.y()), g.mul(g.x(), g.y())) == g.e());
    CHECK(g.mul(g.y(5), g.y(9)) == g.y(2));
    for (const auto& h : g.elements()) CHECK(g.mul(h, g.inv(h)) == g.e());
  }

  TEST_CASE("conjugacy classes") {
    const Dihedral g(12);
    const auto reps = g.class_representatives();
    CHECK(reps.size() == 9);
    std::size_t total = 0;
    for (const auto& r : reps) total += g.conjugacy_class(r).size();
    CHECK(total == 24);
    CHECK(g.conjugacy_class(g.y(6)).size() == 1);
    CHECK(g.conjugacy_class(g.y(2)).size() == 2);
    CHECK(g.conjugacy_class(g.x()).size() == 6);
    CHECK(g.conj(g.x(), g.y()) == g.elt(1, 10));
  }

  TEST_CASE("centralizers") {
    const Dihedral g(12);
    const auto cx = g.centralizer(g.x());
    CHECK(cx == std::vector<GroupElt>{g.e(), g.y(6), g.x(), g.elt(1, 6)});
    CHECK(g.centralizer(g.y(3)).size() == 12);
    CHECK(g.centralizer(g.y(6)).size() == 24);
  }

  TEST_CASE("modulus restrictions") {
    CHECK_THROWS_AS(Dihedral(10), DomainError);
    CHECK_THROWS_AS(Dihedral(8), DomainError);
    CHECK_NOTHROW(Dihedral(16));
    CHECK_NOTHROW(Dihedral(10, true));
    CHECK_THROWS_AS(Dihedral(7, true), DomainError);
  }

  TEST_CASE("text form") {
    const Dihedral g(12);
    CHECK(g.to_string(g.e()) == "e");
    CHECK(g.to_string(g.y()) == "y");
    CHECK(g.to_string(g.elt(1, 5)) == "x*y^5");
    for (const auto& h : g.elements()) CHECK(g.parse(g.to_string(h)) == h);
    CHECK_THROWS_AS(g.parse("z"), ParseError);
  }
}
