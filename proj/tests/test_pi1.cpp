#include <doctest.h>

#include <random>

#include "cellcover/error.hpp"
#include "cellcover/pi1.hpp"
#include "support.hpp"

using namespace cellcover;
using namespace testing_support;

namespace {

const std::vector<std::string> ab{"a", "b"};

Word word(std::string_view text) { return parse_word(text, ab); }

}  // namespace

TEST_CASE("word parsing and formatting") {
  CHECK(format_word(word("a -b a"), ab) == "a -b a");
  CHECK(word("1").empty());
  CHECK(format_word(Word{}, ab) == "1");
  CHECK_THROWS_AS(parse_word("c", ab), Error);
  CHECK_THROWS_AS(parse_word("a --b", ab), Error);
}

TEST_CASE("free and cyclic reduction") {
  CHECK(reduce_word(word("a b -b -a b")) == word("b"));
  CHECK(cyclically_reduce(word("-a b a")) == word("b"));
  CHECK(normalize_relator(word("-b -a b a")) == word("a -b -a b"));
  CHECK(normalize_relator(word("b -b a b -a")) == word("b"));
  CHECK(normalize_relator(word("b -a -a b")) == word("-a -a b b"));
  CHECK(least_rotation(word("b a")) == word("a b"));
}

TEST_CASE("spanning trees pick the lowest edge") {
  CHECK(spanning_tree(circle(), 0).edge_count() == 0);
  const SpanningTree s = spanning_tree(sphere(), 0);
  CHECK(s.tree_edge == std::vector<bool>{true, false});
  CHECK(spanning_tree(disk(), 0).tree_edge == std::vector<bool>{true, false});
  CHECK(spanning_tree(sphere(), 0, EdgeOrder::descending).tree_edge ==
        std::vector<bool>{false, true});
}

TEST_CASE("presentations of golden complexes") {
  CHECK(format_presentation(presentation(circle())) == "gens: a ; rels:");
  CHECK(format_presentation(presentation(fig8())) == "gens: a,b ; rels:");
  CHECK(format_presentation(presentation(torus())) == "gens: a,b ; rels: a b -a -b");
  CHECK(format_presentation(presentation(sphere())) == "gens: e2 ; rels: -e2 | -e2");
  const Presentation d = presentation(disk());
  CHECK(d.generators == std::vector<std::string>{"e2"});
  CHECK(abelianization(d).is_trivial());
  CHECK(abelianization(presentation(sphere())).is_trivial());
  CHECK(abelianization(presentation(torus())).rank == 2);
  CHECK(format_abelian(abelianization(presentation(projective_plane()))) == "Z/2");
  CHECK(format_abelian(abelianization(presentation(klein_bottle()))) == "Z + Z/2");
}

TEST_CASE("unknown basepoint") {
  CHECK_THROWS_AS(presentation(circle(), 5), Error);
}

TEST_CASE("presentation text round trip") {
  const Presentation p = presentation(torus());
  const Presentation q = parse_presentation(format_presentation(p));
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
}

TEST_CASE("property: Euler characteristic from the presentation") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const CellComplex c = random_complex(rng);
    for (EdgeOrder order : {EdgeOrder::ascending, EdgeOrder::descending}) {
      const Presentation p = presentation(c, 0, order);
      const long long chi = 1 - static_cast<long long>(p.generators.size()) +
                            static_cast<long long>(p.raw_relator_count());
      CHECK(chi == euler_characteristic(c));
    }
  }
}

TEST_CASE("property: abelian invariants do not depend on the tree or basepoint") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const CellComplex c = random_complex(rng);
    const FgAbelian base = abelianization(presentation(c, 0));
    CHECK(abelianization(presentation(c, 0, EdgeOrder::descending)) == base);
    CHECK(abelianization(presentation(c, c.vertex_count() - 1)) == base);
  }
}

TEST_CASE("van Kampen: two disks over a circle give a sphere") {
  const Presentation disk_p = presentation(disk());
  const Presentation circle_p = presentation(circle());
  // The boundary circle e1 e2 of the disk reads as the generator e2.
  const GeneratorMap leg{{0, parse_word("e2", disk_p.generators)}};
  const Presentation glued = van_kampen_pushout(disk_p, disk_p, circle_p, leg, leg);
  CHECK(glued.generators == std::vector<std::string>{"e2", "e2_2"});
  CHECK(abelianization(glued).is_trivial());
  CHECK(abelianization(glued) == abelianization(presentation(sphere())));
}

TEST_CASE("van Kampen: wedge of circles is free") {
  const Presentation c = presentation(circle());
  const Presentation point;
  const Presentation wedge = van_kampen_pushout(c, c, point, {}, {});
  CHECK(format_presentation(wedge) == "gens: a,a_2 ; rels:");
}

TEST_CASE("van Kampen errors") {
  const Presentation c = presentation(circle());
  CHECK_THROWS_AS(van_kampen_pushout(c, c, c, {}, {{0, Word{pos(0)}}}), Error);
  CHECK_THROWS_AS(van_kampen_pushout(c, c, c, {{0, Word{pos(3)}}}, {{0, Word{pos(0)}}}), Error);
}
