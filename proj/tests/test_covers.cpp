#include <doctest.h>

#include <random>

#include "cellcover/covers.hpp"
#include "cellcover/error.hpp"
#include "cellcover/universal_cover.hpp"
#include "support.hpp"

using namespace cellcover;
using namespace testing_support;

namespace {

CosetTable table_of(const CellComplex& c, std::string_view words) {
  const Presentation p = presentation(c);
  SubgroupWords s;
  std::string text(words);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    s.words.push_back(parse_word(text.substr(start, comma - start), p.generators));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return enumerate_cosets(p, s);
}

CosetTable monodromy(const CellComplex& c, std::vector<Permutation> images) {
  return enumerate_cosets(presentation(c), MonodromyHom{std::move(images)});
}

Permutation perm(std::string_view s) { return parse_image_list(s); }

}  // namespace

TEST_CASE("coset enumeration on small groups") {
  CHECK(table_of(circle(), "a a a").size() == 3);
  CHECK(table_of(fig8(), "a,b").size() == 1);
  CHECK(table_of(torus(), "a a,b").size() == 2);
  CHECK(table_of(projective_plane(), "1").size() == 2);
  CHECK(table_of(torus(), "a a,b b b,a b").size() == 1);
}

TEST_CASE("coset table is canonical") {
  const CosetTable t = table_of(circle(), "a a a");
  CHECK(t.action(0).images() == std::vector<std::size_t>{1, 2, 0});
  CHECK(format_table(t) == "1 a -> 2\n2 a -> 3\n3 a -> 1\n");
}

TEST_CASE("coset enumeration budget") {
  try {
    enumerate_cosets(presentation(fig8()), SubgroupWords{{Word{pos(0)}}}, 50);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("monodromy must respect relators") {
  CHECK_THROWS_AS(monodromy(torus(), {perm("(2 1 3)"), perm("(1 3 2)")}), Error);
  CHECK(monodromy(torus(), {perm("(2 3 1)"), perm("(3 1 2)")}).size() == 3);
}

TEST_CASE("covers of the circle and the wedge") {
  const CoveringComplex c3 = build_cover(circle(), table_of(circle(), "a a a"));
  CHECK(c3.total.vertex_count() == 3);
  CHECK(c3.total.edge_count() == 3);
  CHECK(euler_characteristic(c3.total) == 0);
  CHECK(satisfies_sheet_condition(c3));

  const CoveringComplex f2 = build_cover(fig8(), monodromy(fig8(), {perm("(2 1)"), perm("(1 2)")}));
  CHECK(f2.total.vertex_count() == 2);
  CHECK(f2.total.edge_count() == 4);
  CHECK(euler_characteristic(f2.total) == -2);
}

TEST_CASE("path lifting on the 3-fold circle cover") {
  const CoveringComplex c3 = build_cover(circle(), table_of(circle(), "a a a"));
  CHECK(c3.sheet(vertex_id(lift_path(c3, Word{pos(0)}, 0).end)) == 1);
  const TracedPath loop = lift_path(c3, Word{pos(0), pos(0), pos(0)}, 0);
  CHECK(loop.end == loop.start);
  CHECK_THROWS_AS(lift_path(c3, Word{pos(0)}, 3), Error);
}

TEST_CASE("lifting criterion examples") {
  const CosetTable t = table_of(circle(), "a a a");
  CHECK_FALSE(lifting_criterion(t, {Word{pos(0), pos(0)}}, {}));
  CHECK(lifting_criterion(t, {Word{pos(0), pos(0), pos(0)}}, {}));
  CHECK(lifting_criterion(t, {Word{}}, {}));
}

TEST_CASE("deck groups") {
  const DeckGroup c3 = deck_group(table_of(circle(), "a a a"));
  CHECK(c3.order() == 3);
  CHECK(c3.regular);
  CHECK(c3.is_cyclic());

  const DeckGroup irregular = deck_group(monodromy(fig8(), {perm("(2 1 3)"), perm("(1 3 2)")}));
  CHECK(irregular.order() == 1);
  CHECK_FALSE(irregular.regular);

  const DeckGroup trivial = deck_group(table_of(circle(), "a"));
  CHECK(trivial.order() == 1);
  CHECK(trivial.regular);
}

TEST_CASE("deck elements are cell automorphisms over the base") {
  std::mt19937 rng(5);
  const Presentation p = presentation(fig8());
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Permutation> gens{random_permutation(rng, n), random_permutation(rng, n)};
    const CosetTable t = enumerate_cosets(p, MonodromyHom{gens});
    const CoveringComplex cov = build_cover(fig8(), t);
    for (const Permutation& d : deck_group(t).elements) CHECK(is_cell_automorphism(cov, d));
  }
}

TEST_CASE("sheet condition holds for covers of complexes with faces") {
  std::mt19937 rng(17);
  for (const CellComplex& c : {torus(), klein_bottle(), sphere(), torus_family(3)}) {
    const Presentation p = presentation(c);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto gens = random_action(rng, p, n);
      if (!gens) continue;
      const CoveringComplex cov = build_cover(c, enumerate_cosets(p, MonodromyHom{*gens}));
      CHECK(satisfies_sheet_condition(cov));
      CHECK(euler_characteristic(cov.total) ==
            static_cast<long long>(cov.sheets()) * euler_characteristic(c));
    }
  }
}

TEST_CASE("subgroup of a cover recovers the table") {
  const CosetTable t = table_of(torus(), "a a,b b b");
  const CoveringComplex cov = build_cover(torus(), t);
  const CosetTable back = enumerate_cosets(presentation(torus()), SubgroupWords{subgroup_of_cover(cov)});
  CHECK(back == t);
}

TEST_CASE("mismatched table") {
  CHECK_THROWS_AS(build_cover(torus(), table_of(circle(), "a a")), Error);
}

TEST_CASE("universal cover recognizers") {
  CHECK(classify_pi1(presentation(circle())) == Pi1Class::free);
  CHECK(classify_pi1(presentation(torus())) == Pi1Class::free_abelian);
  CHECK(classify_pi1(presentation(sphere())) == Pi1Class::trivial);
  CHECK(classify_pi1(presentation(disk())) == Pi1Class::trivial);
  CHECK_FALSE(classify_pi1(presentation(projective_plane())).has_value());
  CHECK_THROWS_AS(universal_cover(projective_plane()), Error);
}

TEST_CASE("universal cover of the circle is a line") {
  UniversalCover u = universal_cover(circle());
  const CellId base = u.total().basepoint();
  CHECK(vertex_ball(u.total(), base, 4).size() == 9);
  CHECK(u.total().materialized(CellKind::face) == 0);
}

TEST_CASE("universal cover of the torus is a plane") {
  UniversalCover u = universal_cover(torus());
  CHECK(u.fiber_ball(2).size() == 25);
  const CellId v = u.total().basepoint();
  CHECK(u.total().star(v).size() == 9);
}

TEST_CASE("universal cover of the sphere is the sphere") {
  UniversalCover u = universal_cover(sphere());
  CHECK(euler_characteristic(u.total(), 100) == 2);
}
