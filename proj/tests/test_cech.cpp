#include <doctest.h>

#include <random>

#include "cellcover/cech.hpp"
#include "cellcover/error.hpp"
#include "support.hpp"

using namespace cellcover;
using namespace testing_support;

TEST_CASE("nerve shapes") {
  const CellComplex graph = nerve_complex(triangle_nerve(false));
  CHECK(graph.vertex_count() == 3);
  CHECK(graph.edge_count() == 3);
  CHECK(graph.face_count() == 0);
  const CellComplex filled = nerve_complex(triangle_nerve(true));
  CHECK(filled.face_count() == 1);
  CHECK(presentation(filled).generators.size() == 1);
  CHECK(abelianization(presentation(filled)).is_trivial());
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  CHECK(arcs.edge_count() == 2);
  CHECK(arcs.edge(0).source == 0);
  CHECK(arcs.edge(1).target == 1);
  CHECK(arcs.basepoint() == 0);
}

TEST_CASE("inconsistent inclusions") {
  NerveSpec bad = triangle_nerve(false);
  bad.triples.push_back({{"P1", "P2", "P3"}, {{"t", {"c12", "c12", "c13"}}}});
  CHECK_THROWS_AS(nerve_complex(bad), Error);
  NerveSpec missing = triangle_nerve(false);
  missing.triples.push_back({{"P1", "P2", "P3"}, {{"t", {"c12", "c23", "nope"}}}});
  try {
    nerve_complex(missing);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentInclusion);
  }
  NerveSpec stranger = two_arc_nerve();
  stranger.overlaps.push_back({"P1", "P9", {"x"}});
  CHECK_THROWS_AS(nerve_complex(stranger), Error);
}

TEST_CASE("cocycle validation") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const CellComplex filled = nerve_complex(triangle_nerve(true));
  CHECK(validate_cocycle(filled, z3, Cocycle::from_forward({0, 0, 0})));
  CHECK_FALSE(validate_cocycle(filled, z3, Cocycle::from_forward({1, 1, 1})));
  CHECK(validate_cocycle(filled, z3, Cocycle::from_forward({1, 2, 0})));
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  CHECK(validate_cocycle(arcs, z3, Cocycle::from_forward({0, 1})));

  Cocycle asym = Cocycle::from_forward({0, 1});
  asym.backward[1] = 1;
  CHECK_FALSE(validate_cocycle(arcs, z3, asym));
  Cocycle inverse_only;
  inverse_only.forward = {0, std::nullopt};
  inverse_only.backward = {std::nullopt, 2};
  CHECK(validate_cocycle(arcs, z3, inverse_only));
  CHECK(cohomologous(arcs, z3, inverse_only, Cocycle::from_forward({0, 1})));

  Cocycle hole;
  hole.forward = {0, std::nullopt};
  hole.backward = {std::nullopt, std::nullopt};
  try {
    validate_cocycle(arcs, z3, hole);
    FAIL("expected MissingLabel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingLabel);
  }
}

TEST_CASE("cohomologous cocycles on two arcs") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  const Cocycle a = Cocycle::from_forward({0, 1});
  CHECK(cohomologous(arcs, z3, a, a));
  CHECK(cohomologous(arcs, z3, a, Cocycle::from_forward({2, 0})));
  CHECK_FALSE(cohomologous(arcs, z3, a, Cocycle::from_forward({0, 2})));
}

TEST_CASE("holonomy") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  CHECK(cocycle_to_hom(arcs, z3, Cocycle::from_forward({0, 0})) == std::vector<std::size_t>{0});
  CHECK(cocycle_to_hom(arcs, z3, Cocycle::from_forward({0, 1})) == std::vector<std::size_t>{1});
  // The filled triangle is simply connected: its one generator is killed by the face.
  CHECK(cocycle_to_hom(nerve_complex(triangle_nerve(true)), z3, Cocycle::from_forward({1, 2, 0})) ==
        std::vector<std::size_t>{0});
  CHECK(cocycle_to_hom(nerve_complex(triangle_nerve(false)), z3, Cocycle::from_forward({1, 2, 0})) ==
        std::vector<std::size_t>{0});
  CHECK(cocycle_to_hom(nerve_complex(triangle_nerve(false)), z3, Cocycle::from_forward({1, 1, 0})) ==
        std::vector<std::size_t>{2});
}

TEST_CASE("classification counts") {
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  CHECK(classify(arcs, FiniteGroup::cyclic(3)).size() == 3);
  CHECK(classify(arcs, FiniteGroup::symmetric(3)).size() == 3);
  CHECK(classify(nerve_complex(triangle_nerve(true)), FiniteGroup::symmetric(3)).size() == 1);
  CHECK(classify(nerve_complex(triangle_nerve(false)), FiniteGroup::cyclic(4)).size() == 4);
}

TEST_CASE("classification returns least representatives") {
  const auto reps = classify(nerve_complex(two_arc_nerve()), FiniteGroup::cyclic(3));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == Cocycle::from_forward({0, 0}));
  CHECK(reps[1] == Cocycle::from_forward({0, 1}));
  CHECK(reps[2] == Cocycle::from_forward({0, 2}));
}

TEST_CASE("pointed classification skips conjugation") {
  const CellComplex arcs = nerve_complex(two_arc_nerve());
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(classify(arcs, s3, {1'000'000, true}).size() == 6);
  CHECK(count_hom_classes(presentation(arcs), s3, true) == 6);
}

TEST_CASE("classification budget") {
  try {
    classify(nerve_complex(two_arc_nerve()), FiniteGroup::symmetric(3), {10, false});
    FAIL("expected SizeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBudgetExceeded);
  }
}

TEST_CASE("G-covers from homomorphisms") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const GCover three = hom_to_gcover(circle(), {1}, z3);
  CHECK(three.connected());
  CHECK(three.cover.total.vertex_count() == 3);
  CHECK(deck_group(three.cover).order() == 3);
  CHECK(deck_group(three.cover).regular);

  const GCover split = hom_to_gcover(circle(), {0}, z3);
  CHECK_FALSE(split.connected());
  CHECK(connected_components(split.cover.total).count == 3);

  const GCover dbl = hom_to_gcover(torus(), {1, 0}, FiniteGroup::cyclic(2));
  CHECK(dbl.connected());
  CHECK(euler_characteristic(dbl.cover.total) == 0);

  CHECK_THROWS_AS(hom_to_gcover(projective_plane(), {1}, z3), Error);
}

TEST_CASE("left multiplication commutes with projection") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const GCover gc = hom_to_gcover(fig8(), {1, 3}, s3);
  for (const Permutation& l : gc.left_action) CHECK(is_cell_automorphism(gc.cover, l));
}

TEST_CASE("property: cover connected iff the image generates G") {
  std::mt19937 rng(99);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<std::size_t> hom{rng() % 6, rng() % 6};
    const GCover gc = hom_to_gcover(fig8(), hom, s3);
    CHECK(gc.connected() == (s3.generated_subgroup(hom).size() == 6));
  }
}

TEST_CASE("property: cocycle read back from the G-cover is cohomologous") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (const NerveSpec& spec : {two_arc_nerve(), triangle_nerve(false), triangle_nerve(true)}) {
    const CellComplex nerve = nerve_complex(spec);
    for (const Cocycle& c : classify(nerve, s3, {1'000'000, true})) {
      const GCover gc = hom_to_gcover(nerve, cocycle_to_hom(nerve, s3, c), s3);
      const Cocycle back = read_cocycle(gc);
      CHECK(validate_cocycle(nerve, s3, back));
      CHECK(cohomologous(nerve, s3, c, back));
    }
  }
}

TEST_CASE("property: cohomologous iff holonomies are conjugate") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const CellComplex nerve = nerve_complex(triangle_nerve(false));
  std::vector<Cocycle> all;
  for (std::size_t x = 0; x < 216; ++x) all.push_back(Cocycle::from_forward({x / 36, x / 6 % 6, x % 6}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Cocycle& a = all[rng() % all.size()];
    const Cocycle& b = all[rng() % all.size()];
    const auto ha = cocycle_to_hom(nerve, s3, a);
    const auto hb = cocycle_to_hom(nerve, s3, b);
    bool conjugate = false;
    for (std::size_t g = 0; g < 6; ++g) {
      bool all_match = true;
      for (std::size_t i = 0; i < ha.size(); ++i) all_match &= s3.conjugate(ha[i], g) == hb[i];
      conjugate |= all_match;
    }
    CHECK(cohomologous(nerve, s3, a, b) == conjugate);
  }
}
