#include <doctest.h>

#include <sstream>

#include "cellcover/cli.hpp"
#include "cellcover/cxc.hpp"
#include "cellcover/error.hpp"
#include "cellcover/universal_cover.hpp"
#include "support.hpp"

using namespace cellcover;
using namespace testing_support;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = std::string(CELLCOVER_FIXTURES) + "/" + a.substr(1);
  }
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cxc parsing") {
  CHECK(parse_cxc("vertex v\nedge a v v") == circle());
  CHECK(parse_cxc("vertex v\nedge a v v\nedge b v v\nface F a b -a -b") == torus());
  try {
    parse_cxc("edge a v v");
    FAIL("expected DanglingReference");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DanglingReference);
    CHECK(e.position() == 1);
  }
  try {
    parse_cxc("vertex v\n\nvertex 9w\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_cxc("vertex v\nbasepoint v\nbasepoint v\n"), Error);
  CHECK_THROWS_AS(parse_cxc("polygon P\n"), Error);
}

TEST_CASE("cxc round trip") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const CellComplex c = random_complex(rng);
    CHECK(parse_cxc(emit_cxc(c)) == c);
  }
  const CellComplex charted =
      parse_cxc("vertex v\nedge a v v\nchart U v a\nbasepoint v\n");
  CHECK(parse_cxc(emit_cxc(charted)) == charted);
}

TEST_CASE("cover emission lists projections") {
  const CosetTable t =
      enumerate_cosets(presentation(circle()), SubgroupWords{{Word{pos(0), pos(0), pos(0)}}});
  const std::string text = emit_cxc(build_cover(circle(), t));
  std::size_t vertex_lines = 0;
  for (const char* v : {"v_1", "v_2", "v_3"}) {
    if (text.find(std::string("# projection ") + v + " -> v\n") != std::string::npos) ++vertex_lines;
  }
  CHECK(vertex_lines == 3);
  CHECK(parse_cxc(text).vertex_count() == 3);
}

TEST_CASE("lazy emission needs a finite complex") {
  UniversalCover u = universal_cover(circle());
  try {
    emit_cxc(u.total(), 500);
    FAIL("expected InfiniteComplex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteComplex);
  }
  UniversalCover s = universal_cover(sphere());
  CHECK(parse_cxc(emit_cxc(s.total(), 500)).face_count() == 2);
}

TEST_CASE("nerve and cocycle files") {
  const NerveSpec spec = parse_nerve("patch A\npatch B\npatch C\noverlap A B : x y\n"
                                     "overlap B C : z\noverlap A C : w\ntriple A B C : t1(x, z,w) t2(y,z,w)\n");
  CHECK(spec.patches.size() == 3);
  REQUIRE(spec.triples.size() == 1);
  CHECK(spec.triples[0].components.size() == 2);
  const CellComplex n = nerve_complex(spec);
  CHECK(n.face_count() == 2);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const Cocycle c = parse_cocycle("label x + -> g1\nlabel y - -> 2\nlabel z + -> e\nlabel w + -> g1\n", n, z3);
  CHECK(validate_cocycle(n, z3, c));
  CHECK(parse_cocycle(emit_cocycle(n, c), n, z3) == c);
  CHECK_THROWS_AS(parse_nerve("triple A B C : t1(x,y)\n"), Error);
  CHECK_THROWS_AS(parse_cocycle("label x ? -> g1\n", n, z3), Error);
  CHECK_THROWS_AS(parse_group_table("0 1\n1\n"), Error);
  CHECK_THROWS_AS(parse_group_table("0 1\n0 1\n"), Error);
}

TEST_CASE("cli: presentations and invariants") {
  CHECK(run({"pi1", "@torus.cxc"}).out == "gens: a,b ; rels: a b -a -b\n");
  CHECK(run({"pi1", "@torus.cxc"}).status == 0);
  CHECK(run({"euler", "@sphere.cxc"}).out == "2\n");
  CHECK(run({"components", "@two_circles.cxc"}).out == "components: 2\ncomponent 1: v\ncomponent 2: w\n");
  CHECK(run({"abelianize", "@torus.cxc"}).out == "Z^2\n");
  CHECK(run({"abelianize", "--matrix", "@z2_z3.mat"}).out == "Z/6\n");
  CHECK(run({"abelianize", "@disk.cxc"}).out == "0\n");
}

TEST_CASE("cli: covers") {
  const Run cover = run({"cover", "@circle.cxc", "--subgroup", "a a a"});
  CHECK(cover.status == 0);
  CHECK(parse_cxc(cover.out).vertex_count() == 3);
  const Run deck = run({"deck", "@fig8.cxc", "--monodromy", "a:(2 1 3);b:(1 3 2)"});
  CHECK(deck.out.rfind("order: 1\nregular: no\n", 0) == 0);
  const Run lift = run({"lift", "@circle.cxc", "--subgroup", "a a a", "--path", "a", "--start", "1"});
  CHECK(lift.out == "lift: a_1\nend: v_2\nsheet: 2\n");
  CHECK(run({"liftcheck", "@circle.cxc", "--subgroup", "a a a", "--map", "a: a a"}).out == "NO\n");
  CHECK(run({"liftcheck", "@circle.cxc", "--subgroup", "a a a", "--map", "a: a a a"}).out == "YES\n");
  CHECK(run({"vankampen", "@circle.cxc", "@circle.cxc", "@circle.cxc", "--map", "a: a", "--map", "a: a a"}).out ==
        "gens: a,a_2 ; rels: a -a_2 -a_2\n");
}

TEST_CASE("cli: cech and torsion") {
  CHECK(run({"cech-classify", "@two_arcs.nerve", "--group", "@s3.table"}).out.rfind("classes: 3\n", 0) == 0);
  const Run check = run({"cech-check", "@two_arcs.nerve", "@two_arcs_a.cocycle", "--group", "@z3.table",
                         "--against", "@two_arcs_b.cocycle"});
  CHECK(check.out == "valid: yes\nholonomy: c2=g1\ncohomologous: yes\n");
  CHECK(run({"torsion", "--rank", "2", "--m", "3"}).out == "structure: Z/3 + Z/3\norder: 9\n");
  CHECK(run({"torsion", "@torus.cxc", "--m", "2"}).out == "structure: Z/2 + Z/2\norder: 4\n");
}

TEST_CASE("cli: exit codes and diagnostics") {
  const Run dangling = run({"euler", "@dangling.cxc"});
  CHECK(dangling.status == 1);
  CHECK(dangling.err.find("dangling.cxc:1: DanglingReference") != std::string::npos);
  CHECK(std::count(dangling.err.begin(), dangling.err.end(), '\n') == 1);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"cover", "@circle.cxc"}).status == 2);
  CHECK(run({"cover", "@circle.cxc", "--subgroup", "a --a"}).status == 2);
  CHECK(run({"cover", "@circle.cxc", "--subgroup", "q"}).status == 1);
  CHECK(run({"torsion", "@torus.cxc", "--m", "x"}).status == 2);
  CHECK(run({"torsion", "@sphere.cxc", "--m", "2"}).status == 0);
  CHECK(run({"torsion", "--rank", "1", "--m", "0"}).status == 1);
  CHECK(run({"cover", "@fig8.cxc", "--subgroup", "a", "--budget", "20"}).status == 1);
  CHECK(run({"euler", "@missing.cxc"}).status == 2);
  const Run twice = run({"cover", "@circle.cxc", "--subgroup", "a", "--monodromy", "a:(1)"});
  CHECK(twice.status == 2);
}
