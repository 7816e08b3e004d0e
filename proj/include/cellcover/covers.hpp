#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cellcover/complex.hpp"
#include "cellcover/paths.hpp"
#include "cellcover/permutation.hpp"
#include "cellcover/pi1.hpp"
#include "cellcover/word.hpp"

namespace cellcover {

inline constexpr std::size_t default_coset_budget = 1'000'000;

/// A right action of a presentation's generators on {0, ..., n-1}.
///
/// Tables produced by enumerate_cosets are transitive and canonically
/// labelled: breadth-first from coset 0, generators scanned in ascending
/// order (positive letters only).
class CosetTable {
 public:
  CosetTable() = default;
  /// Throws InvalidArgument when the permutations disagree in size or count.
  CosetTable(std::vector<std::string> generators, std::vector<Permutation> action);

  std::size_t size() const noexcept { return n_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const Permutation& action(std::size_t generator) const { return action_.at(generator); }
  const std::vector<Permutation>& actions() const noexcept { return action_; }

  std::size_t act(std::size_t coset, const Letter& l) const;
  bool is_transitive() const;
  /// Every coset reachable from 0 gets a positive word leading to it.
  const std::optional<Word>& schreier_rep(std::size_t coset) const { return reps_.at(coset); }
  /// Generators of the stabilizer of coset 0 (nontrivial ones only).
  std::vector<Word> schreier_generators() const;

  /// Relabels the orbit of coset 0 breadth-first, dropping other points.
  CosetTable canonical() const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.generators_ == b.generators_ && a.action_ == b.action_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> generators_;
  std::vector<Permutation> action_;
  std::vector<Permutation> inverse_;
  std::vector<std::optional<Word>> reps_;
};

/// Subgroup given by generating words over the presentation's generators.
struct SubgroupWords {
  std::vector<Word> words;
};

/// Subgroup given as the stabilizer of point 0 under generator permutations.
struct MonodromyHom {
  std::vector<Permutation> images;
};

using SubgroupSpec = std::variant<SubgroupWords, MonodromyHom>;

/// HLT coset enumeration (words) or orbit relabelling (monodromy). Throws
/// BudgetExceeded when more than `budget` cosets get defined and
/// InvalidMonodromy when a relator acts nontrivially.
CosetTable enumerate_cosets(const Presentation& p, const SubgroupSpec& s,
                            std::size_t budget = default_coset_budget);

/// Applies the letters of `w` left to right starting from `start`.
std::size_t monodromy_action(const CosetTable& t, const Word& w, std::size_t start);

/// True when some relabelling of points carries one action onto the other.
bool tables_conjugate(const CosetTable& a, const CosetTable& b);

/// Combinatorial covering complex: cell (x, i) sits over base cell x on sheet i.
///
/// Vertex (v, i) is the end of the lift of the tree path to v started on
/// sheet i of the basepoint fiber.
struct CoveringComplex {
  CellComplex base;
  Presentation base_presentation;
  CosetTable table;
  CellComplex total;
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> edge_projection;
  std::vector<std::size_t> face_projection;

  std::size_t sheets() const noexcept { return table.size(); }
  CellId project(CellId total_cell) const;
  std::size_t sheet(CellId total_cell) const;
  /// Total cell over `base_cell` on `sheet`.
  CellId lift(CellId base_cell, std::size_t sheet) const;

  // base cell index -> position among the covered base cells
  std::vector<std::optional<std::size_t>> vertex_slot, edge_slot, face_slot;
};

/// Builds the cover over the basepoint component of `c`. Throws
/// TableMismatch when the table's generators are not c's non-tree edges.
CoveringComplex build_cover(const CellComplex& c, const CosetTable& t);

/// Unique lift of an edge word starting at the basepoint, from `fiber_start`.
TracedPath lift_path(const CoveringComplex& cov, const Word& w, std::size_t fiber_start);

/// Lifting criterion: does a map with generator images `images` (words in the
/// cover's base generators) lift through the cover? Throws
/// InvalidHomomorphism when a source relator's image acts nontrivially.
bool lifting_criterion(const CosetTable& t, const std::vector<Word>& images,
                       const std::vector<Word>& source_relators);

/// Sheet condition at the level of incidences: around every vertex the
/// half-edges and face corners project bijectively onto those downstairs.
bool satisfies_sheet_condition(const CoveringComplex& cov);

/// Image of pi1 of the cover in the base group, as generator words.
std::vector<Word> subgroup_of_cover(const CoveringComplex& cov);

struct DeckGroup {
  /// elements[0] is the identity.
  std::vector<Permutation> elements;
  /// product[i][j] = index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> product;
  bool regular = false;

  std::size_t order() const noexcept { return elements.size(); }
  bool is_commutative() const;
  bool is_cyclic() const;
};

/// Deck group as fiber permutations, computed from N(H)/H. Requires a
/// transitive table.
DeckGroup deck_group(const CosetTable& t);
DeckGroup deck_group(const CoveringComplex& cov);

/// Cell map (x, i) -> (x, perm(i)); checks it is an automorphism of the total
/// complex commuting with projection.
bool is_cell_automorphism(const CoveringComplex& cov, const Permutation& fiber_perm);

/// `coset generator -> coset` lines, 1-based cosets.
std::string format_table(const CosetTable& t);

}  // namespace cellcover
