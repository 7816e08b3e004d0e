#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cellcover/abelian.hpp"
#include "cellcover/complex.hpp"
#include "cellcover/lazy_complex.hpp"
#include "cellcover/word.hpp"

namespace cellcover {

enum class EdgeOrder { ascending, descending };

/// Breadth-first maximal tree of the basepoint's component.
struct SpanningTree {
  struct Parent {
    std::size_t vertex = 0;
    std::size_t edge = 0;
    /// `plus` when the edge runs parent -> child.
    Sign sign = Sign::plus;
  };

  std::size_t root = 0;
  std::vector<bool> tree_edge;                 // by edge index
  std::vector<std::optional<Parent>> parent;   // by vertex index; root and other components empty
  std::vector<bool> reached;                   // vertices of the root's component

  bool contains_edge(std::size_t e) const { return tree_edge.at(e); }
  std::size_t edge_count() const;
  /// Edge word of the tree path root -> v.
  Word path_to(std::size_t v) const;
};

SpanningTree spanning_tree(const CellComplex& c, std::size_t base,
                           EdgeOrder order = EdgeOrder::ascending);

/// A finitely presented group. Relators are words over generator indices.
///
/// `generator_edges` is filled when the presentation was read off a complex:
/// generator i is the non-tree edge generator_edges[i].
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::size_t> generator_edges;
  std::optional<std::size_t> basepoint;
  /// Relators that reduced to the empty word and were dropped.
  std::size_t discarded_relators = 0;

  std::size_t raw_relator_count() const { return relators.size() + discarded_relators; }
  std::optional<std::size_t> generator_of_edge(std::size_t edge) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Cyclic reduction followed by rotation to the least rotation. Empty words
/// stay empty.
Word normalize_relator(const Word& w);

/// Generators are the non-tree edges of the base component in ascending
/// order; one relator per face of that component (tree letters deleted,
/// normalized, empties discarded).
Presentation presentation(const CellComplex& c, std::size_t base,
                          EdgeOrder order = EdgeOrder::ascending);
Presentation presentation(const CellComplex& c);
/// Presentation of a generated complex at its basepoint. Throws
/// InfiniteComponent when the component does not close within `budget` cells.
Presentation presentation(LazyComplex& c, std::size_t budget);

/// Rewrites an edge word of the complex as a generator word by deleting tree
/// letters. The result is not reduced.
Word to_generator_word(const Presentation& p, const Word& edge_word);

IntMatrix relation_matrix(const Presentation& p);
SmithForm abelianization(const Presentation& p);

/// Generator images for a pushout leg: entry i is the image of generator i
/// of the amalgamated group; missing entries are errors.
using GeneratorMap = std::map<std::size_t, Word>;

/// Amalgamated free product p1 *_{p0} p2. Generators of p2 are appended after
/// those of p1 (clashing names get a `_2` suffix).
Presentation van_kampen_pushout(const Presentation& p1, const Presentation& p2,
                                const Presentation& p0, const GeneratorMap& i1,
                                const GeneratorMap& i2);

/// `gens: a,b ; rels: a b -a -b | ...`
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

}  // namespace cellcover
