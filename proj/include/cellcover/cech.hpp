#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cellcover/complex.hpp"
#include "cellcover/covers.hpp"
#include "cellcover/finite_group.hpp"
#include "cellcover/permutation.hpp"

namespace cellcover {

/// Patches of a good cover, the connected components of pairwise overlaps
/// and of triple overlaps. Cocycles into a discrete group are constant on
/// each overlap component, so components (not mere intersection flags) are
/// the unit of data.
struct NerveSpec {
  struct Overlap {
    std::string first, second;
    std::vector<std::string> components;
    std::size_t line = 0;
  };
  struct TripleComponent {
    std::string name;
    /// One component of each of the three pairwise overlaps, in any order.
    std::array<std::string, 3> pair_components;
  };
  struct Triple {
    std::array<std::string, 3> patches;
    std::vector<TripleComponent> components;
    std::size_t line = 0;
  };

  std::vector<std::string> patches;
  std::vector<Overlap> overlaps;
  std::vector<Triple> triples;
};

/// Vertices = patches, edges = overlap components oriented from the earlier
/// patch to the later one, faces = triple components bounded by their three
/// pair components. Throws InconsistentInclusion on bad references.
CellComplex nerve_complex(const NerveSpec& spec);

/// Labels on oriented nerve edges. Either orientation may be given; a
/// missing one is the inverse of the other.
struct Cocycle {
  std::vector<std::optional<std::size_t>> forward;
  std::vector<std::optional<std::size_t>> backward;

  static Cocycle from_forward(std::vector<std::size_t> labels);
  /// Label of an oriented edge letter. Throws MissingLabel.
  std::size_t value(const FiniteGroup& g, const Letter& l) const;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

/// Product of labels along an edge word, left to right.
std::size_t evaluate(const FiniteGroup& g, const Cocycle& c, const Word& w);

/// Inversion symmetry plus the triangle condition on every face.
bool validate_cocycle(const CellComplex& nerve, const FiniteGroup& g, const Cocycle& c);

/// Exists k: patch -> G with c2(m,n) = k(m)^-1 c1(m,n) k(n)? With `pointed`,
/// k is pinned to the identity at the basepoint patch.
bool cohomologous(const CellComplex& nerve, const FiniteGroup& g, const Cocycle& c1,
                  const Cocycle& c2, bool pointed = false);

/// Holonomy homomorphism on the generators of presentation(nerve).
std::vector<std::size_t> cocycle_to_hom(const CellComplex& nerve, const FiniteGroup& g,
                                        const Cocycle& c);

struct ClassifyOptions {
  /// Upper bound on |G|^#edges labelings to scan.
  std::size_t max_labelings = 50'000'000;
  bool pointed = false;
};

/// One representative per cohomology class, each the lexicographically least
/// labeling of its class, in increasing order.
std::vector<Cocycle> classify(const CellComplex& nerve, const FiniteGroup& g,
                              const ClassifyOptions& options = {});

/// Principal G-cover attached to a homomorphism pi1 -> G.
struct GCover {
  CoveringComplex cover;
  FiniteGroup group;
  /// left_action[g] sends sheet x to sheet g*x; commutes with projection.
  std::vector<Permutation> left_action;

  bool connected() const { return cover.table.is_transitive(); }
};

/// Fiber = G, generator x acts by right multiplication with hom[x]. Throws
/// NotAHomomorphism when a relator is not killed.
GCover hom_to_gcover(const CellComplex& c, const std::vector<std::size_t>& hom,
                     const FiniteGroup& g);

/// Transition labels of a G-cover read off its sheets: edge e gets the
/// sheet reached by lifting e from the identity sheet.
Cocycle read_cocycle(const GCover& gc);

}  // namespace cellcover
