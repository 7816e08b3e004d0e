#pragma once

#include <cstddef>
#include <vector>

#include "cellcover/complex.hpp"
#include "cellcover/word.hpp"

namespace cellcover {

/// An edge word walked from a start vertex.
struct TracedPath {
  Word word;
  std::size_t start = 0;
  std::size_t end = 0;
  /// start, then the vertex reached after each letter.
  std::vector<std::size_t> visited;

  friend bool operator==(const TracedPath&, const TracedPath&) = default;
};

/// Walks `w` from `start`. Throws NotAPath with the 0-based position of the
/// first letter that does not leave from the current vertex.
TracedPath trace_path(const CellComplex& c, const Word& w, std::size_t start);

Word boundary_word(const CellComplex& c, std::size_t face);

/// Vertex the stored boundary of `face` starts (and ends) at.
std::size_t boundary_corner(const CellComplex& c, std::size_t face);

}  // namespace cellcover
