#include "cellcover/paths.hpp"

#include "cellcover/error.hpp"

namespace cellcover {

TracedPath trace_path(const CellComplex& c, const Word& w, std::size_t start) {
  if (start >= c.vertex_count()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(start));
  }
  TracedPath out{w, start, start, {start}};
  out.visited.reserve(w.size() + 1);
  std::size_t here = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].symbol >= c.edge_count()) {
      throw Error(ErrorCode::UnknownCell, "edge index " + std::to_string(w[i].symbol));
    }
    if (c.tail(w[i]) != here) {
      throw Error(ErrorCode::NotAPath,
                  "letter does not start at vertex '" + c.vertex(here).name + "'", i);
    }
    here = c.head(w[i]);
    out.visited.push_back(here);
  }
  out.end = here;
  return out;
}

Word boundary_word(const CellComplex& c, std::size_t face) {
  if (face >= c.face_count()) {
    throw Error(ErrorCode::UnknownCell, "face index " + std::to_string(face));
  }
  return c.face(face).boundary;
}

std::size_t boundary_corner(const CellComplex& c, std::size_t face) {
  return c.tail(boundary_word(c, face)[0]);
}

}  // namespace cellcover
