#include <algorithm>
#include <tuple>

#include "cellcover/covers.hpp"
#include "cellcover/error.hpp"

namespace cellcover {

CellId CoveringComplex::project(CellId cell) const {
  switch (cell.kind) {
    case CellKind::vertex: return vertex_id(vertex_projection.at(cell.index));
    case CellKind::edge: return edge_id(edge_projection.at(cell.index));
    case CellKind::face: return face_id(face_projection.at(cell.index));
  }
  throw Error(ErrorCode::UnknownCell, "bad cell kind");
}

std::size_t CoveringComplex::sheet(CellId cell) const {
  if (!total.contains(cell)) throw Error(ErrorCode::UnknownCell, "not a cell of the cover");
  return cell.index % sheets();
}

CellId CoveringComplex::lift(CellId base_cell, std::size_t sheet) const {
  if (sheet >= sheets()) {
    throw Error(ErrorCode::UnknownCoset, "sheet " + std::to_string(sheet + 1));
  }
  const std::vector<std::optional<std::size_t>>* slots = nullptr;
  switch (base_cell.kind) {
    case CellKind::vertex: slots = &vertex_slot; break;
    case CellKind::edge: slots = &edge_slot; break;
    case CellKind::face: slots = &face_slot; break;
  }
  if (base_cell.index >= slots->size() || !(*slots)[base_cell.index]) {
    throw Error(ErrorCode::UnknownCell, "base cell is not covered");
  }
  return {base_cell.kind, *(*slots)[base_cell.index] * sheets() + sheet};
}

namespace {

/// Sheet change along one base letter: generator action for non-tree edges,
/// identity for tree edges.
std::size_t step(const CosetTable& t, const Presentation& p, std::size_t sheet, const Letter& l) {
  if (auto g = p.generator_of_edge(l.symbol)) return t.act(sheet, {*g, l.sign});
  return sheet;
}

std::string sheet_name(const std::string& base, std::size_t sheet) {
  return base + "_" + std::to_string(sheet + 1);
}

}  // namespace

CoveringComplex build_cover(const CellComplex& c, const CosetTable& t) {
  if (!c.basepoint()) throw Error(ErrorCode::UnknownVertex, "complex has no vertices");
  CoveringComplex cov;
  cov.base = c;
  cov.base_presentation = presentation(c);
  cov.table = t;
  const Presentation& p = cov.base_presentation;
  if (t.generators() != p.generators) {
    throw Error(ErrorCode::TableMismatch,
                "table generators do not match the complex's non-tree edges");
  }

  const SpanningTree tree = spanning_tree(c, *c.basepoint());
  const std::size_t n = t.size();

  cov.vertex_slot.assign(c.vertex_count(), std::nullopt);
  cov.edge_slot.assign(c.edge_count(), std::nullopt);
  cov.face_slot.assign(c.face_count(), std::nullopt);
  std::vector<std::size_t> base_vertices, base_edges, base_faces;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (!tree.reached[v]) continue;
    cov.vertex_slot[v] = base_vertices.size();
    base_vertices.push_back(v);
  }
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (!tree.reached[c.edge(e).source]) continue;
    cov.edge_slot[e] = base_edges.size();
    base_edges.push_back(e);
  }
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    if (!tree.reached[c.tail(c.face(f).boundary[0])]) continue;
    cov.face_slot[f] = base_faces.size();
    base_faces.push_back(f);
  }

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  auto vertex_at = [&](std::size_t v, std::size_t sheet) { return *cov.vertex_slot[v] * n + sheet; };
  auto edge_at = [&](std::size_t e, std::size_t sheet) { return *cov.edge_slot[e] * n + sheet; };

  for (std::size_t v : base_vertices) {
    for (std::size_t i = 0; i < n; ++i) {
      vertices.push_back({sheet_name(c.vertex(v).name, i)});
      cov.vertex_projection.push_back(v);
    }
  }
  for (std::size_t e : base_edges) {
    const Edge& edge = c.edge(e);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = step(t, p, i, pos(e));
      edges.push_back({sheet_name(edge.name, i), vertex_at(edge.source, i), vertex_at(edge.target, j)});
      cov.edge_projection.push_back(e);
    }
  }
  for (std::size_t f : base_faces) {
    const Face& face = c.face(f);
    for (std::size_t i = 0; i < n; ++i) {
      Word lifted;
      std::size_t sheet = i;
      for (const Letter& l : face.boundary) {
        if (l.sign == Sign::plus) {
          lifted.push_back({edge_at(l.symbol, sheet), Sign::plus});
          sheet = step(t, p, sheet, l);
        } else {
          sheet = step(t, p, sheet, l);
          lifted.push_back({edge_at(l.symbol, sheet), Sign::minus});
        }
      }
      if (sheet != i) {
        throw Error(ErrorCode::InvalidMonodromy,
                    "boundary of face '" + face.name + "' does not close on sheet " +
                        std::to_string(i + 1));
      }
      faces.push_back({sheet_name(face.name, i), std::move(lifted)});
      cov.face_projection.push_back(f);
    }
  }

  cov.total = CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces), {},
                                      vertex_at(*c.basepoint(), 0));
  return cov;
}

TracedPath lift_path(const CoveringComplex& cov, const Word& w, std::size_t fiber_start) {
  if (fiber_start >= cov.sheets()) {
    throw Error(ErrorCode::UnknownCoset, "coset " + std::to_string(fiber_start + 1));
  }
  (void)trace_path(cov.base, w, *cov.base.basepoint());

  Word lifted;
  std::size_t sheet = fiber_start;
  for (const Letter& l : w) {
    if (l.sign == Sign::plus) {
      lifted.push_back({cov.lift(edge_id(l.symbol), sheet).index, Sign::plus});
      sheet = step(cov.table, cov.base_presentation, sheet, l);
    } else {
      sheet = step(cov.table, cov.base_presentation, sheet, l);
      lifted.push_back({cov.lift(edge_id(l.symbol), sheet).index, Sign::minus});
    }
  }
  return trace_path(cov.total, lifted,
                    cov.lift(vertex_id(*cov.base.basepoint()), fiber_start).index);
}

bool lifting_criterion(const CosetTable& t, const std::vector<Word>& images,
                       const std::vector<Word>& source_relators) {
  for (const Word& w : images) {
    for (const Letter& l : w) {
      if (l.symbol >= t.generator_count()) {
        throw Error(ErrorCode::UnknownGenerator, "image uses generator " + std::to_string(l.symbol));
      }
    }
  }
  for (const Word& r : source_relators) {
    const Word image = substitute(r, images);
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (monodromy_action(t, image, c) != c) {
        throw Error(ErrorCode::InvalidHomomorphism,
                    "image of a source relator acts nontrivially on coset " + std::to_string(c + 1));
      }
    }
  }
  return std::all_of(images.begin(), images.end(),
                     [&](const Word& w) { return monodromy_action(t, w, 0) == 0; });
}

namespace {

using HalfEdge = std::pair<std::size_t, int>;                      // edge, +1 leaving / -1 arriving
using Corner = std::tuple<std::size_t, Letter, Letter>;              // face, letter in, letter out

std::vector<std::vector<HalfEdge>> half_edges(const CellComplex& c,
                                              const std::vector<std::size_t>* edge_map) {
  std::vector<std::vector<HalfEdge>> out(c.vertex_count());
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const std::size_t label = edge_map ? (*edge_map)[e] : e;
    out[c.edge(e).source].push_back({label, +1});
    out[c.edge(e).target].push_back({label, -1});
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

std::vector<std::vector<Corner>> corners(const CellComplex& c,
                                         const std::vector<std::size_t>* edge_map,
                                         const std::vector<std::size_t>* face_map) {
  std::vector<std::vector<Corner>> out(c.vertex_count());
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    const Word& b = c.face(f).boundary;
    auto relabel = [&](Letter l) {
      return Letter{edge_map ? (*edge_map)[l.symbol] : l.symbol, l.sign};
    };
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Letter in = b[(i + b.size() - 1) % b.size()];
      out[c.tail(b[i])].emplace_back(face_map ? (*face_map)[f] : f, relabel(in), relabel(b[i]));
    }
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace

bool satisfies_sheet_condition(const CoveringComplex& cov) {
  const auto up_edges = half_edges(cov.total, &cov.edge_projection);
  const auto down_edges = half_edges(cov.base, nullptr);
  const auto up_corners = corners(cov.total, &cov.edge_projection, &cov.face_projection);
  const auto down_corners = corners(cov.base, nullptr, nullptr);
  for (std::size_t v = 0; v < cov.total.vertex_count(); ++v) {
    const std::size_t below = cov.vertex_projection[v];
    if (up_edges[v] != down_edges[below]) return false;
    if (up_corners[v] != down_corners[below]) return false;
  }
  return true;
}

std::vector<Word> subgroup_of_cover(const CoveringComplex& cov) {
  const Presentation up = presentation(cov.total);
  const SpanningTree tree = spanning_tree(cov.total, *cov.total.basepoint());
  std::vector<Word> out;
  for (std::size_t e : up.generator_edges) {
    const Edge& edge = cov.total.edge(e);
    const Word loop = tree.path_to(edge.source) * Word{pos(e)} * inverse(tree.path_to(edge.target));
    Word projected;
    for (const Letter& l : loop) projected.push_back({cov.edge_projection[l.symbol], l.sign});
    out.push_back(reduce_word(to_generator_word(cov.base_presentation, projected)));
  }
  return out;
}

}  // namespace cellcover
