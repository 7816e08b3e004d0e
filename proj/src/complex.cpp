#include "cellcover/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "cellcover/error.hpp"

namespace cellcover {

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::vertex: return "vertex";
    case CellKind::edge: return "edge";
    case CellKind::face: return "face";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ComplexSpec builders

ComplexSpec& ComplexSpec::vertex(std::string name) {
  vertices.push_back({std::move(name), 0});
  return *this;
}

ComplexSpec& ComplexSpec::edge(std::string name, std::string source, std::string target) {
  edges.push_back({std::move(name), std::move(source), std::move(target), 0});
  return *this;
}

ComplexSpec& ComplexSpec::face(std::string name, std::string_view boundary) {
  FaceDecl decl{std::move(name), {}, 0};
  std::size_t i = 0;
  while (i < boundary.size()) {
    while (i < boundary.size() && boundary[i] == ' ') ++i;
    std::size_t j = i;
    while (j < boundary.size() && boundary[j] != ' ') ++j;
    if (j > i) {
      std::string_view tok = boundary.substr(i, j - i);
      Sign sign = Sign::plus;
      if (tok.front() == '-') {
        sign = Sign::minus;
        tok.remove_prefix(1);
      }
      decl.boundary.emplace_back(std::string(tok), sign);
    }
    i = j;
  }
  faces.push_back(std::move(decl));
  return *this;
}

ComplexSpec& ComplexSpec::chart(std::string name, std::vector<std::string> cells) {
  charts.push_back({std::move(name), std::move(cells), 0});
  return *this;
}

ComplexSpec& ComplexSpec::base(std::string vertex) {
  basepoint = std::move(vertex);
  return *this;
}

// ---------------------------------------------------------------------------
// CellComplex

namespace {

void check_unique_names(CellKind kind, const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (const std::string& n : names) {
    if (n.empty()) {
      throw Error(ErrorCode::DuplicateCell, std::string(to_string(kind)) + " with empty name");
    }
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::DuplicateCell,
                  "duplicate " + std::string(to_string(kind)) + " '" + n + "'");
    }
  }
}

template <typename Cells>
std::vector<std::string> names_of(const Cells& cells) {
  std::vector<std::string> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c.name);
  return out;
}

}  // namespace

std::size_t CellComplex::tail(const Letter& l) const {
  const Edge& e = edges_.at(l.symbol);
  return l.sign == Sign::plus ? e.source : e.target;
}

std::size_t CellComplex::head(const Letter& l) const {
  const Edge& e = edges_.at(l.symbol);
  return l.sign == Sign::plus ? e.target : e.source;
}

CellComplex CellComplex::from_cells(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                    std::vector<Face> faces, std::vector<Chart> charts,
                                    std::optional<std::size_t> basepoint,
                                    const BuildLimits& limits) {
  check_unique_names(CellKind::vertex, names_of(vertices));
  check_unique_names(CellKind::edge, names_of(edges));
  check_unique_names(CellKind::face, names_of(faces));

  CellComplex c;
  c.vertices_ = std::move(vertices);
  c.edges_ = std::move(edges);

  for (const Edge& e : c.edges_) {
    if (e.source >= c.vertices_.size() || e.target >= c.vertices_.size()) {
      throw Error(ErrorCode::DanglingReference, "edge '" + e.name + "' has a missing endpoint");
    }
  }

  for (Face& f : faces) {
    if (f.boundary.empty()) {
      throw Error(ErrorCode::OpenBoundary, "face '" + f.name + "' has an empty boundary");
    }
    for (const Letter& l : f.boundary) {
      if (l.symbol >= c.edges_.size()) {
        throw Error(ErrorCode::DanglingReference, "face '" + f.name + "' uses a missing edge");
      }
    }
    const auto& ls = f.boundary.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (c.head(ls[i]) != c.tail(ls[(i + 1) % ls.size()])) {
        throw Error(ErrorCode::OpenBoundary,
                    "boundary of face '" + f.name + "' is not a closed walk at letter " +
                        std::to_string(i));
      }
    }

    // Canonical corner: lowest start vertex, then lowest edge, then `+`,
    // then the least rotation among the remaining candidates.
    const std::size_t n = ls.size();
    auto corner_key = [&](std::size_t i) {
      return std::make_tuple(c.tail(ls[i]), ls[i].symbol, ls[i].sign == Sign::plus ? 0 : 1);
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      auto ki = corner_key(i);
      auto kb = corner_key(best);
      if (ki < kb) {
        best = i;
      } else if (ki == kb) {
        for (std::size_t k = 0; k < n; ++k) {
          const Letter& a = ls[(i + k) % n];
          const Letter& b = ls[(best + k) % n];
          if (a == b) continue;
          if (a < b) best = i;
          break;
        }
      }
    }
    std::vector<Letter> rotated;
    rotated.reserve(n);
    for (std::size_t k = 0; k < n; ++k) rotated.push_back(ls[(best + k) % n]);
    f.boundary = Word{std::move(rotated)};
  }
  c.faces_ = std::move(faces);

  c.vertex_edges_.assign(c.vertices_.size(), {});
  for (std::size_t e = 0; e < c.edges_.size(); ++e) {
    c.vertex_edges_[c.edges_[e].source].push_back(e);
    if (c.edges_[e].target != c.edges_[e].source) c.vertex_edges_[c.edges_[e].target].push_back(e);
  }
  c.edge_faces_.assign(c.edges_.size(), {});
  for (std::size_t f = 0; f < c.faces_.size(); ++f) {
    for (const Letter& l : c.faces_[f].boundary) {
      auto& list = c.edge_faces_[l.symbol];
      if (list.empty() || list.back() != f) list.push_back(f);
    }
  }
  for (std::size_t v = 0; v < c.vertex_edges_.size(); ++v) {
    if (c.vertex_edges_[v].size() > limits.max_edges_per_vertex) {
      throw Error(ErrorCode::LocalFinitenessViolation,
                  "vertex '" + c.vertices_[v].name + "' exceeds the incidence limit");
    }
  }
  for (std::size_t e = 0; e < c.edge_faces_.size(); ++e) {
    if (c.edge_faces_[e].size() > limits.max_faces_per_edge) {
      throw Error(ErrorCode::LocalFinitenessViolation,
                  "edge '" + c.edges_[e].name + "' exceeds the incidence limit");
    }
  }

  if (!charts.empty()) {
    std::set<CellId> covered;
    for (const Chart& ch : charts) {
      for (const CellId& id : ch.cells) {
        if (!c.contains(id)) {
          throw Error(ErrorCode::DanglingReference, "chart '" + ch.name + "' names a missing cell");
        }
        covered.insert(id);
      }
    }
    const std::size_t total = c.vertices_.size() + c.edges_.size() + c.faces_.size();
    if (covered.size() != total) {
      throw Error(ErrorCode::InvalidChart, "charts do not cover every cell");
    }
  }
  c.charts_ = std::move(charts);

  if (basepoint) {
    if (*basepoint >= c.vertices_.size()) {
      throw Error(ErrorCode::DanglingReference, "basepoint is not a vertex");
    }
    c.basepoint_ = basepoint;
  } else if (!c.vertices_.empty()) {
    c.basepoint_ = 0;
  }
  return c;
}

std::size_t CellComplex::cell_count(CellKind kind) const noexcept {
  switch (kind) {
    case CellKind::vertex: return vertices_.size();
    case CellKind::edge: return edges_.size();
    case CellKind::face: return faces_.size();
  }
  return 0;
}

CellComplex CellComplex::with_basepoint(std::size_t vertex) const {
  if (vertex >= vertices_.size()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(vertex));
  }
  CellComplex copy = *this;
  copy.basepoint_ = vertex;
  return copy;
}

std::span<const std::size_t> CellComplex::incident_edges(std::size_t vertex) const {
  return vertex_edges_.at(vertex);
}

std::span<const std::size_t> CellComplex::incident_faces(std::size_t edge) const {
  return edge_faces_.at(edge);
}

bool CellComplex::contains(CellId id) const noexcept { return id.index < cell_count(id.kind); }

const std::string& CellComplex::name(CellId id) const {
  switch (id.kind) {
    case CellKind::vertex: return vertices_.at(id.index).name;
    case CellKind::edge: return edges_.at(id.index).name;
    case CellKind::face: return faces_.at(id.index).name;
  }
  throw Error(ErrorCode::UnknownCell, "bad cell kind");
}

std::optional<CellId> CellComplex::find(CellKind kind, std::string_view name) const {
  auto search = [&](const auto& cells) -> std::optional<CellId> {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].name == name) return CellId{kind, i};
    }
    return std::nullopt;
  };
  switch (kind) {
    case CellKind::vertex: return search(vertices_);
    case CellKind::edge: return search(edges_);
    case CellKind::face: return search(faces_);
  }
  return std::nullopt;
}

std::vector<std::string> CellComplex::edge_names() const { return names_of(edges_); }

// ---------------------------------------------------------------------------
// build_complex

CellComplex build_complex(const ComplexSpec& spec, const BuildLimits& limits) {
  auto fail = [](ErrorCode code, const std::string& msg, std::size_t line) -> Error {
    return line ? Error(code, msg, line) : Error(code, msg);
  };

  std::map<std::string, std::size_t, std::less<>> vertex_index;
  std::vector<Vertex> vertices;
  for (const auto& v : spec.vertices) {
    if (!vertex_index.emplace(v.name, vertices.size()).second) {
      throw fail(ErrorCode::DuplicateCell, "duplicate vertex '" + v.name + "'", v.line);
    }
    vertices.push_back({v.name});
  }

  std::map<std::string, std::size_t, std::less<>> edge_index;
  std::vector<Edge> edges;
  for (const auto& e : spec.edges) {
    auto s = vertex_index.find(e.source);
    auto t = vertex_index.find(e.target);
    if (s == vertex_index.end() || t == vertex_index.end()) {
      const std::string& missing = s == vertex_index.end() ? e.source : e.target;
      throw fail(ErrorCode::DanglingReference,
                 "edge '" + e.name + "' refers to missing vertex '" + missing + "'", e.line);
    }
    if (!edge_index.emplace(e.name, edges.size()).second) {
      throw fail(ErrorCode::DuplicateCell, "duplicate edge '" + e.name + "'", e.line);
    }
    edges.push_back({e.name, s->second, t->second});
  }

  std::map<std::string, std::size_t, std::less<>> face_index;
  std::vector<Face> faces;
  for (const auto& f : spec.faces) {
    Word boundary;
    for (const auto& [edge_name, sign] : f.boundary) {
      auto it = edge_index.find(edge_name);
      if (it == edge_index.end()) {
        throw fail(ErrorCode::DanglingReference,
                   "face '" + f.name + "' refers to missing edge '" + edge_name + "'", f.line);
      }
      boundary.push_back({it->second, sign});
    }
    if (!face_index.emplace(f.name, faces.size()).second) {
      throw fail(ErrorCode::DuplicateCell, "duplicate face '" + f.name + "'", f.line);
    }
    if (boundary.empty()) {
      throw fail(ErrorCode::OpenBoundary, "face '" + f.name + "' has an empty boundary", f.line);
    }
    auto tail = [&](const Letter& l) {
      return l.sign == Sign::plus ? edges[l.symbol].source : edges[l.symbol].target;
    };
    auto head = [&](const Letter& l) {
      return l.sign == Sign::plus ? edges[l.symbol].target : edges[l.symbol].source;
    };
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      if (head(boundary[i]) != tail(boundary[(i + 1) % boundary.size()])) {
        throw fail(ErrorCode::OpenBoundary,
                   "boundary of face '" + f.name + "' is not a closed walk", f.line);
      }
    }
    faces.push_back({f.name, std::move(boundary)});
  }

  std::vector<Chart> charts;
  for (const auto& ch : spec.charts) {
    Chart chart{ch.name, {}};
    for (const std::string& cell : ch.cells) {
      std::vector<CellId> matches;
      if (auto it = vertex_index.find(cell); it != vertex_index.end()) {
        matches.push_back(vertex_id(it->second));
      }
      if (auto it = edge_index.find(cell); it != edge_index.end()) {
        matches.push_back(edge_id(it->second));
      }
      if (auto it = face_index.find(cell); it != face_index.end()) {
        matches.push_back(face_id(it->second));
      }
      if (matches.empty()) {
        throw fail(ErrorCode::DanglingReference,
                   "chart '" + ch.name + "' refers to missing cell '" + cell + "'", ch.line);
      }
      if (matches.size() > 1) {
        throw fail(ErrorCode::InvalidChart,
                   "chart '" + ch.name + "' cell '" + cell + "' is ambiguous", ch.line);
      }
      chart.cells.push_back(matches.front());
    }
    charts.push_back(std::move(chart));
  }

  std::optional<std::size_t> base;
  if (spec.basepoint) {
    auto it = vertex_index.find(*spec.basepoint);
    if (it == vertex_index.end()) {
      throw fail(ErrorCode::DanglingReference,
                 "basepoint '" + *spec.basepoint + "' is not a vertex", spec.basepoint_line);
    }
    base = it->second;
  }

  std::size_t chart_line = spec.charts.empty() ? 0 : spec.charts.front().line;
  try {
    return CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces),
                                   std::move(charts), base, limits);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvalidChart && chart_line) {
      throw fail(err.code(), err.detail(), chart_line);
    }
    throw;
  }
}

// ---------------------------------------------------------------------------
// Queries

long long euler_characteristic(const CellComplex& c) {
  return static_cast<long long>(c.vertex_count()) - static_cast<long long>(c.edge_count()) +
         static_cast<long long>(c.face_count());
}

std::size_t ComponentPartition::of(CellId id) const {
  switch (id.kind) {
    case CellKind::vertex: return vertex.at(id.index);
    case CellKind::edge: return edge.at(id.index);
    case CellKind::face: return face.at(id.index);
  }
  return 0;
}

ComponentPartition connected_components(const CellComplex& c) {
  std::vector<std::size_t> parent(c.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : c.edges()) {
    std::size_t a = find(e.source);
    std::size_t b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  ComponentPartition out;
  std::vector<std::size_t> label(c.vertex_count(), SIZE_MAX);
  out.vertex.resize(c.vertex_count());
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    std::size_t r = find(v);
    if (label[r] == SIZE_MAX) label[r] = out.count++;
    out.vertex[v] = label[r];
  }
  out.edge.reserve(c.edge_count());
  for (const Edge& e : c.edges()) out.edge.push_back(out.vertex[e.source]);
  out.face.reserve(c.face_count());
  for (const Face& f : c.faces()) out.face.push_back(out.edge[f.boundary[0].symbol]);
  return out;
}

std::vector<CellId> star(const CellComplex& c, CellId cell) {
  if (!c.contains(cell)) {
    throw Error(ErrorCode::UnknownCell,
                std::string(to_string(cell.kind)) + " index " + std::to_string(cell.index));
  }
  std::set<CellId> out{cell};
  switch (cell.kind) {
    case CellKind::vertex:
      for (std::size_t e : c.incident_edges(cell.index)) {
        out.insert(edge_id(e));
        for (std::size_t f : c.incident_faces(e)) out.insert(face_id(f));
      }
      break;
    case CellKind::edge:
      for (std::size_t f : c.incident_faces(cell.index)) out.insert(face_id(f));
      break;
    case CellKind::face:
      break;
  }
  return {out.begin(), out.end()};
}

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
  auto rename = [](const auto& mine, const auto& theirs, std::string name) {
    auto taken = [&](const std::string& n) {
      return std::any_of(mine.begin(), mine.end(), [&](const auto& x) { return x.name == n; }) ||
             std::any_of(theirs.begin(), theirs.end(), [&](const auto& x) { return x.name == n; });
    };
    while (taken(name)) name += "_2";
    return name;
  };

  std::vector<Vertex> vertices(a.vertices().begin(), a.vertices().end());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  std::vector<Face> faces(a.faces().begin(), a.faces().end());
  const std::size_t dv = vertices.size();
  const std::size_t de = edges.size();
  for (const Vertex& v : b.vertices()) {
    std::string n = v.name;
    if (std::any_of(a.vertices().begin(), a.vertices().end(), [&](const Vertex& x) { return x.name == n; })) {
      n = rename(a.vertices(), b.vertices(), n);
    }
    vertices.push_back({n});
  }
  for (const Edge& e : b.edges()) {
    std::string n = e.name;
    if (std::any_of(a.edges().begin(), a.edges().end(), [&](const Edge& x) { return x.name == n; })) {
      n = rename(a.edges(), b.edges(), n);
    }
    edges.push_back({n, e.source + dv, e.target + dv});
  }
  for (const Face& f : b.faces()) {
    std::string n = f.name;
    if (std::any_of(a.faces().begin(), a.faces().end(), [&](const Face& x) { return x.name == n; })) {
      n = rename(a.faces(), b.faces(), n);
    }
    Word boundary;
    for (const Letter& l : f.boundary) boundary.push_back({l.symbol + de, l.sign});
    faces.push_back({n, std::move(boundary)});
  }
  return CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces), {},
                                 a.basepoint());
}

}  // namespace cellcover
