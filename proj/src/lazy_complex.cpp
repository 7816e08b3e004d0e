#include "cellcover/lazy_complex.hpp"

#include <deque>
#include <set>

#include "cellcover/error.hpp"

namespace cellcover {

LazyComplex::LazyComplex(std::shared_ptr<const CellSource> source, BuildLimits limits)
    : source_(std::move(source)), limits_(limits) {}

std::size_t LazyComplex::total_locked() const {
  return cells_[0].size() + cells_[1].size() + cells_[2].size();
}

const LazyComplex::Record& LazyComplex::record(CellId cell) const {
  const auto& list = cells_[static_cast<int>(cell.kind)];
  if (cell.index >= list.size()) {
    throw Error(ErrorCode::UnknownCell, std::string(to_string(cell.kind)) + " index " +
                                            std::to_string(cell.index) + " not materialized");
  }
  return list[cell.index];
}

std::size_t LazyComplex::materialize_locked(const CellKey& key) {
  if (auto it = index_.find(key); it != index_.end()) return it->second;

  Record rec{key, source_->label(key), {}, {}, false};
  switch (key.kind) {
    case CellKind::vertex:
      break;
    case CellKind::edge: {
      auto [s, t] = source_->endpoints(key);
      std::size_t si = materialize_locked(s);
      std::size_t ti = materialize_locked(t);
      rec.ends = {si, ti};
      break;
    }
    case CellKind::face: {
      for (const KeyedLetter& l : source_->boundary(key)) {
        rec.boundary.push_back({materialize_locked(l.edge), l.sign});
      }
      break;
    }
  }
  auto& list = cells_[static_cast<int>(key.kind)];
  const std::size_t id = list.size();
  list.push_back(std::move(rec));
  index_.emplace(key, id);
  return id;
}

CellId LazyComplex::basepoint() {
  std::lock_guard lock(mutex_);
  return vertex_id(materialize_locked(source_->basepoint()));
}

CellId LazyComplex::materialize(const CellKey& key) {
  std::lock_guard lock(mutex_);
  return {key.kind, materialize_locked(key)};
}

std::vector<CellId> LazyComplex::star_locked(CellId cell) {
  (void)record(cell);
  const CellKey key = cells_[static_cast<int>(cell.kind)][cell.index].key;
  std::set<CellId> out{cell};
  auto add_faces = [&](const CellKey& edge_key) {
    auto faces = source_->faces_at(edge_key);
    if (faces.size() > limits_.max_faces_per_edge) {
      throw Error(ErrorCode::LocalFinitenessViolation,
                  "edge '" + source_->label(edge_key) + "' exceeds the incidence limit");
    }
    for (const CellKey& f : faces) out.insert(face_id(materialize_locked(f)));
  };
  switch (cell.kind) {
    case CellKind::vertex: {
      auto edges = source_->edges_at(key);
      if (edges.size() > limits_.max_edges_per_vertex) {
        throw Error(ErrorCode::LocalFinitenessViolation,
                    "vertex '" + source_->label(key) + "' exceeds the incidence limit");
      }
      for (const CellKey& e : edges) {
        out.insert(edge_id(materialize_locked(e)));
        add_faces(e);
      }
      break;
    }
    case CellKind::edge:
      add_faces(key);
      break;
    case CellKind::face:
      break;
  }
  cells_[static_cast<int>(cell.kind)][cell.index].expanded = true;
  return {out.begin(), out.end()};
}

std::vector<CellId> LazyComplex::star(CellId cell) {
  std::lock_guard lock(mutex_);
  return star_locked(cell);
}

std::vector<CellId> LazyComplex::incident_edges(CellId vertex) {
  if (vertex.kind != CellKind::vertex) {
    throw Error(ErrorCode::UnknownVertex, "not a vertex");
  }
  std::lock_guard lock(mutex_);
  (void)record(vertex);
  std::vector<CellId> out;
  for (const CellKey& e : source_->edges_at(cells_[0][vertex.index].key)) {
    out.push_back(edge_id(materialize_locked(e)));
  }
  return out;
}

std::pair<CellId, CellId> LazyComplex::endpoints(CellId edge) const {
  std::lock_guard lock(mutex_);
  const Record& r = record(edge);
  return {vertex_id(r.ends.first), vertex_id(r.ends.second)};
}

Word LazyComplex::boundary(CellId face) const {
  std::lock_guard lock(mutex_);
  return record(face).boundary;
}

CellKey LazyComplex::key(CellId cell) const {
  std::lock_guard lock(mutex_);
  return record(cell).key;
}

std::string LazyComplex::label(CellId cell) const {
  std::lock_guard lock(mutex_);
  return record(cell).label;
}

std::size_t LazyComplex::materialized(CellKind kind) const {
  std::lock_guard lock(mutex_);
  return cells_[static_cast<int>(kind)].size();
}

std::size_t LazyComplex::materialized_total() const {
  std::lock_guard lock(mutex_);
  return total_locked();
}

bool LazyComplex::explore_locked(std::vector<CellId> frontier, std::size_t budget) {
  std::deque<CellId> queue(frontier.begin(), frontier.end());
  while (!queue.empty()) {
    if (total_locked() > budget) return false;
    CellId cell = queue.front();
    queue.pop_front();
    Record& rec = cells_[static_cast<int>(cell.kind)][cell.index];
    if (rec.expanded) continue;
    std::vector<CellId> closure = star_locked(cell);
    const Record& r = cells_[static_cast<int>(cell.kind)][cell.index];
    if (cell.kind == CellKind::edge) {
      closure.push_back(vertex_id(r.ends.first));
      closure.push_back(vertex_id(r.ends.second));
    } else if (cell.kind == CellKind::face) {
      for (const Letter& l : r.boundary) closure.push_back(edge_id(l.symbol));
    }
    for (CellId next : closure) {
      if (!cells_[static_cast<int>(next.kind)][next.index].expanded) queue.push_back(next);
    }
  }
  return total_locked() <= budget;
}

bool LazyComplex::exhaust(std::size_t budget) {
  std::lock_guard lock(mutex_);
  std::vector<CellId> frontier;
  for (int k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < cells_[k].size(); ++i) {
      frontier.push_back({static_cast<CellKind>(k), i});
    }
  }
  if (frontier.empty()) frontier.push_back(vertex_id(materialize_locked(source_->basepoint())));
  return explore_locked(std::move(frontier), budget);
}

bool LazyComplex::exhaust_component(CellId vertex, std::size_t budget) {
  std::lock_guard lock(mutex_);
  (void)record(vertex);
  return explore_locked({vertex}, budget);
}

CellComplex LazyComplex::snapshot() const {
  std::lock_guard lock(mutex_);
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  for (const Record& r : cells_[0]) vertices.push_back({r.label});
  for (const Record& r : cells_[1]) edges.push_back({r.label, r.ends.first, r.ends.second});
  for (const Record& r : cells_[2]) faces.push_back({r.label, r.boundary});
  std::optional<std::size_t> base;
  if (auto it = index_.find(source_->basepoint()); it != index_.end()) base = it->second;
  return CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces), {},
                                 base, limits_);
}

// ---------------------------------------------------------------------------

namespace {

class FiniteSource final : public CellSource {
 public:
  explicit FiniteSource(CellComplex c) : c_(std::move(c)) {}

  CellKey basepoint() const override {
    if (!c_.basepoint()) throw Error(ErrorCode::UnknownVertex, "complex has no vertices");
    return {CellKind::vertex, *c_.basepoint(), {}};
  }
  std::pair<CellKey, CellKey> endpoints(const CellKey& edge) const override {
    const Edge& e = c_.edge(edge.base);
    return {{CellKind::vertex, e.source, {}}, {CellKind::vertex, e.target, {}}};
  }
  std::vector<KeyedLetter> boundary(const CellKey& face) const override {
    std::vector<KeyedLetter> out;
    for (const Letter& l : c_.face(face.base).boundary) {
      out.push_back({{CellKind::edge, l.symbol, {}}, l.sign});
    }
    return out;
  }
  std::vector<CellKey> edges_at(const CellKey& vertex) const override {
    std::vector<CellKey> out;
    for (std::size_t e : c_.incident_edges(vertex.base)) out.push_back({CellKind::edge, e, {}});
    return out;
  }
  std::vector<CellKey> faces_at(const CellKey& edge) const override {
    std::vector<CellKey> out;
    for (std::size_t f : c_.incident_faces(edge.base)) out.push_back({CellKind::face, f, {}});
    return out;
  }
  std::string label(const CellKey& cell) const override {
    return c_.name({cell.kind, cell.base});
  }

 private:
  CellComplex c_;
};

}  // namespace

std::shared_ptr<const CellSource> finite_source(CellComplex c) {
  return std::make_shared<FiniteSource>(std::move(c));
}

long long euler_characteristic(LazyComplex& c, std::size_t budget) {
  if (!c.exhaust(budget)) {
    throw Error(ErrorCode::InfiniteComplex,
                "not exhausted within " + std::to_string(budget) + " cells");
  }
  return euler_characteristic(c.snapshot());
}

ComponentPartition connected_components(LazyComplex& c, std::size_t budget) {
  if (!c.exhaust(budget)) {
    throw Error(ErrorCode::MaterializationBudgetExceeded,
                "more than " + std::to_string(budget) + " cells");
  }
  return connected_components(c.snapshot());
}

std::vector<CellId> vertex_ball(LazyComplex& c, CellId from, std::size_t radius) {
  std::vector<CellId> out{from};
  std::set<CellId> seen{from};
  std::vector<CellId> layer{from};
  for (std::size_t d = 0; d < radius && !layer.empty(); ++d) {
    std::vector<CellId> next;
    for (CellId v : layer) {
      for (CellId e : c.incident_edges(v)) {
        auto [s, t] = c.endpoints(e);
        for (CellId w : {s, t}) {
          if (seen.insert(w).second) {
            next.push_back(w);
            out.push_back(w);
          }
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace cellcover
