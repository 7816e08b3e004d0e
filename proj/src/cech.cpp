#include "cellcover/cech.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "cellcover/error.hpp"
#include "cellcover/pi1.hpp"

namespace cellcover {

namespace {

[[noreturn]] void inconsistent(std::size_t line, const std::string& msg) {
  if (line) throw Error(ErrorCode::InconsistentInclusion, msg, line);
  throw Error(ErrorCode::InconsistentInclusion, msg);
}

}  // namespace

CellComplex nerve_complex(const NerveSpec& spec) {
  std::map<std::string, std::size_t> patch;
  for (const std::string& p : spec.patches) {
    if (!patch.emplace(p, patch.size()).second) {
      throw Error(ErrorCode::DuplicateCell, "patch '" + p + "' declared twice");
    }
  }
  auto patch_index = [&](const std::string& name, std::size_t line) {
    auto it = patch.find(name);
    if (it == patch.end()) inconsistent(line, "unknown patch '" + name + "'");
    return it->second;
  };

  std::vector<Vertex> vertices;
  for (const std::string& p : spec.patches) vertices.push_back({p});

  // component name -> (edge index, unordered patch pair)
  std::map<std::string, std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> component;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  std::vector<Edge> edges;
  for (const auto& o : spec.overlaps) {
    std::size_t a = patch_index(o.first, o.line);
    std::size_t b = patch_index(o.second, o.line);
    if (a == b) inconsistent(o.line, "overlap of patch '" + o.first + "' with itself");
    if (a > b) std::swap(a, b);
    if (!seen_pairs.insert({a, b}).second) {
      inconsistent(o.line, "overlap " + o.first + " " + o.second + " declared twice");
    }
    for (const std::string& c : o.components) {
      if (!component.emplace(c, std::pair{edges.size(), std::pair{a, b}}).second) {
        throw Error(ErrorCode::DuplicateCell, "overlap component '" + c + "' declared twice",
                    o.line);
      }
      edges.push_back({c, a, b});
    }
  }

  std::vector<Face> faces;
  std::set<std::string> face_names;
  for (const auto& t : spec.triples) {
    std::array<std::size_t, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) p[i] = patch_index(t.patches[i], t.line);
    std::sort(p.begin(), p.end());
    if (p[0] == p[1] || p[1] == p[2]) inconsistent(t.line, "triple repeats a patch");
    for (const auto& tc : t.components) {
      if (!face_names.insert(tc.name).second) {
        throw Error(ErrorCode::DuplicateCell, "triple component '" + tc.name + "' declared twice",
                    t.line);
      }
      // Slot 0: pair (p0,p1), slot 1: (p1,p2), slot 2: (p0,p2).
      std::array<std::optional<std::size_t>, 3> slot;
      for (const std::string& c : tc.pair_components) {
        auto it = component.find(c);
        if (it == component.end()) inconsistent(t.line, "unknown overlap component '" + c + "'");
        const auto pair = it->second.second;
        std::optional<std::size_t> k;
        if (pair == std::pair{p[0], p[1]}) k = 0;
        if (pair == std::pair{p[1], p[2]}) k = 1;
        if (pair == std::pair{p[0], p[2]}) k = 2;
        if (!k) {
          inconsistent(t.line, "component '" + c + "' does not belong to a pair of triple '" +
                                   tc.name + "'");
        }
        if (slot[*k]) {
          inconsistent(t.line, "triple '" + tc.name + "' includes two components of one pair");
        }
        slot[*k] = it->second.first;
      }
      faces.push_back({tc.name, Word{pos(*slot[0]), pos(*slot[1]), neg(*slot[2])}});
    }
  }
  std::optional<std::size_t> base;
  if (!vertices.empty()) base = 0;
  return CellComplex::from_cells(std::move(vertices), std::move(edges), std::move(faces), {}, base);
}

// ---------------------------------------------------------------------------

Cocycle Cocycle::from_forward(std::vector<std::size_t> labels) {
  Cocycle c;
  c.forward.assign(labels.begin(), labels.end());
  c.backward.assign(labels.size(), std::nullopt);
  return c;
}

std::size_t Cocycle::value(const FiniteGroup& g, const Letter& l) const {
  const auto& same = l.sign == Sign::plus ? forward : backward;
  const auto& other = l.sign == Sign::plus ? backward : forward;
  if (l.symbol < same.size() && same[l.symbol]) return *same[l.symbol];
  if (l.symbol < other.size() && other[l.symbol]) return g.inverse(*other[l.symbol]);
  throw Error(ErrorCode::MissingLabel, "edge " + std::to_string(l.symbol) + " has no label");
}

std::size_t evaluate(const FiniteGroup& g, const Cocycle& c, const Word& w) {
  std::size_t acc = 0;
  for (const Letter& l : w) acc = g.multiply(acc, c.value(g, l));
  return acc;
}

namespace {

void check_labels(const CellComplex& n, const FiniteGroup& g, const Cocycle& c) {
  for (std::size_t e = 0; e < n.edge_count(); ++e) {
    const bool f = e < c.forward.size() && c.forward[e];
    const bool b = e < c.backward.size() && c.backward[e];
    if (!f && !b) {
      throw Error(ErrorCode::MissingLabel, "overlap component '" + n.edge(e).name + "' has no label");
    }
    if ((f && *c.forward[e] >= g.order()) || (b && *c.backward[e] >= g.order())) {
      throw Error(ErrorCode::InvalidArgument,
                  "label on '" + n.edge(e).name + "' is not a group element");
    }
  }
}

}  // namespace

bool validate_cocycle(const CellComplex& n, const FiniteGroup& g, const Cocycle& c) {
  check_labels(n, g, c);
  for (std::size_t e = 0; e < n.edge_count(); ++e) {
    if (e < c.forward.size() && e < c.backward.size() && c.forward[e] && c.backward[e] &&
        g.inverse(*c.forward[e]) != *c.backward[e]) {
      return false;
    }
  }
  for (const Face& f : n.faces()) {
    if (evaluate(g, c, f.boundary) != 0) return false;
  }
  return true;
}

bool cohomologous(const CellComplex& n, const FiniteGroup& g, const Cocycle& c1,
                  const Cocycle& c2, bool pointed) {
  check_labels(n, g, c1);
  check_labels(n, g, c2);
  const ComponentPartition parts = connected_components(n);
  std::vector<std::size_t> k(n.vertex_count(), 0);

  for (std::size_t comp = 0; comp < parts.count; ++comp) {
    std::size_t root = 0;
    while (parts.vertex[root] != comp) ++root;
    const bool pinned = pointed && n.basepoint() && parts.vertex[*n.basepoint()] == comp;
    if (pinned) root = *n.basepoint();
    const SpanningTree tree = spanning_tree(n, root);

    // Breadth-first order of the component's vertices, parents first.
    std::vector<std::size_t> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t e : n.incident_edges(order[i])) {
        if (!tree.tree_edge[e]) continue;
        for (std::size_t w : {n.edge(e).source, n.edge(e).target}) {
          if (tree.parent[w] && tree.parent[w]->vertex == order[i] && tree.parent[w]->edge == e &&
              std::find(order.begin(), order.end(), w) == order.end()) {
            order.push_back(w);
          }
        }
      }
    }

    bool found = false;
    for (std::size_t start = 0; start < g.order() && !found; ++start) {
      if (pinned && start != 0) break;
      k[root] = start;
      // Along a tree letter m -> w: c2 = k_m^-1 c1 k_w, so k_w = c1^-1 k_m c2.
      for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& par = *tree.parent[order[i]];
        const Letter l{par.edge, par.sign};
        k[order[i]] = g.multiply(g.multiply(g.inverse(c1.value(g, l)), k[par.vertex]), c2.value(g, l));
      }
      found = true;
      for (std::size_t e = 0; e < n.edge_count() && found; ++e) {
        const Edge& edge = n.edge(e);
        if (parts.vertex[edge.source] != comp) continue;
        const std::size_t expect =
            g.multiply(g.multiply(g.inverse(k[edge.source]), c1.value(g, pos(e))), k[edge.target]);
        found = expect == c2.value(g, pos(e));
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> cocycle_to_hom(const CellComplex& n, const FiniteGroup& g,
                                        const Cocycle& c) {
  const Presentation p = presentation(n);
  const SpanningTree tree = spanning_tree(n, *n.basepoint());
  std::vector<std::size_t> out;
  for (std::size_t e : p.generator_edges) {
    const Edge& edge = n.edge(e);
    const Word loop = tree.path_to(edge.source) * Word{pos(e)} * inverse(tree.path_to(edge.target));
    out.push_back(evaluate(g, c, loop));
  }
  return out;
}

std::vector<Cocycle> classify(const CellComplex& n, const FiniteGroup& g,
                              const ClassifyOptions& options) {
  const std::size_t order = g.order();
  const std::size_t edges = n.edge_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (total > options.max_labelings / order) {
      throw Error(ErrorCode::SizeBudgetExceeded,
                  std::to_string(order) + "^" + std::to_string(edges) +
                      " labelings exceed the cap of " + std::to_string(options.max_labelings));
    }
    total *= order;
  }

  // Labeling code: edge 0 is the most significant digit, so numeric order is
  // lexicographic order of label vectors.
  auto encode = [&](const std::vector<std::size_t>& labels) {
    std::size_t code = 0;
    for (std::size_t x : labels) code = code * order + x;
    return code;
  };
  auto closes = [&](const std::vector<std::size_t>& labels) {
    for (const Face& f : n.faces()) {
      std::size_t acc = 0;
      for (const Letter& l : f.boundary) {
        const std::size_t x = labels[l.symbol];
        acc = g.multiply(acc, l.sign == Sign::plus ? x : g.inverse(x));
      }
      if (acc != 0) return false;
    }
    return true;
  };

  const std::size_t patches = n.vertex_count();
  const std::optional<std::size_t> pinned =
      options.pointed ? n.basepoint() : std::optional<std::size_t>{};

  std::vector<bool> visited(total, false);
  std::vector<Cocycle> out;
  std::vector<std::size_t> labels(edges, 0);
  std::vector<std::size_t> moved(edges);
  std::vector<std::size_t> k(patches);
  for (std::size_t code = 0; code < total; ++code) {
    if (code > 0) {
      // Odometer step matching code -> code + 1.
      for (std::size_t e = edges; e-- > 0;) {
        if (++labels[e] < order) break;
        labels[e] = 0;
      }
    }
    if (visited[code] || !closes(labels)) continue;
    out.push_back(Cocycle::from_forward(labels));

    // Mark the whole orbit under patch-wise gauge k: patch -> G.
    std::fill(k.begin(), k.end(), 0);
    while (true) {
      for (std::size_t e = 0; e < edges; ++e) {
        const Edge& edge = n.edge(e);
        moved[e] = g.multiply(g.multiply(g.inverse(k[edge.source]), labels[e]), k[edge.target]);
      }
      visited[encode(moved)] = true;
      std::size_t i = 0;
      for (; i < patches; ++i) {
        if (pinned && i == *pinned) continue;
        if (++k[i] < order) break;
        k[i] = 0;
      }
      if (i == patches) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GCover hom_to_gcover(const CellComplex& c, const std::vector<std::size_t>& hom,
                     const FiniteGroup& g) {
  const Presentation p = presentation(c);
  if (hom.size() != p.generators.size()) {
    throw Error(ErrorCode::NotAHomomorphism,
                "expected " + std::to_string(p.generators.size()) + " generator images, got " +
                    std::to_string(hom.size()));
  }
  for (std::size_t x : hom) {
    if (x >= g.order()) throw Error(ErrorCode::NotAHomomorphism, "image is not a group element");
  }
  for (const Word& r : p.relators) {
    std::size_t acc = 0;
    for (const Letter& l : r) {
      acc = g.multiply(acc, l.sign == Sign::plus ? hom[l.symbol] : g.inverse(hom[l.symbol]));
    }
    if (acc != 0) {
      throw Error(ErrorCode::NotAHomomorphism,
                  "relator " + format_word(r, p.generators) + " is not sent to the identity");
    }
  }

  const std::size_t order = g.order();
  std::vector<Permutation> right;
  for (std::size_t x : hom) {
    std::vector<std::size_t> images(order);
    for (std::size_t s = 0; s < order; ++s) images[s] = g.multiply(s, x);
    right.emplace_back(std::move(images));
  }
  std::vector<Permutation> left;
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<std::size_t> images(order);
    for (std::size_t s = 0; s < order; ++s) images[s] = g.multiply(a, s);
    left.emplace_back(std::move(images));
  }
  CosetTable table(p.generators, std::move(right));
  return GCover{build_cover(c, table), g, std::move(left)};
}

Cocycle read_cocycle(const GCover& gc) {
  const CoveringComplex& cov = gc.cover;
  std::vector<std::size_t> labels(cov.base.edge_count(), 0);
  for (std::size_t e = 0; e < cov.base.edge_count(); ++e) {
    if (!cov.edge_slot[e]) continue;
    const std::size_t up = cov.lift(edge_id(e), 0).index;
    labels[e] = cov.sheet(vertex_id(cov.total.edge(up).target));
  }
  return Cocycle::from_forward(std::move(labels));
}

}  // namespace cellcover
