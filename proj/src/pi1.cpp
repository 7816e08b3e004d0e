#include "cellcover/pi1.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "cellcover/error.hpp"

namespace cellcover {

// ---------------------------------------------------------------------------
// Spanning trees

std::size_t SpanningTree::edge_count() const {
  return static_cast<std::size_t>(std::count(tree_edge.begin(), tree_edge.end(), true));
}

Word SpanningTree::path_to(std::size_t v) const {
  if (v >= reached.size() || !reached[v]) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in tree");
  }
  std::vector<Letter> reversed;
  while (parent[v]) {
    reversed.push_back({parent[v]->edge, parent[v]->sign});
    v = parent[v]->vertex;
  }
  std::reverse(reversed.begin(), reversed.end());
  return Word{std::move(reversed)};
}

SpanningTree spanning_tree(const CellComplex& c, std::size_t base, EdgeOrder order) {
  if (base >= c.vertex_count()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(base));
  }
  SpanningTree t;
  t.root = base;
  t.tree_edge.assign(c.edge_count(), false);
  t.parent.assign(c.vertex_count(), std::nullopt);
  t.reached.assign(c.vertex_count(), false);

  std::deque<std::size_t> queue{base};
  t.reached[base] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    std::vector<std::size_t> edges(c.incident_edges(v).begin(), c.incident_edges(v).end());
    if (order == EdgeOrder::descending) std::reverse(edges.begin(), edges.end());
    for (std::size_t e : edges) {
      const Edge& edge = c.edge(e);
      if (edge.source == edge.target) continue;
      const bool outgoing = edge.source == v;
      const std::size_t other = outgoing ? edge.target : edge.source;
      if (t.reached[other]) continue;
      t.reached[other] = true;
      t.parent[other] = SpanningTree::Parent{v, e, outgoing ? Sign::plus : Sign::minus};
      t.tree_edge[e] = true;
      queue.push_back(other);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Presentations

std::optional<std::size_t> Presentation::generator_of_edge(std::size_t edge) const {
  auto it = std::find(generator_edges.begin(), generator_edges.end(), edge);
  if (it == generator_edges.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generator_edges.begin());
}

Word normalize_relator(const Word& w) { return least_rotation(cyclically_reduce(w)); }

Presentation presentation(const CellComplex& c, std::size_t base, EdgeOrder order) {
  const SpanningTree tree = spanning_tree(c, base, order);

  Presentation p;
  p.basepoint = base;
  std::vector<std::optional<std::size_t>> generator(c.edge_count());
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (!tree.reached[c.edge(e).source] || tree.tree_edge[e]) continue;
    generator[e] = p.generators.size();
    p.generators.push_back(c.edge(e).name);
    p.generator_edges.push_back(e);
  }

  for (const Face& f : c.faces()) {
    if (!tree.reached[c.tail(f.boundary[0])]) continue;
    Word rel;
    for (const Letter& l : f.boundary) {
      if (generator[l.symbol]) rel.push_back({*generator[l.symbol], l.sign});
    }
    rel = normalize_relator(rel);
    if (rel.empty()) {
      ++p.discarded_relators;
    } else {
      p.relators.push_back(std::move(rel));
    }
  }
  return p;
}

Presentation presentation(const CellComplex& c) {
  if (!c.basepoint()) throw Error(ErrorCode::UnknownVertex, "complex has no vertices");
  return presentation(c, *c.basepoint());
}

Presentation presentation(LazyComplex& c, std::size_t budget) {
  const CellId base = c.basepoint();
  if (!c.exhaust_component(base, budget)) {
    throw Error(ErrorCode::InfiniteComponent,
                "basepoint component exceeds " + std::to_string(budget) + " cells");
  }
  return presentation(c.snapshot(), base.index);
}

Word to_generator_word(const Presentation& p, const Word& edge_word) {
  Word out;
  for (const Letter& l : edge_word) {
    if (auto g = p.generator_of_edge(l.symbol)) out.push_back({*g, l.sign});
  }
  return out;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const Letter& l : p.relators[r]) {
      m(r, l.symbol) += l.sign == Sign::plus ? 1 : -1;
    }
  }
  return m;
}

SmithForm abelianization(const Presentation& p) { return smith_form(relation_matrix(p)); }

// ---------------------------------------------------------------------------
// Pushouts

namespace {

Word shifted(const Word& w, std::size_t offset) {
  Word out;
  for (const Letter& l : w) out.push_back({l.symbol + offset, l.sign});
  return out;
}

void check_symbols(const Word& w, std::size_t limit, const char* where) {
  for (const Letter& l : w) {
    if (l.symbol >= limit) {
      throw Error(ErrorCode::UnknownGenerator,
                  std::string(where) + " uses generator " + std::to_string(l.symbol));
    }
  }
}

}  // namespace

Presentation van_kampen_pushout(const Presentation& p1, const Presentation& p2,
                                const Presentation& p0, const GeneratorMap& i1,
                                const GeneratorMap& i2) {
  for (const auto* leg : {&i1, &i2}) {
    for (const auto& [g, w] : *leg) {
      if (g >= p0.generators.size()) {
        throw Error(ErrorCode::UnknownGenerator,
                    "map names generator " + std::to_string(g) + " outside the shared group");
      }
    }
  }

  Presentation out;
  out.generators = p1.generators;
  for (const std::string& name : p2.generators) {
    std::string n = name;
    while (std::find(out.generators.begin(), out.generators.end(), n) != out.generators.end()) {
      n += "_2";
    }
    out.generators.push_back(n);
  }
  const std::size_t offset = p1.generators.size();

  auto add = [&](const Word& w) {
    Word rel = normalize_relator(w);
    if (rel.empty()) {
      ++out.discarded_relators;
    } else {
      out.relators.push_back(std::move(rel));
    }
  };
  for (const Word& r : p1.relators) add(r);
  for (const Word& r : p2.relators) add(shifted(r, offset));
  for (std::size_t g = 0; g < p0.generators.size(); ++g) {
    auto a = i1.find(g);
    auto b = i2.find(g);
    if (a == i1.end() || b == i2.end()) {
      throw Error(ErrorCode::UnmappedGenerator, "generator '" + p0.generators[g] + "' of the "
                                                "shared group has no image");
    }
    check_symbols(a->second, p1.generators.size(), "first map");
    check_symbols(b->second, p2.generators.size(), "second map");
    add(a->second * inverse(shifted(b->second, offset)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += p.generators[i];
  }
  out += " ; rels:";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i == 0 ? " " : " | ";
    out += format_word(p.relators[i], p.generators);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  text = trim(text);
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorCode::SyntaxError, "presentation needs 'gens: ... ; rels: ...'");
  }
  std::string_view gens = trim(text.substr(0, semi));
  std::string_view rels = trim(text.substr(semi + 1));
  if (!gens.starts_with("gens:") || !rels.starts_with("rels:")) {
    throw Error(ErrorCode::SyntaxError, "presentation needs 'gens: ... ; rels: ...'");
  }
  gens = trim(gens.substr(5));
  rels = trim(rels.substr(5));

  Presentation p;
  if (!gens.empty()) {
    for (std::string_view g : split(gens, ',')) {
      g = trim(g);
      if (g.empty()) throw Error(ErrorCode::SyntaxError, "empty generator name");
      if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end()) {
        throw Error(ErrorCode::SyntaxError, "duplicate generator '" + std::string(g) + "'");
      }
      p.generators.emplace_back(g);
    }
  }
  if (!rels.empty()) {
    for (std::string_view r : split(rels, '|')) {
      Word w = normalize_relator(parse_word(trim(r), p.generators));
      if (w.empty()) {
        ++p.discarded_relators;
      } else {
        p.relators.push_back(std::move(w));
      }
    }
  }
  return p;
}

}  // namespace cellcover
