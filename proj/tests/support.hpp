#pragma once

// Golden complexes, random instance generators and brute-force oracles shared
// by the unit tests and the acceptance runner. Oracles here deliberately avoid
// the library's algorithms beyond reading presentations.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellcover/cech.hpp"
#include "cellcover/complex.hpp"
#include "cellcover/covers.hpp"
#include "cellcover/finite_group.hpp"
#include "cellcover/permutation.hpp"
#include "cellcover/pi1.hpp"

namespace testing_support {

using namespace cellcover;

inline CellComplex circle() { return build_complex(ComplexSpec{}.vertex("v").edge("a", "v", "v")); }

inline CellComplex bouquet(std::size_t k) {
  ComplexSpec s;
  s.vertex("v");
  for (std::size_t i = 0; i < k; ++i) s.edge(std::string(1, static_cast<char>('a' + i)), "v", "v");
  return build_complex(s);
}

inline CellComplex fig8() { return bouquet(2); }

inline CellComplex torus() {
  return build_complex(
      ComplexSpec{}.vertex("v").edge("a", "v", "v").edge("b", "v", "v").face("F", "a b -a -b"));
}

inline CellComplex sphere() {
  return build_complex(ComplexSpec{}
                           .vertex("v1")
                           .vertex("v2")
                           .edge("e1", "v1", "v2")
                           .edge("e2", "v1", "v2")
                           .face("F1", "e1 -e2")
                           .face("F2", "e1 -e2"));
}

inline CellComplex disk() {
  return build_complex(ComplexSpec{}
                           .vertex("v1")
                           .vertex("v2")
                           .edge("e1", "v1", "v2")
                           .edge("e2", "v2", "v1")
                           .face("D", "e1 e2"));
}

inline CellComplex projective_plane() {
  return build_complex(ComplexSpec{}.vertex("v").edge("a", "v", "v").face("F", "a a"));
}

inline CellComplex klein_bottle() {
  return build_complex(
      ComplexSpec{}.vertex("v").edge("a", "v", "v").edge("b", "v", "v").face("F", "a b a -b"));
}

/// One vertex, k loops x1..xk and one 2-cell x1 ... xk -x1 ... -xk, whose
/// boundary has zero exponent sum in every loop (k = 2 is the torus).
inline CellComplex torus_family(std::size_t k) {
  ComplexSpec s;
  s.vertex("v");
  std::string word, back;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string x = "x" + std::to_string(i);
    s.edge(x, "v", "v");
    word += x + " ";
    back += "-" + x + " ";
  }
  s.face("F", word + back);
  return build_complex(s);
}

/// Random connected complex with at most `max_cells` cells: a random tree,
/// extra edges (loops allowed) and faces glued along random closed walks.
inline CellComplex random_complex(std::mt19937& rng, std::size_t max_cells = 50) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t vertices = uniform(1, 8);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < vertices; ++i) vs.push_back({"v" + std::to_string(i)});
  std::vector<Edge> es;
  for (std::size_t i = 1; i < vertices; ++i) {
    const std::size_t other = uniform(0, i - 1);
    if (uniform(0, 1)) {
      es.push_back({"e" + std::to_string(es.size()), other, i});
    } else {
      es.push_back({"e" + std::to_string(es.size()), i, other});
    }
  }
  const std::size_t budget = max_cells - vertices - es.size();
  const std::size_t extra = uniform(0, std::min<std::size_t>(budget / 2, 12));
  for (std::size_t i = 0; i < extra; ++i) {
    es.push_back({"e" + std::to_string(es.size()), uniform(0, vertices - 1), uniform(0, vertices - 1)});
  }
  const std::size_t faces =
      es.empty() ? 0 : uniform(0, std::min<std::size_t>(max_cells - vertices - es.size(), 10));

  // Adjacency as letters leaving each vertex.
  std::vector<std::vector<Letter>> out(vertices);
  for (std::size_t e = 0; e < es.size(); ++e) {
    out[es[e].source].push_back(pos(e));
    out[es[e].target].push_back(neg(e));
  }
  auto head = [&](const Letter& l) { return l.sign == Sign::plus ? es[l.symbol].target : es[l.symbol].source; };

  // Tree paths from vertex 0 for closing walks.
  std::vector<std::optional<Word>> to_root(vertices);
  to_root[0] = Word{};
  std::vector<std::size_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Letter& l : out[queue[i]]) {
      const std::size_t w = head(l);
      if (to_root[w]) continue;
      to_root[w] = Word{l.inverse()} * *to_root[queue[i]];
      queue.push_back(w);
    }
  }

  std::vector<Face> fs;
  for (std::size_t f = 0; f < faces; ++f) {
    Word walk = inverse(*to_root[0]);
    std::size_t here = 0;
    const std::size_t steps = uniform(1, 6);
    for (std::size_t s = 0; s < steps; ++s) {
      const Letter l = out[here][uniform(0, out[here].size() - 1)];
      walk.push_back(l);
      here = head(l);
    }
    walk *= *to_root[here];
    if (walk.empty()) continue;
    fs.push_back({"F" + std::to_string(f), walk});
  }
  return CellComplex::from_cells(std::move(vs), std::move(es), std::move(fs), {}, 0);
}

inline Permutation random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Image of `start` under a generator word, applying letters left to right.
inline std::size_t act_word(const std::vector<Permutation>& gens, const Word& w, std::size_t start) {
  std::size_t x = start;
  for (const Letter& l : w) {
    x = l.sign == Sign::plus ? gens[l.symbol][x] : gens[l.symbol].inverse()[x];
  }
  return x;
}

inline bool satisfies_relators(const Presentation& p, const std::vector<Permutation>& gens) {
  if (gens.empty()) return true;
  for (const Word& r : p.relators) {
    for (std::size_t x = 0; x < gens.front().size(); ++x) {
      if (act_word(gens, r, x) != x) return false;
    }
  }
  return true;
}

/// Orbit of 0 together with a spanning-tree word to each orbit point.
struct Orbit {
  std::vector<std::size_t> points;
  std::vector<std::optional<Word>> word_to;
};

inline Orbit orbit_of_zero(const std::vector<Permutation>& gens, std::size_t n) {
  Orbit o;
  o.word_to.assign(n, std::nullopt);
  o.word_to[0] = Word{};
  o.points.push_back(0);
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    const std::size_t x = o.points[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const std::size_t y = s == Sign::plus ? gens[g][x] : gens[g].inverse()[x];
        if (o.word_to[y]) continue;
        o.word_to[y] = *o.word_to[x] * Word{Letter{g, s}};
        o.points.push_back(y);
      }
    }
  }
  return o;
}

/// Generators of the stabilizer of 0: u g v^-1 over orbit points u and
/// generators g, with u, v spanning-tree words.
inline std::vector<Word> stabilizer_words(const std::vector<Permutation>& gens, std::size_t n) {
  const Orbit o = orbit_of_zero(gens, n);
  std::vector<Word> out;
  for (std::size_t x : o.points) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Word w = reduce_word(*o.word_to[x] * Word{pos(g)} * inverse(*o.word_to[gens[g][x]]));
      if (!w.empty()) out.push_back(w);
    }
  }
  return out;
}

/// Random generator permutations of degree n that kill every relator, or
/// nullopt after `attempts` rejected samples.
inline std::optional<std::vector<Permutation>> random_action(std::mt19937& rng, const Presentation& p,
                                                             std::size_t n, std::size_t attempts = 4000) {
  for (std::size_t i = 0; i < attempts; ++i) {
    std::vector<Permutation> gens;
    for (std::size_t g = 0; g < p.generators.size(); ++g) gens.push_back(random_permutation(rng, n));
    if (satisfies_relators(p, gens)) return gens;
  }
  return std::nullopt;
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// |Hom(<p>, G)| up to simultaneous conjugation, by exhaustive enumeration of
/// generator images. `pointed` skips the conjugation quotient.
inline std::size_t count_hom_classes(const Presentation& p, const FiniteGroup& g, bool pointed = false) {
  const std::size_t k = p.generators.size();
  const std::size_t order = g.order();
  std::set<std::vector<std::size_t>> seen;
  std::size_t classes = 0;
  std::vector<std::size_t> images(k, 0);
  auto eval = [&](const Word& w, const std::vector<std::size_t>& im) {
    std::size_t acc = 0;
    for (const Letter& l : w) {
      acc = g.multiply(acc, l.sign == Sign::plus ? im[l.symbol] : g.inverse(im[l.symbol]));
    }
    return acc;
  };
  while (true) {
    const bool hom = std::all_of(p.relators.begin(), p.relators.end(),
                                 [&](const Word& r) { return eval(r, images) == 0; });
    if (hom && !seen.count(images)) {
      ++classes;
      if (pointed) {
        seen.insert(images);
      } else {
        for (std::size_t c = 0; c < order; ++c) {
          std::vector<std::size_t> conj(k);
          for (std::size_t i = 0; i < k; ++i) conj[i] = g.conjugate(images[i], c);
          seen.insert(conj);
        }
      }
    }
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++images[i] < order) break;
      images[i] = 0;
    }
    if (i == k) break;
  }
  return classes;
}

/// Hom classes of a possibly disconnected nerve: product over components.
inline std::size_t count_nerve_hom_classes(const CellComplex& nerve, const FiniteGroup& g,
                                           bool pointed = false) {
  const ComponentPartition parts = connected_components(nerve);
  std::size_t total = 1;
  for (std::size_t comp = 0; comp < parts.count; ++comp) {
    std::size_t root = 0;
    while (parts.vertex[root] != comp) ++root;
    total *= count_hom_classes(presentation(nerve, root), g, pointed && comp == 0);
  }
  return total;
}


/// Two patches meeting in two components: the nerve of a circle by two arcs.
inline NerveSpec two_arc_nerve() {
  NerveSpec s;
  s.patches = {"P1", "P2"};
  s.overlaps.push_back({"P1", "P2", {"c1", "c2"}});
  return s;
}

/// Three patches, pairwise single overlaps, with or without the triple overlap.
inline NerveSpec triangle_nerve(bool with_triple) {
  NerveSpec s;
  s.patches = {"P1", "P2", "P3"};
  s.overlaps.push_back({"P1", "P2", {"c12"}});
  s.overlaps.push_back({"P2", "P3", {"c23"}});
  s.overlaps.push_back({"P1", "P3", {"c13"}});
  if (with_triple) s.triples.push_back({{"P1", "P2", "P3"}, {{"t", {"c12", "c23", "c13"}}}});
  return s;
}

}  // namespace testing_support
