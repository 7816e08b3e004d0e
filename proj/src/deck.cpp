#include <algorithm>
#include <map>

#include "cellcover/covers.hpp"
#include "cellcover/error.hpp"

namespace cellcover {

bool DeckGroup::is_commutative() const {
  for (std::size_t i = 0; i < product.size(); ++i) {
    for (std::size_t j = i + 1; j < product.size(); ++j) {
      if (product[i][j] != product[j][i]) return false;
    }
  }
  return true;
}

bool DeckGroup::is_cyclic() const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const Permutation& p) { return p.order() == order(); });
}

DeckGroup deck_group(const CosetTable& t) {
  if (!t.is_transitive()) {
    throw Error(ErrorCode::InvalidArgument, "deck group needs a connected (transitive) cover");
  }
  const std::vector<Word> stabilizer = t.schreier_generators();

  DeckGroup out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    // c lies in N(H)/H iff every generator of H fixes it.
    const bool normalizes = std::all_of(stabilizer.begin(), stabilizer.end(), [&](const Word& h) {
      return monodromy_action(t, h, c) == c;
    });
    if (!normalizes) continue;
    std::vector<std::size_t> images(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      images[i] = monodromy_action(t, *t.schreier_rep(i), c);
    }
    out.elements.emplace_back(std::move(images));
  }

  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index.emplace(out.elements[i], i);
  out.product.assign(out.elements.size(), std::vector<std::size_t>(out.elements.size()));
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      auto it = index.find(out.elements[i] * out.elements[j]);
      if (it == index.end()) {
        throw Error(ErrorCode::InvalidArgument, "deck elements are not closed under composition");
      }
      out.product[i][j] = it->second;
    }
  }
  out.regular = out.elements.size() == t.size();
  return out;
}

DeckGroup deck_group(const CoveringComplex& cov) { return deck_group(cov.table); }

bool is_cell_automorphism(const CoveringComplex& cov, const Permutation& fiber_perm) {
  if (fiber_perm.size() != cov.sheets()) return false;
  const std::size_t n = cov.sheets();
  auto map_index = [&](std::size_t index) { return (index / n) * n + fiber_perm[index % n]; };

  for (std::size_t e = 0; e < cov.total.edge_count(); ++e) {
    const Edge& src = cov.total.edge(e);
    const Edge& dst = cov.total.edge(map_index(e));
    if (dst.source != map_index(src.source) || dst.target != map_index(src.target)) return false;
    if (cov.edge_projection[map_index(e)] != cov.edge_projection[e]) return false;
  }
  for (std::size_t f = 0; f < cov.total.face_count(); ++f) {
    Word mapped;
    for (const Letter& l : cov.total.face(f).boundary) mapped.push_back({map_index(l.symbol), l.sign});
    // Boundaries are stored from a canonical corner, so compare as cyclic words.
    const Word& target = cov.total.face(map_index(f)).boundary;
    if (mapped.size() != target.size()) return false;
    bool match = false;
    for (std::size_t r = 0; r < target.size() && !match; ++r) {
      match = true;
      for (std::size_t k = 0; k < target.size(); ++k) {
        if (target[(r + k) % target.size()] != mapped[k]) {
          match = false;
          break;
        }
      }
    }
    if (!match) return false;
    if (cov.face_projection[map_index(f)] != cov.face_projection[f]) return false;
  }
  for (std::size_t v = 0; v < cov.total.vertex_count(); ++v) {
    if (cov.vertex_projection[map_index(v)] != cov.vertex_projection[v]) return false;
  }
  return true;
}

}  // namespace cellcover
