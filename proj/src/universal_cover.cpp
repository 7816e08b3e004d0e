#include "cellcover/universal_cover.hpp"

#include <algorithm>
#include <set>

#include "cellcover/covers.hpp"
#include "cellcover/error.hpp"

namespace cellcover {

namespace {

Word commutator(std::size_t a, std::size_t b) { return Word{pos(a), pos(b), neg(a), neg(b)}; }

bool is_free_abelian(const Presentation& p) {
  const std::size_t k = p.generators.size();
  if (k < 2 || p.relators.size() != k * (k - 1) / 2) return false;
  std::set<std::pair<std::size_t, std::size_t>> hit;
  for (const Word& r : p.relators) {
    const Word rel = normalize_relator(r);
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < k && !pair; ++a) {
      for (std::size_t b = a + 1; b < k && !pair; ++b) {
        const Word c = normalize_relator(commutator(a, b));
        if (rel == c || rel == normalize_relator(inverse(c))) pair = {a, b};
      }
    }
    if (!pair || !hit.insert(*pair).second) return false;
  }
  return true;
}

}  // namespace

std::optional<Pi1Class> classify_pi1(const Presentation& p) {
  if (p.generators.empty()) return Pi1Class::trivial;
  if (p.relators.empty()) return Pi1Class::free;
  if (is_free_abelian(p)) return Pi1Class::free_abelian;
  try {
    if (enumerate_cosets(p, SubgroupWords{}, 10'000).size() == 1) return Pi1Class::trivial;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// NormalForms

std::vector<std::int64_t> NormalForms::identity() const {
  if (kind_ == Pi1Class::free_abelian) return std::vector<std::int64_t>(generators_, 0);
  return {};
}

std::vector<std::int64_t> NormalForms::letter(const Letter& l) const {
  const std::int64_t s = l.sign == Sign::plus ? 1 : -1;
  switch (kind_) {
    case Pi1Class::trivial: return {};
    case Pi1Class::free: return {s * static_cast<std::int64_t>(l.symbol + 1)};
    case Pi1Class::free_abelian: {
      auto v = identity();
      v.at(l.symbol) = s;
      return v;
    }
  }
  return {};
}

std::vector<std::int64_t> NormalForms::multiply(const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) const {
  switch (kind_) {
    case Pi1Class::trivial: return {};
    case Pi1Class::free: {
      std::vector<std::int64_t> out = a;
      for (std::int64_t x : b) {
        if (!out.empty() && out.back() == -x) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
      return out;
    }
    case Pi1Class::free_abelian: {
      std::vector<std::int64_t> out = a;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
      return out;
    }
  }
  return {};
}

std::vector<std::int64_t> NormalForms::inverse(const std::vector<std::int64_t>& a) const {
  std::vector<std::int64_t> out;
  if (kind_ == Pi1Class::free) {
    for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  } else {
    for (std::int64_t x : a) out.push_back(-x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generated total complex

namespace {

class UniversalSource final : public CellSource {
 public:
  UniversalSource(std::shared_ptr<const CellComplex> base, const Presentation& p,
                  NormalForms forms)
      : base_(std::move(base)), forms_(forms), edge_generator_(base_->edge_count()) {
    for (std::size_t g = 0; g < p.generator_edges.size(); ++g) {
      edge_generator_[p.generator_edges[g]] = g;
    }
  }

  CellKey basepoint() const override {
    return {CellKind::vertex, *base_->basepoint(), forms_.identity()};
  }

  std::pair<CellKey, CellKey> endpoints(const CellKey& edge) const override {
    const Edge& e = base_->edge(edge.base);
    return {{CellKind::vertex, e.source, edge.coords},
            {CellKind::vertex, e.target, forms_.multiply(edge.coords, element(pos(edge.base)))}};
  }

  std::vector<KeyedLetter> boundary(const CellKey& face) const override {
    std::vector<KeyedLetter> out;
    std::vector<std::int64_t> here = face.coords;
    for (const Letter& l : base_->face(face.base).boundary) {
      if (l.sign == Sign::plus) {
        out.push_back({{CellKind::edge, l.symbol, here}, Sign::plus});
        here = forms_.multiply(here, element(l));
      } else {
        here = forms_.multiply(here, element(l));
        out.push_back({{CellKind::edge, l.symbol, here}, Sign::minus});
      }
    }
    return out;
  }

  std::vector<CellKey> edges_at(const CellKey& vertex) const override {
    std::vector<CellKey> out;
    for (std::size_t e : base_->incident_edges(vertex.base)) {
      const Edge& edge = base_->edge(e);
      if (edge.source == vertex.base) push_unique(out, {CellKind::edge, e, vertex.coords});
      if (edge.target == vertex.base) {
        push_unique(out, {CellKind::edge, e, forms_.multiply(vertex.coords, element(neg(e)))});
      }
    }
    return out;
  }

  std::vector<CellKey> faces_at(const CellKey& edge) const override {
    std::vector<CellKey> out;
    for (std::size_t f : base_->incident_faces(edge.base)) {
      std::vector<std::int64_t> prefix = forms_.identity();
      for (const Letter& l : base_->face(f).boundary) {
        if (l.symbol == edge.base) {
          auto start = l.sign == Sign::plus ? edge.coords
                                            : forms_.multiply(edge.coords, element(pos(l.symbol)));
          push_unique(out, {CellKind::face, f, forms_.multiply(start, forms_.inverse(prefix))});
        }
        prefix = forms_.multiply(prefix, element(l));
      }
    }
    return out;
  }

  std::string label(const CellKey& cell) const override {
    std::string out = base_->name({cell.kind, cell.base}) + "[";
    for (std::size_t i = 0; i < cell.coords.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cell.coords[i]);
    }
    return out + "]";
  }

 private:
  static void push_unique(std::vector<CellKey>& list, CellKey key) {
    if (std::find(list.begin(), list.end(), key) == list.end()) list.push_back(std::move(key));
  }

  /// pi1 element carried by an edge letter: its generator, or the identity on tree edges.
  std::vector<std::int64_t> element(const Letter& l) const {
    if (auto g = edge_generator_[l.symbol]) return forms_.letter({*g, l.sign});
    return forms_.identity();
  }

  std::shared_ptr<const CellComplex> base_;
  NormalForms forms_;
  std::vector<std::optional<std::size_t>> edge_generator_;
};

}  // namespace

UniversalCover::UniversalCover(const CellComplex& base, Presentation p, Pi1Class kind)
    : base_(std::make_shared<const CellComplex>(base)),
      presentation_(std::move(p)),
      forms_(kind, presentation_.generators.size()) {
  total_ = std::make_unique<LazyComplex>(
      std::make_shared<UniversalSource>(base_, presentation_, forms_));
}

CellId UniversalCover::project(CellId total_cell) const {
  return {total_cell.kind, total_->key(total_cell).base};
}

std::vector<std::int64_t> UniversalCover::normal_form(CellId total_cell) const {
  return total_->key(total_cell).coords;
}

CellKey UniversalCover::translate(const CellKey& key, const std::vector<std::int64_t>& g) const {
  return {key.kind, key.base, forms_.multiply(g, key.coords)};
}

std::vector<CellId> UniversalCover::fiber_ball(std::size_t radius) {
  const std::size_t base = *base_->basepoint();
  const std::size_t k = presentation_.generators.size();
  std::vector<std::vector<std::int64_t>> forms;
  switch (kind()) {
    case Pi1Class::trivial:
      forms.push_back({});
      break;
    case Pi1Class::free: {
      std::vector<std::vector<std::int64_t>> layer{{}};
      forms.push_back({});
      for (std::size_t len = 0; len < radius; ++len) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& w : layer) {
          for (std::size_t g = 0; g < k; ++g) {
            for (std::int64_t s : {1, -1}) {
              const std::int64_t x = s * static_cast<std::int64_t>(g + 1);
              if (!w.empty() && w.back() == -x) continue;
              auto longer = w;
              longer.push_back(x);
              next.push_back(longer);
              forms.push_back(std::move(longer));
            }
          }
        }
        layer = std::move(next);
      }
      break;
    }
    case Pi1Class::free_abelian: {
      const auto r = static_cast<std::int64_t>(radius);
      std::vector<std::int64_t> v(k, -r);
      while (true) {
        forms.push_back(v);
        std::size_t i = 0;
        while (i < k && v[i] == r) v[i++] = -r;
        if (i == k) break;
        ++v[i];
      }
      break;
    }
  }
  std::vector<CellId> out;
  out.reserve(forms.size());
  for (auto& f : forms) out.push_back(total_->materialize({CellKind::vertex, base, std::move(f)}));
  return out;
}

UniversalCover universal_cover(const CellComplex& c) {
  Presentation p = presentation(c);
  const auto kind = classify_pi1(p);
  if (!kind) {
    throw Error(ErrorCode::UnsupportedPi1,
                "fundamental group is not recognized as trivial, free or free abelian: " +
                    format_presentation(p));
  }
  return UniversalCover(c, std::move(p), *kind);
}

}  // namespace cellcover
