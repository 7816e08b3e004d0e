#include <algorithm>
#include <cstdint>
#include <deque>

#include "cellcover/covers.hpp"
#include "cellcover/error.hpp"

namespace cellcover {

// ---------------------------------------------------------------------------
// CosetTable

CosetTable::CosetTable(std::vector<std::string> generators, std::vector<Permutation> action)
    : generators_(std::move(generators)), action_(std::move(action)) {
  if (generators_.size() != action_.size()) {
    throw Error(ErrorCode::InvalidArgument, "one permutation per generator expected");
  }
  n_ = action_.empty() ? 1 : action_.front().size();
  for (const Permutation& p : action_) {
    if (p.size() != n_) throw Error(ErrorCode::InvalidArgument, "permutation sizes differ");
  }
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "empty fiber");
  for (const Permutation& p : action_) inverse_.push_back(p.inverse());

  reps_.assign(n_, std::nullopt);
  reps_[0] = Word{};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < action_.size(); ++g) {
      const std::size_t d = action_[g][c];
      if (reps_[d]) continue;
      Word w = *reps_[c];
      w.push_back(pos(g));
      reps_[d] = std::move(w);
      queue.push_back(d);
    }
  }
}

std::size_t CosetTable::act(std::size_t coset, const Letter& l) const {
  if (l.symbol >= action_.size()) {
    throw Error(ErrorCode::UnknownGenerator, "generator index " + std::to_string(l.symbol));
  }
  return l.sign == Sign::plus ? action_[l.symbol][coset] : inverse_[l.symbol][coset];
}

bool CosetTable::is_transitive() const {
  return std::all_of(reps_.begin(), reps_.end(), [](const auto& r) { return r.has_value(); });
}

std::vector<Word> CosetTable::schreier_generators() const {
  std::vector<Word> out;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!reps_[c]) continue;
    for (std::size_t g = 0; g < action_.size(); ++g) {
      Word w = *reps_[c] * Word{pos(g)} * inverse(*reps_[action_[g][c]]);
      w = reduce_word(w);
      if (!w.empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

CosetTable CosetTable::canonical() const {
  std::vector<std::size_t> label(n_, SIZE_MAX);
  std::vector<std::size_t> order{0};
  label[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Permutation& p : action_) {
      const std::size_t d = p[order[head]];
      if (label[d] == SIZE_MAX) {
        label[d] = order.size();
        order.push_back(d);
      }
    }
  }
  std::vector<Permutation> relabelled;
  for (const Permutation& p : action_) {
    std::vector<std::size_t> images(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) images[i] = label[p[order[i]]];
    relabelled.emplace_back(std::move(images));
  }
  if (action_.empty()) return CosetTable(generators_, {});
  return CosetTable(generators_, std::move(relabelled));
}

std::size_t monodromy_action(const CosetTable& t, const Word& w, std::size_t start) {
  if (start >= t.size()) {
    throw Error(ErrorCode::UnknownCoset, "coset " + std::to_string(start + 1) + " of " +
                                             std::to_string(t.size()));
  }
  std::size_t c = start;
  for (const Letter& l : w) c = t.act(c, l);
  return c;
}

bool tables_conjugate(const CosetTable& a, const CosetTable& b) {
  if (a.size() != b.size() || a.generator_count() != b.generator_count()) return false;
  if (!a.is_transitive() || !b.is_transitive()) return a == b;
  const std::size_t n = a.size();
  for (std::size_t target = 0; target < n; ++target) {
    // Candidate relabelling phi with phi(0) = target, forced by the actions.
    std::vector<std::size_t> phi(n, SIZE_MAX);
    phi[0] = target;
    bool ok = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty() && ok) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < a.generator_count() && ok; ++g) {
        const std::size_t d = a.action(g)[c];
        const std::size_t image = b.action(g)[phi[c]];
        if (phi[d] == SIZE_MAX) {
          phi[d] = image;
          queue.push_back(d);
        } else if (phi[d] != image) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return true;
  }
  return false;
}

std::string format_table(const CosetTable& t) {
  std::string out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (std::size_t g = 0; g < t.generator_count(); ++g) {
      out += std::to_string(c + 1) + " " + t.generators()[g] + " -> " +
             std::to_string(t.action(g)[c] + 1) + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HLT coset enumeration

namespace {

constexpr std::int64_t undefined = -1;

/// Column 2g is generator g, column 2g+1 its inverse.
class ToddCoxeter {
 public:
  ToddCoxeter(std::size_t generators, std::size_t budget)
      : cols_(2 * generators), budget_(budget) {}

  static std::vector<std::size_t> columns(const Word& w) {
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (const Letter& l : w) out.push_back(2 * l.symbol + (l.sign == Sign::minus ? 1 : 0));
    return out;
  }

  std::vector<Permutation> run(const std::vector<std::vector<std::size_t>>& relators,
                               const std::vector<std::vector<std::size_t>>& subgroup) {
    add_coset();
    for (const auto& h : subgroup) scan_and_fill(0, h);
    for (std::size_t a = 0; a < rows(); ++a) {
      if (!live(a)) continue;
      for (const auto& r : relators) {
        scan_and_fill(a, r);
        if (!live(a)) break;
      }
      if (!live(a)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(a, x) == undefined) define(a, x);
      }
    }
    return compact();
  }

 private:
  std::size_t rows() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::int64_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  std::size_t add_coset() {
    if (rows() >= budget_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "coset enumeration did not close within " + std::to_string(budget_) +
                      " coset definitions (index may be infinite)");
    }
    const std::size_t c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, undefined);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = add_coset();
    at(c, x) = static_cast<std::int64_t>(d);
    at(d, x ^ 1) = static_cast<std::int64_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t dead = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int64_t target = at(dead, x);
        if (target == undefined) continue;
        const auto d = static_cast<std::size_t>(target);
        if (at(d, x ^ 1) == static_cast<std::int64_t>(dead)) at(d, x ^ 1) = undefined;
        const std::size_t mu = rep(dead);
        const std::size_t nu = rep(d);
        if (at(mu, x) != undefined) {
          merge(nu, static_cast<std::size_t>(at(mu, x)), queue);
        } else if (at(nu, x ^ 1) != undefined) {
          merge(mu, static_cast<std::size_t>(at(nu, x ^ 1)), queue);
        } else {
          at(mu, x) = static_cast<std::int64_t>(nu);
          at(nu, x ^ 1) = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c;
    std::size_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != undefined) {
        f = static_cast<std::size_t>(at(f, w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != undefined) {
        b = static_cast<std::size_t>(at(b, w[static_cast<std::size_t>(j)] ^ 1));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = static_cast<std::int64_t>(b);
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<Permutation> compact() {
    std::vector<std::size_t> index(rows(), SIZE_MAX);
    std::size_t n = 0;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (live(c)) index[c] = n++;
    }
    std::vector<Permutation> out;
    for (std::size_t x = 0; x < cols_; x += 2) {
      std::vector<std::size_t> images(n);
      for (std::size_t c = 0; c < rows(); ++c) {
        if (!live(c)) continue;
        images[index[c]] = index[rep(static_cast<std::size_t>(at(c, x)))];
      }
      out.emplace_back(std::move(images));
    }
    return out;
  }

  std::size_t cols_;
  std::size_t budget_;
  std::vector<std::int64_t> table_;
  std::vector<std::size_t> parent_;
};

void check_words(const Presentation& p, const std::vector<Word>& words, const char* what) {
  for (const Word& w : words) {
    for (const Letter& l : w) {
      if (l.symbol >= p.generators.size()) {
        throw Error(ErrorCode::UnknownGenerator,
                    std::string(what) + " uses generator index " + std::to_string(l.symbol));
      }
    }
  }
}

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, const SubgroupSpec& s, std::size_t budget) {
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
  check_words(p, p.relators, "relator");

  if (const auto* words = std::get_if<SubgroupWords>(&s)) {
    check_words(p, words->words, "subgroup generator");
    std::vector<std::vector<std::size_t>> relators;
    for (const Word& r : p.relators) relators.push_back(ToddCoxeter::columns(r));
    std::vector<std::vector<std::size_t>> subgroup;
    for (const Word& h : words->words) subgroup.push_back(ToddCoxeter::columns(h));
    ToddCoxeter tc(p.generators.size(), budget);
    std::vector<Permutation> action = tc.run(relators, subgroup);
    return CosetTable(p.generators, std::move(action)).canonical();
  }

  const auto& hom = std::get<MonodromyHom>(s);
  if (hom.images.size() != p.generators.size()) {
    throw Error(ErrorCode::InvalidMonodromy,
                "expected " + std::to_string(p.generators.size()) + " permutations, got " +
                    std::to_string(hom.images.size()));
  }
  const CosetTable full(p.generators, hom.images);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (std::size_t c = 0; c < full.size(); ++c) {
      if (monodromy_action(full, p.relators[r], c) != c) {
        throw Error(ErrorCode::InvalidMonodromy,
                    "relator " + format_word(p.relators[r], p.generators) +
                        " moves point " + std::to_string(c + 1));
      }
    }
  }
  CosetTable orbit = full.canonical();
  if (orbit.size() > budget) {
    throw Error(ErrorCode::BudgetExceeded, "orbit larger than budget");
  }
  return orbit;
}

}  // namespace cellcover
