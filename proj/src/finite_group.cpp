#include "cellcover/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "cellcover/error.hpp"
#include "cellcover/permutation.hpp"

namespace cellcover {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty group table");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "group table is not square");
    for (std::size_t x : row) {
      if (x >= n) throw Error(ErrorCode::InvalidGroup, "group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) {
      throw Error(ErrorCode::InvalidGroup, "element 0 is not the identity");
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    if (inverse_[a] == n || table_[inverse_[a]][a] != 0) {
      throw Error(ErrorCode::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::InvalidGroup, "multiplication is not associative");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> elements;
  do {
    elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  std::vector<std::vector<std::size_t>> t(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const Permutation ab = elements[a] * elements[b];
      t[a][b] = static_cast<std::size_t>(
          std::lower_bound(elements.begin(), elements.end(), ab) - elements.begin());
    }
  }
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::conjugate(std::size_t a, std::size_t b) const {
  return multiply(multiply(inverse(b), a), b);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(const std::vector<std::size_t>& elements) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t g : elements) {
      const std::size_t x = multiply(members[i], g);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace cellcover
