#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cellcover {

/// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  /// Throws InvalidGroup unless `table` is a group table with identity 0.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  /// Symmetric group on n points; elements in lexicographic order of image lists.
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// b^-1 a b
  std::size_t conjugate(std::size_t a, std::size_t b) const;
  bool is_abelian() const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  /// Subgroup generated by `elements`, as a sorted element list.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& elements) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

}  // namespace cellcover
