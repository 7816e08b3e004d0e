#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cellcover {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix. Shape is kept even when a dimension is 0.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, every di >= 2.
struct FgAbelian {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  bool is_torsion_free() const { return invariant_factors.empty(); }
  /// Group order, or nullopt when rank > 0.
  std::optional<Integer> order() const;

  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;
};

using SmithForm = FgAbelian;

/// Cokernel of `m` viewed as a relation matrix (rows = relations, columns =
/// generators), via Smith normal form.
FgAbelian smith_form(const IntMatrix& m);

/// Diagonal of the Smith normal form (absolute values, length min(rows, cols)).
std::vector<Integer> smith_diagonal(IntMatrix m);

/// E.g. "Z^2 + Z/3 + Z/6", "0" for the trivial group.
std::string format_abelian(const FgAbelian& g);

}  // namespace cellcover
