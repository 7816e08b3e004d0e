#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cellcover {

/// A bijection of {0, ..., n-1}, acting on the right: i * (a * b) = (i * a) * b.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Smallest k >= 1 with p^k = id.
  std::size_t order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::size_t> images_;
};

/// 1-based image list, e.g. "(2 1 3)".
std::string format_image_list(const Permutation& p);
Permutation parse_image_list(std::string_view text);

}  // namespace cellcover
