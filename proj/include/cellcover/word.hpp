#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellcover {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

/// An oriented symbol: an edge of a complex, or a generator of a presentation.
struct Letter {
  std::size_t symbol = 0;
  Sign sign = Sign::plus;

  constexpr Letter inverse() const noexcept { return {symbol, -sign}; }
  constexpr bool cancels(const Letter& other) const noexcept {
    return symbol == other.symbol && sign != other.sign;
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  // Orders by symbol, then `+` before `-`.
  friend constexpr std::strong_ordering operator<=>(const Letter& a,
                                                    const Letter& b) noexcept {
    if (auto c = a.symbol <=> b.symbol; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

constexpr Letter pos(std::size_t symbol) noexcept { return {symbol, Sign::plus}; }
constexpr Letter neg(std::size_t symbol) noexcept { return {symbol, Sign::minus}; }

/// A finite sequence of letters; the empty word is the identity / constant path.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Concatenation, without reduction.
Word operator*(Word lhs, const Word& rhs);

Word inverse(const Word& w);
Word power(const Word& w, long exponent);

bool is_reduced(const Word& w);
/// Deletes adjacent inverse pairs until none remain.
Word reduce_word(const Word& w);
/// Free reduction followed by stripping inverse pairs from the two ends.
Word cyclically_reduce(const Word& w);
/// Lexicographically least cyclic rotation (letter order of `Letter`).
Word least_rotation(const Word& w);

/// Sum of signed exponents of `symbol` in `w`.
long exponent_sum(const Word& w, std::size_t symbol);

/// Replaces every letter by the word given for its symbol (inverted for `-`).
Word substitute(const Word& w, std::span<const Word> images);

/// Whitespace-separated letters `x` / `-x`; `1` (or an empty string) is the
/// empty word.
std::string format_word(const Word& w, std::span<const std::string> names);
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace cellcover
