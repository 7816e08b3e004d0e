#include "cellcover/word.hpp"

#include <algorithm>
#include <sstream>

#include "cellcover/error.hpp"

namespace cellcover {

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word operator*(Word lhs, const Word& rhs) {
  lhs *= rhs;
  return lhs;
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word{std::move(out)};
}

Word power(const Word& w, long exponent) {
  const Word base = exponent < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out *= base;
  return out;
}

bool is_reduced(const Word& w) {
  return std::adjacent_find(w.begin(), w.end(), [](const Letter& a, const Letter& b) {
           return a.cancels(b);
         }) == w.end();
}

Word reduce_word(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word{std::move(stack)};
}

Word cyclically_reduce(const Word& w) {
  Word r = reduce_word(w);
  const auto& ls = r.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word{std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi))};
}

Word least_rotation(const Word& w) {
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  if (n == 0) return w;
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = ls[(start + k) % n];
      const Letter& b = ls[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = start;
      break;
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(ls[(best + k) % n]);
  return Word{std::move(out)};
}

long exponent_sum(const Word& w, std::size_t symbol) {
  long sum = 0;
  for (const Letter& l : w) {
    if (l.symbol == symbol) sum += l.sign == Sign::plus ? 1 : -1;
  }
  return sum;
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const Letter& l : w) {
    if (l.symbol >= images.size()) {
      throw Error(ErrorCode::UnmappedGenerator,
                  "no image for symbol " + std::to_string(l.symbol));
    }
    out *= l.sign == Sign::plus ? images[l.symbol] : inverse(images[l.symbol]);
  }
  return out;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    if (l.sign == Sign::minus) out += '-';
    out += l.symbol < names.size() ? names[l.symbol] : "#" + std::to_string(l.symbol);
  }
  return out;
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "1")) return {};

  Word out;
  for (const std::string& tok : tokens) {
    Sign sign = Sign::plus;
    std::string_view name = tok;
    if (name.front() == '-') {
      sign = Sign::minus;
      name.remove_prefix(1);
    }
    if (name.empty()) throw Error(ErrorCode::SyntaxError, "dangling '-' in word '" + std::string(text) + "'");
    if (name.front() == '-') throw Error(ErrorCode::SyntaxError, "repeated '-' in '" + tok + "'");
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw Error(ErrorCode::UnknownGenerator, "unknown symbol '" + std::string(name) + "'");
    }
    out.push_back({static_cast<std::size_t>(it - names.begin()), sign});
  }
  return out;
}

}  // namespace cellcover
