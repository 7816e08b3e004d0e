#include "cellcover/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "cellcover/error.hpp"

namespace cellcover {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw Error(ErrorCode::InvalidArgument, "image list is not a permutation");
    }
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "permutation sizes differ");
  }
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b.images_[a.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::string format_image_list(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out + ")";
}

Permutation parse_image_list(std::string_view text) {
  std::string body(text);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
  std::size_t start = body.find_first_not_of(" \t");
  if (start == std::string::npos || body[start] != '(' || body.back() != ')') {
    throw Error(ErrorCode::SyntaxError, "expected image list like (2 1 3), got '" + body + "'");
  }
  std::istringstream in(body.substr(start + 1, body.size() - start - 2));
  std::vector<std::size_t> images;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 1) {
      throw Error(ErrorCode::SyntaxError, "bad image '" + tok + "' in permutation");
    }
    images.push_back(static_cast<std::size_t>(value - 1));
  }
  return Permutation(std::move(images));
}

}  // namespace cellcover
