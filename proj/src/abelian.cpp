#include "cellcover/abelian.hpp"

#include <algorithm>
#include <utility>

namespace cellcover {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols && c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::optional<Integer> FgAbelian::order() const {
  if (rank > 0) return std::nullopt;
  Integer n = 1;
  for (const Integer& d : invariant_factors) n *= d;
  return n;
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| of the trailing block, row-major first.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m(r, c) == 0) continue;
          if (!pivot || abs(m(r, c)) < abs(m(pivot->first, pivot->second))) pivot = {r, c};
        }
      }
      if (!pivot) {
        // Remaining block is zero.
        std::vector<Integer> out;
        for (std::size_t i = 0; i < diag; ++i) out.push_back(abs(m(i, i)));
        return out;
      }
      m.swap_rows(t, pivot->first);
      m.swap_cols(t, pivot->second);

      const Integer p = m(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        const Integer q = m(r, t) / p;
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        const Integer q = m(t, c) / p;
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < rows && !offending; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % p != 0) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(*offending, c);
    }
  }
  std::vector<Integer> out;
  for (std::size_t i = 0; i < diag; ++i) out.push_back(abs(m(i, i)));
  return out;
}

FgAbelian smith_form(const IntMatrix& m) {
  const std::vector<Integer> diag = smith_diagonal(m);
  FgAbelian out;
  std::size_t nonzero = 0;
  for (const Integer& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.invariant_factors.push_back(d);
  }
  out.rank = m.cols() - nonzero;
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

std::string format_abelian(const FgAbelian& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.rank > 0) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (const Integer& d : g.invariant_factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out;
}

}  // namespace cellcover
