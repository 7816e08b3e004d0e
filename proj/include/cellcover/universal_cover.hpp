#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cellcover/complex.hpp"
#include "cellcover/lazy_complex.hpp"
#include "cellcover/pi1.hpp"

namespace cellcover {

/// Fundamental groups whose elements have a computable normal form.
enum class Pi1Class {
  trivial,       // normal form: empty
  free,          // reduced words, encoded as signed generator numbers +-(g+1)
  free_abelian,  // exponent vectors
};

/// Recognizes the three supported classes, or nullopt.
std::optional<Pi1Class> classify_pi1(const Presentation& p);

/// Group arithmetic on normal forms of a supported fundamental group.
class NormalForms {
 public:
  NormalForms(Pi1Class kind, std::size_t generators) : kind_(kind), generators_(generators) {}

  Pi1Class kind() const noexcept { return kind_; }
  std::vector<std::int64_t> identity() const;
  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b) const;
  std::vector<std::int64_t> inverse(const std::vector<std::int64_t>& a) const;
  std::vector<std::int64_t> letter(const Letter& l) const;

 private:
  Pi1Class kind_;
  std::size_t generators_;
};

/// Universal cover with a lazily generated total complex. Total cells are
/// keyed by (base cell, normal form of a pi1 element).
class UniversalCover {
 public:
  UniversalCover(const CellComplex& base, Presentation p, Pi1Class kind);

  const CellComplex& base() const noexcept { return *base_; }
  const Presentation& presentation() const noexcept { return presentation_; }
  Pi1Class kind() const noexcept { return forms_.kind(); }
  const NormalForms& forms() const noexcept { return forms_; }
  LazyComplex& total() noexcept { return *total_; }

  CellId project(CellId total_cell) const;
  std::vector<std::int64_t> normal_form(CellId total_cell) const;

  /// Image of a cell under the deck transformation "left multiply by g".
  CellKey translate(const CellKey& key, const std::vector<std::int64_t>& g) const;

  /// Lifts of the basepoint whose normal form has size at most `radius`:
  /// word length for free groups, the max-norm for free abelian groups.
  std::vector<CellId> fiber_ball(std::size_t radius);

 private:
  std::shared_ptr<const CellComplex> base_;
  Presentation presentation_;
  NormalForms forms_;
  std::unique_ptr<LazyComplex> total_;
};

/// Throws UnsupportedPi1 when pi1 is not trivial, free or free abelian by
/// the recognizers above.
UniversalCover universal_cover(const CellComplex& c);

}  // namespace cellcover
