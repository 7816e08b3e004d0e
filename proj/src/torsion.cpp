#include "cellcover/torsion.hpp"

#include "cellcover/error.hpp"

namespace cellcover {

namespace {

void require_torsion_free(const FgAbelian& pi1, const Integer& m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be a positive integer");
  if (!pi1.is_torsion_free()) {
    throw Error(ErrorCode::TorsionInPi1, "fundamental group " + format_abelian(pi1) +
                                             " has torsion");
  }
}

}  // namespace

FgAbelian torsion_points(const FgAbelian& pi1, const Integer& m) {
  require_torsion_free(pi1, m);
  FgAbelian out;
  if (m > 1) out.invariant_factors.assign(pi1.rank, m);
  return out;
}

Integer mult_by_m_degree(const FgAbelian& pi1, const Integer& m) {
  require_torsion_free(pi1, m);
  Integer degree = 1;
  for (std::size_t i = 0; i < pi1.rank; ++i) degree *= m;
  return degree;
}

bool deck_abelian_check(const CoveringComplex& cov, const FgAbelian& pi1_ab) {
  if (abelianization(cov.base_presentation) != pi1_ab) {
    throw Error(ErrorCode::InvalidArgument,
                "witness " + format_abelian(pi1_ab) + " is not the abelianization of the base");
  }
  return deck_group(cov).is_commutative();
}

}  // namespace cellcover
