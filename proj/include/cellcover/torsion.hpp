#pragma once

#include "cellcover/abelian.hpp"
#include "cellcover/covers.hpp"

namespace cellcover {

/// pi1 / m pi1 = (Z/m)^rank for a torsion-free pi1, i.e. the m-torsion
/// subgroup of a covered abelian group. Throws TorsionInPi1 when pi1 has
/// invariant factors.
FgAbelian torsion_points(const FgAbelian& pi1, const Integer& m);

/// Degree of multiplication by m as a covering map: [pi1 : m pi1] = m^rank.
Integer mult_by_m_degree(const FgAbelian& pi1, const Integer& m);

/// Checks that the deck group of `cov` is commutative. `pi1_ab` must be the
/// abelianization of the base group (InvalidArgument otherwise); the caller
/// vouches that the base group is abelian.
bool deck_abelian_check(const CoveringComplex& cov, const FgAbelian& pi1_ab);

}  // namespace cellcover
