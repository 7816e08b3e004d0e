#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cellcover/abelian.hpp"
#include "cellcover/cech.hpp"
#include "cellcover/complex.hpp"
#include "cellcover/covers.hpp"
#include "cellcover/finite_group.hpp"
#include "cellcover/lazy_complex.hpp"

namespace cellcover {

/// Grammar, one declaration per line, `#` starts a comment:
///   vertex <id>
///   edge <id> <src> <dst>
///   face <id> <letter>+        letter = <edge> | -<edge>
///   chart <id> <cell>+
///   basepoint <vertex>
/// Declarations may come in any order. Throws SyntaxError(line).
ComplexSpec parse_cxc_spec(std::string_view text);
CellComplex parse_cxc(std::string_view text, const BuildLimits& limits = {});

bool is_identifier(std::string_view s);

/// Vertices, edges, faces, charts by ascending id, then the basepoint.
std::string emit_cxc(const CellComplex& c);
/// The total complex followed by `# projection <total> -> <base>` lines.
std::string emit_cxc(const CoveringComplex& cov);
/// Throws InfiniteComplex unless `c` is exhausted within `budget` cells.
std::string emit_cxc(LazyComplex& c, std::size_t budget);

/// `patch P`, `overlap P Q : c1 c2 ...`, `triple P Q R : t(ca,cb,cc) ...`
NerveSpec parse_nerve(std::string_view text);

/// `label <component> <+|-> -> <element>`; elements are `e`, `g<k>` or `<k>`.
Cocycle parse_cocycle(std::string_view text, const CellComplex& nerve, const FiniteGroup& g);
std::string emit_cocycle(const CellComplex& nerve, const Cocycle& c);

/// Square table of element indices, identity = 0.
FiniteGroup parse_group_table(std::string_view text);

/// Rows of whitespace-separated integers.
IntMatrix parse_matrix(std::string_view text);

}  // namespace cellcover
