#pragma once

#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

/// Bundled finite quantales used by the property suites, the cross-checks and
/// the scenario runner. Deterministic order; names are unique.
const std::vector<FiniteQuantale>& quantale_corpus();

/// The 6-element sub-table of Max M2 on {0, <E11>, row space R, column space
/// C, symmetric P, M2}: closed under the inherited product and the sub-lattice
/// joins, involutive via conjugate transpose (R* = C), not unital. P is
/// maximal but not prime (R * top * C = <E11> <= P while R, C are not below
/// P), and P is the unique element that is not a meet of primes.
FiniteQuantale m2_pattern_quantale();

/// 3-chain 0 < a < 1 with a*a = 0 and product = meet otherwise; unital with
/// unit = top and the identity involution, but not Gelfand: a is right-sided
/// and a * a^* * a = 0 != a.
FiniteQuantale interior_chain3_quantale();

/// Product constantly bottom (no unit); the only candidate prime is top, so
/// nothing below top is a meet of primes.
FiniteQuantale zero_chain3_quantale();

}  // namespace qlab
