#pragma once

#include <memory>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

/// A representation of a finite quantale on a finite sup-lattice: a quantale
/// homomorphism into Q(S). The induced module action is x . a = r(a)(x), so
/// x . (a * b) = (x . a) . b holds because the product of Q(S) is composition
/// in diagram order.
struct Representation {
  std::shared_ptr<const FiniteQuantale> source;
  std::shared_ptr<const EndoQuantale> target;
  std::vector<int> map;  // source index -> element of Q(S)

  const SupLattice& carrier() const { return target->carrier; }
  int act(int x, int a) const { return target->maps[map[a]].values[x]; }
};

/// All quantale homomorphisms src -> tgt (joins and product; units and stars
/// are ignored), in lexicographic order of their map vectors. Backtracking
/// over the join-irreducibles of src in linear-extension order; join-reducible
/// elements are forced to the join of the images below them, and every
/// join/product equation is checked as soon as its last participant is
/// assigned, so the output is exactly the set of homomorphisms.
std::vector<std::vector<int>> enumerate_homs(const FiniteQuantale& src, const FiniteQuantale& tgt);

/// All representations of q on every carrier with at most carrier_cap
/// elements, one carrier per isomorphism class, ordered by carrier and then
/// by map. Throws std::length_error("cap-exceeded...") past the supported cap.
std::vector<Representation> enumerate_representations(const FiniteQuantale& q, int carrier_cap);

/// The irreducible representations among enumerate_representations.
std::vector<Representation> enumerate_points(const FiniteQuantale& q, int carrier_cap);

/// x . 1_Q <= x only for x in {bottom, top} of the carrier.
bool is_irreducible(const Representation& r);

/// r(1_Q) is the top endomap (everything nonzero goes to the carrier top).
bool is_strong(const Representation& r);

/// id_S <= r(e); throws std::invalid_argument("missing-unit") if q has no unit.
bool is_pre_unital(const Representation& r);

/// No two distinct elements of q have identical images under every rep.
bool separates(const FiniteQuantale& q, const std::vector<Representation>& reps);

struct KrumlReport {
  bool spatial_by_primes = false;
  bool separated = false;  // by all irreducible reps on carriers <= cap
  int carrier_cap = 0;
  int point_count = 0;
  bool agree() const { return spatial_by_primes == separated; }
};

/// Desk-scale comparison of the two spatiality notions.
KrumlReport kruml_crosscheck(const FiniteQuantale& q, int carrier_cap);

}  // namespace qlab
