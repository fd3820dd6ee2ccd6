#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/suplattice.hpp"

namespace qlab {

// Sup-lattice with an associative product distributing over all joins on both
// sides. 0 denotes bottom (the empty join), 1 the top. Optionally unital
// (declared unit element) and involutive (declared star permutation).
struct FiniteQuantale {
  SupLattice lattice;
  std::vector<int> product_tab;  // size*size
  std::optional<int> unit;
  std::optional<std::vector<int>> star;
  std::string name;

  int size() const { return lattice.size; }
  int bottom() const { return lattice.bottom; }
  int top() const { return lattice.top; }
  int prod(int a, int b) const { return product_tab[static_cast<size_t>(a) * size() + b]; }
  int star_of(int a) const;  // throws std::invalid_argument when star is absent
};

/// Three-valued result for checks that need optional structure (unit, star).
enum class Tri { no, yes, na };
inline const char* tri_str(Tri t) { return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "n/a"; }

struct Violation {
  std::string law;           // "associativity", "distributivity", "unit", "star", ...
  std::vector<int> witness;  // offending element indices
  std::string detail;
};

struct ClassificationReport {
  bool is_quantale = false;  // product axioms (associativity + distributivity)
  std::optional<Violation> violation;  // first failure, including declared unit/star laws
  bool unital = false;
  bool strong = false;            // 1 * 1 = 1
  Tri involutive = Tri::na;       // n/a when no star is declared
  Tri gelfand = Tri::na;          // needs unit and star
  bool strictly_two_sided = false;  // unital with unit = top
  bool locale = false;              // product = meet and unit = top
  bool trivial = false;             // 0 = 1
};

/// Exhaustive finite check of every axiom; distributivity over arbitrary joins
/// reduces to binary joins plus the empty join on a finite lattice.
ClassificationReport verify_axioms(const FiniteQuantale& q);

enum class Side { right, left, two };

/// right: a*1 <= a; left: 1*a <= a; two: both.
std::vector<int> sided_elements(const FiniteQuantale& q, Side side);

/// a * a^* * a = a for every right-sided a. Pre: unital and involutive;
/// throws std::invalid_argument("missing-unit-or-star") otherwise.
bool is_gelfand(const FiniteQuantale& q);

/// Proper primes: p != top with a*1*b <= p implying a <= p or b <= p.
std::vector<int> primes(const FiniteQuantale& q);

struct SpatialityReport {
  bool spatial = false;
  std::optional<int> witness;  // least element that is not a meet of primes
  std::vector<int> primes;
};

/// Every element is a meet of primes iff a = meet{p prime : a <= p} for all a
/// (the empty meet being top).
SpatialityReport is_spatial_by_primes(const FiniteQuantale& q);

struct QuantaleHom {
  std::shared_ptr<const FiniteQuantale> source, target;
  std::vector<int> map;
};

struct HomReport {
  bool join_preserving = false;
  bool product_preserving = false;
  std::optional<Violation> violation;
  Tri unital = Tri::na;      // e' = h(e); needs both units
  Tri pre_unital = Tri::na;  // e' <= h(e)
  Tri strong = Tri::no;      // h(1) = 1'
  Tri involutive = Tri::na;  // h(a*) = h(a)*; needs both stars
  bool is_hom() const { return join_preserving && product_preserving; }
};

HomReport check_hom(const QuantaleHom& h);

struct Spatialization {
  FiniteQuantale quotient;
  std::vector<int> class_of;        // source index -> quotient index
  std::vector<int> representative;  // quotient index -> least source index
};

/// Quotient by a ~ b iff every point maps a and b equally. Points must be
/// quantale homs out of q (verified; std::invalid_argument otherwise). Class
/// labels are ordered by least representative. The quotient carries the
/// induced involution when q and all point targets do and the points commute
/// with star.
Spatialization spatialize(const FiniteQuantale& q, const std::vector<QuantaleHom>& points);

/// a |-> 1 * a * 1 per element index.
std::vector<int> localic_reflection_map(const FiniteQuantale& q);

/// Q(S): all join-preserving endomaps of S under pointwise order, with
/// f * g = g after f (composition in diagram order) and unit = identity.
struct EndoQuantale {
  SupLattice carrier;
  std::vector<EndoMap> maps;  // element i of the quantale is the endomap maps[i]
  FiniteQuantale quantale;
  int index_of(const EndoMap& f) const;  // -1 when absent
};

EndoQuantale make_endo_quantale(const SupLattice& s, int cap = 6);
FiniteQuantale endo_quantale(const SupLattice& s, int cap = 6);

/// Componentwise product quantale on the product lattice.
FiniteQuantale direct_product(const FiniteQuantale& a, const FiniteQuantale& b);

/// Brute-force isomorphism (lattice + product + unit + star), capped at 8.
bool quantale_isomorphic(const FiniteQuantale& a, const FiniteQuantale& b);

/// Frame as a quantale: product = meet, unit = top, no star unless asked;
/// with_identity_star adds the identity involution (valid for any frame).
FiniteQuantale locale_quantale(const SupLattice& s, std::string name = "",
                               bool with_identity_star = false);

}  // namespace qlab
