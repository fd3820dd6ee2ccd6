#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

struct Poset {
  int size = 0;
  std::vector<std::string> names;
  std::vector<uint8_t> leq_mat;  // row-major, size*size

  bool leq(int a, int b) const { return leq_mat[static_cast<size_t>(a) * size + b] != 0; }
};

/// Validates reflexivity, antisymmetry, transitivity; throws
/// std::invalid_argument("not-a-partial-order: ...") with a witness.
Poset make_poset(int size, std::vector<uint8_t> leq_mat, std::vector<std::string> names = {});

Poset chain_poset(int n);
Poset antichain_poset(int n);
/// Product order on pairs, index (i, j) -> i * b.size + j, names "(p,q)".
Poset product_poset(const Poset& a, const Poset& b);
bool poset_isomorphic(const Poset& a, const Poset& b);  // brute force, capped at 8 points

/// A handful of posets on at most 3 points (all of them, up to isomorphism),
/// giving every frame with at most 8 elements.
std::vector<Poset> poset_corpus();

/// A finite frame presented by its poset of join-irreducible points: the
/// elements are the downsets of base, as bitmasks in increasing order, and
/// the lattice is inclusion (join = union, meet = intersection).
struct FiniteFrame {
  Poset base;
  std::vector<uint32_t> elements;
  SupLattice lattice;

  int size() const { return lattice.size; }
  int index_of_mask(uint32_t mask) const;  // -1 when not a downset
};

FiniteFrame frame_of_downsets(const Poset& p);  // base capped at 16 points

/// Join-irreducibles of s with the induced order; for a downset lattice this
/// recovers the base poset (Birkhoff duality).
Poset base_poset_of(const SupLattice& s);

/// The frame as a quantale: product = meet, unit = top, identity involution.
FiniteQuantale frame_quantale(const FiniteFrame& f, std::string name = "");

struct WellInsideReport {
  bool inside = false;
  std::optional<int> witness;  // least b with a1 /\ b = 0 and a \/ b = 1
};

/// a1 is well inside a when some b has a1 /\ b = 0 and a \/ b = 1.
WellInsideReport well_inside(const FiniteFrame& f, int a1, int a);

struct RegularityReport {
  bool regular = false;
  std::optional<int> witness;  // least a that is not the join of elements well inside it
};

RegularityReport is_regular(const FiniteFrame& f);

/// Coproduct of frames = downsets of the product of the base posets, with
/// coprojections iota1(D) = D x base2 and iota2 symmetric.
struct FrameCoproduct {
  FiniteFrame frame;
  std::vector<int> iota1, iota2;  // factor element -> coproduct element
};

FrameCoproduct frame_coproduct(const FiniteFrame& a, const FiniteFrame& b);

/// iota1(x) /\ iota2(y) = iota2(y) /\ iota1(x) for all x, y.
bool check_generator_commutation(const FiniteFrame& a, const FiniteFrame& b,
                                 const FrameCoproduct& cp);

/// Maps preserving all joins, binary meets, and the top.
std::vector<std::vector<int>> enumerate_frame_homs(const FiniteFrame& src,
                                                   const FiniteFrame& tgt);

struct UniversalPropertyReport {
  bool holds = false;
  std::string detail;  // first failure, for debugging
};

/// For every pair of frame homs f1: a -> M, f2: b -> M into each test frame,
/// exactly one frame hom g: a (+) b -> M satisfies g . iota_i = f_i.
UniversalPropertyReport verify_coproduct_universal(const FiniteFrame& a, const FiniteFrame& b,
                                                   const FrameCoproduct& cp,
                                                   const std::vector<FiniteFrame>& tests);

}  // namespace qlab
