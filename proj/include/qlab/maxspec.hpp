#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qlab/exactnum.hpp"
#include "qlab/locale.hpp"

namespace qlab {

/// Finite-dimensional *-algebra ⊕_k M_{n_k} over Q[i]. Multiplication is
/// blockwise matrix product, the involution is the blockwise conjugate
/// transpose, the identity is blockwise identity.
struct Algebra {
  std::vector<int> blocks;

  int dim() const;  // Σ n_k²
  /// Flattened coordinate of block k entry (i,j): block_offset(k) + i*n_k + j.
  int block_offset(int k) const;
  std::string str() const;  // "blocks=[2,1]"

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.blocks == b.blocks; }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }
};

/// Accepts "blocks=[2,1]" or "[2,1]"; block sizes must be >= 1.
Algebra parse_algebra(const std::string& text);

/// Algebra element, one square matrix per block.
struct AlgElement {
  std::vector<ExactMatrix> mats;

  static AlgElement zero(const Algebra& a);
  static AlgElement identity(const Algebra& a);
  /// Matrix-unit basis element for flattened coordinate idx.
  static AlgElement basis(const Algebra& a, int idx);

  Algebra algebra() const;
  bool is_zero() const;
  AlgElement adjoint() const;
  std::string str() const;  // block matrices joined with " (+) "

  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator*(const GaussRational& c, const AlgElement& a);
  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.mats == b.mats; }
  friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }
};

std::vector<GaussRational> flatten(const AlgElement& a);
AlgElement unflatten(const Algebra& a, const std::vector<GaussRational>& row);

/// Element of Max A: a linear subspace of A as a canonical RREF row basis
/// (rank x dim, zero rows dropped). Canonical form makes == space equality.
/// In finite dimension every subspace is closed, so spans need no closure.
struct Subspace {
  Algebra algebra;
  ExactMatrix basis;

  int rank() const { return basis.rows; }
  std::string str() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.algebra == b.algebra && a.basis == b.basis;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

Subspace span(const Algebra& a, const std::vector<AlgElement>& spanners);
Subspace msbottom(const Algebra& a);
Subspace mstop(const Algebra& a);
/// The quantale unit e = <identity of A>.
Subspace msunit(const Algebra& a);

bool msleq(const Subspace& m, const Subspace& n);
Subspace msjoin(const Subspace& m, const Subspace& n);
Subspace msmeet(const Subspace& m, const Subspace& n);
/// span{ m_i · n_j } over basis pairs; equals the span of all products.
Subspace msproduct(const Subspace& m, const Subspace& n);
/// M* = {a* : a in M}.
Subspace msstar(const Subspace& m);

bool is_right_ideal(const Subspace& m);  // M⊙⊤ ≤ M
/// ⊤⊙(M⊙⊤): the least two-sided ideal containing M.
Subspace two_sided_closure(const Subspace& m);
/// M⊙M*⊙M = M. Pre: M is a right ideal (throws "not-right-ideal").
bool gelfand_identity(const Subspace& m);

/// Unital *-homomorphism, stored as the images of the flattened matrix-unit
/// basis of the source. Linear extension recovers f on all elements.
struct StarHom {
  Algebra source, target;
  std::vector<AlgElement> images;
};

/// First violated law ("shape ...", "unital ...", "multiplicative ...",
/// "involutive ...") or nullopt when f is a genuine unital *-hom.
std::optional<std::string> star_hom_violation(const StarHom& f);
AlgElement apply_hom(const StarHom& f, const AlgElement& x);
StarHom identity_hom(const Algebra& a);
StarHom compose(const StarHom& g, const StarHom& f);  // g ∘ f
/// All m^n unital *-homs C^m -> C^n (coordinate substitutions), lex order.
std::vector<StarHom> enumerate_diagonal_homs(int m, int n);
/// (a,b) |-> a·p + b·(1-p) : C² -> M₂ for a 2x2 projection p.
StarHom projection_pair_hom(const ExactMatrix& p);

/// Max f: M |-> span f[M]. Throws "invalid-hom" when f fails verification.
Subspace max_functor(const StarHom& f, const Subspace& m);
/// R f: J |-> Max f(J)⊙⊤. Pre: J a right ideal of the source.
Subspace rs_functor(const StarHom& f, const Subspace& j);

/// Action of the k-th block representation on row vectors: x·a = x·block_k(a).
/// Returns the canonical basis of span{ x·block_k(a) : a in V, x in W } for
/// W given as RREF rows in Q[i]^{n_k}. With this right-module convention the
/// induced map satisfies pt(V⊙V')(W) = pt(V')(pt(V)(W)), so each block yields
/// a quantale hom Max A -> Q(subspaces of Q[i]^{n_k}) — a Hilbert point.
ExactMatrix hilbert_point_action(const Subspace& v, int k, const ExactMatrix& w);

/// Coordinates where some basis vector is nonzero, as a bitmask.
/// Pre: all blocks have size 1 (throws "not-diagonal").
uint32_t diagonal_support(const Subspace& m);
/// The n coordinate hyperplanes {v : v_x = 0} — exactly the primes of Max C^n.
std::vector<Subspace> primes_diagonal(int n);

/// Spatialization of Max C^n: Boolean frame 2^n with quotient M |-> support.
struct DiagonalSpatialization {
  int n = 0;
  FiniteFrame frame;

  /// Frame index of the class of m; classes coincide with two_sided_closure.
  int index_of(const Subspace& m) const;
};
DiagonalSpatialization spatialization_diagonal(int n);  // capped at n = 8

/// The three comparisons of the primality test at (P, a, b).
struct PrimeRefutation {
  bool product_below = false;  // a⊙⊤⊙b ≤ P
  bool a_below = false;        // a ≤ P
  bool b_below = false;        // b ≤ P

  bool refuted() const { return product_below && !a_below && !b_below; }
};
PrimeRefutation refute_prime(const Subspace& p, const Subspace& a, const Subspace& b);

/// The commutative reflection C^c (c = number of size-1 blocks; larger blocks
/// are simple with trivial abelianization) and the Boolean 2^c of its closed
/// ideals.
struct CommutativeReflection {
  Algebra reflection;
  FiniteFrame ideals;
};
CommutativeReflection commutative_reflection(const Algebra& a);  // capped at c = 8

/// Zero-pattern oracle for the coproduct obstruction in Max C^4. Generator
/// images are the tuples (z,z,w,w) and (z',w',z',w'); both families are
/// closed under coordinatewise products, so every product of generator atoms
/// is an atom <(zz',zw',wz',ww')>. Masks index 4-tuples by bit i = coordinate
/// i nonzero, e.g. (1,0,1,1) -> 0b1101 = 13.
struct ObstructionReport {
  std::array<bool, 16> reachable{};
  std::array<std::array<int, 4>, 16> witness{};  // (z,w,z',w') in {0,1}; -1 when unreachable
  bool exact_matches_symbolic = false;  // subspace products realize the AND pattern
  bool families_closed = false;         // generator families closed under products
  bool one_zero_forces_two = false;     // no reachable pattern has exactly one zero
  bool atoms_not_joins = false;         // distinct atoms join to rank 2
  bool separating_target_unreachable = false;  // (1,0,1,1) has no preimage

  bool pass() const {
    return exact_matches_symbolic && families_closed && one_zero_forces_two && atoms_not_joins &&
           separating_target_unreachable && reachable[15];
  }
};
ObstructionReport coproduct_obstruction_check();

/// Deterministic sampling (plain mt19937_64 draws, no distribution objects,
/// so streams are identical across standard libraries). The default seed is
/// part of the recorded output of every sampled scenario.
inline constexpr uint64_t kDefaultSampleSeed = 0x51ab5eed;

struct SubspaceSampler {
  std::mt19937_64 rng;

  explicit SubspaceSampler(uint64_t seed = kDefaultSampleSeed) : rng(seed) {}

  /// Both parts in {-2..2}/{1,2}; roughly a third of entries are zero.
  GaussRational coefficient();
  AlgElement element(const Algebra& a);
  Subspace subspace(const Algebra& a, int max_spanners = 3);
  /// Exact orthogonal projection onto a random row span, blockwise (p² = p = p*).
  AlgElement projection(const Algebra& a);
  /// Alternates <projection>⊙⊤ and <random span>⊙⊤; both are right ideals.
  Subspace right_ideal(const Algebra& a);
};

}  // namespace qlab
