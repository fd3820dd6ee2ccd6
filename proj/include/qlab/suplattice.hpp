#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

// Finite sup-lattice: every subset has a join (equivalently: a finite lattice).
// Elements are dense indices 0..size-1; names are metadata only.
struct SupLattice {
  int size = 0;
  std::vector<std::string> names;
  std::vector<uint8_t> leq_mat;  // size*size, row-major: leq_mat[a*size+b] = (a <= b)
  std::vector<int> join_tab, meet_tab;
  int bottom = -1, top = -1;

  bool leq(int a, int b) const { return leq_mat[static_cast<size_t>(a) * size + b] != 0; }
  int join(int a, int b) const { return join_tab[static_cast<size_t>(a) * size + b]; }
  int meet(int a, int b) const { return meet_tab[static_cast<size_t>(a) * size + b]; }

  /// Join of any element set; the empty join is bottom.
  int join_of(const std::vector<int>& xs) const {
    int j = bottom;
    for (int x : xs) j = join(j, x);
    return j;
  }
  /// Meet of any element set; the empty meet is top.
  int meet_of(const std::vector<int>& xs) const {
    int m = top;
    for (int x : xs) m = meet(m, x);
    return m;
  }
};

/// Builds a lattice from an explicit relation matrix. Throws std::invalid_argument
/// with a witness when the relation is not a partial order ("not-a-partial-order")
/// or some pair lacks a join or meet ("not-complete").
SupLattice from_leq_matrix(int size, const std::vector<uint8_t>& leq,
                           std::vector<std::string> names = {});

/// Same, from a pair list; the relation must already contain reflexive and
/// transitive pairs (from_leq validates, it does not complete).
SupLattice from_leq(int size, const std::vector<std::pair<int, int>>& pairs,
                    std::vector<std::string> names = {});

/// Non-throwing probe used by exhaustive lattice generation.
std::optional<SupLattice> try_from_leq_matrix(int size, const std::vector<uint8_t>& leq);

/// Elements x with x != bottom and x != join of {y : y < x}.
std::vector<int> join_irreducibles(const SupLattice& s);

/// Indices ordered so every element appears after everything strictly below it.
std::vector<int> linear_extension(const SupLattice& s);

/// Endomap of a lattice, values[x] = f(x). Join preservation is a property
/// of the pair (lattice, map), checked by preserves_all_joins.
struct EndoMap {
  std::vector<int> values;
  friend bool operator==(const EndoMap& a, const EndoMap& b) { return a.values == b.values; }
  friend bool operator<(const EndoMap& a, const EndoMap& b) { return a.values < b.values; }
};

/// f(join X) = join f[X] for every subset X, checked exhaustively (2^size).
bool preserves_all_joins(const SupLattice& s, const EndoMap& f);

/// All join-preserving endomaps, lexicographically sorted. Candidates come from
/// assignments on join-irreducibles extended by f(x) = join{f(j) : j <= x},
/// then pass the exhaustive all-subsets filter. Throws std::length_error when
/// s.size exceeds cap.
std::vector<EndoMap> all_join_endomaps(const SupLattice& s, int cap = 6);

// Stock lattices.
SupLattice chain(int n);
SupLattice boolean_lattice(int atoms);
SupLattice diamond_m3();   // 0 < a,b,c < 1, middles pairwise incomparable
SupLattice pentagon_n5();  // 0 < a < c < 1 and 0 < b < 1 with b incomparable to a,c

/// Minimum of the relabeled leq bitstrings over all permutations; equal
/// certificates iff isomorphic. Factorial in size, guarded at 8.
std::string lattice_certificate(const SupLattice& s);
bool lattice_isomorphic(const SupLattice& a, const SupLattice& b);

/// Every lattice with 1..max_size elements, one per isomorphism class, in a
/// deterministic order (by size, then certificate). Exhaustive enumeration of
/// upper-triangular strict orders plus canonical relabeling.
std::vector<SupLattice> all_lattices_up_to(int max_size);

}  // namespace qlab
