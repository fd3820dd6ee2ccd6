#include "qlab/suplattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qlab {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Least element of `candidates` under leq, or -1 when there is none.
int least_of(int size, const std::vector<uint8_t>& leq, const std::vector<int>& candidates) {
  for (int u : candidates) {
    bool least = true;
    for (int v : candidates)
      if (!leq[static_cast<size_t>(u) * size + v]) {
        least = false;
        break;
      }
    if (least) return u;
  }
  return -1;
}

std::optional<SupLattice> build(int size, const std::vector<uint8_t>& leq, std::string* err) {
  auto fail = [&](const std::string& m) -> std::optional<SupLattice> {
    if (err) *err = m;
    return std::nullopt;
  };
  if (size <= 0) return fail("not-a-partial-order: empty carrier");
  if (leq.size() != static_cast<size_t>(size) * size)
    return fail("not-a-partial-order: relation size mismatch");
  auto le = [&](int a, int b) { return leq[static_cast<size_t>(a) * size + b] != 0; };

  for (int a = 0; a < size; ++a)
    if (!le(a, a)) return fail("not-a-partial-order: not reflexive at " + std::to_string(a));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && le(a, b) && le(b, a))
        return fail("not-a-partial-order: antisymmetry fails at " + pair_str(a, b));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < size; ++c)
        if (le(b, c) && !le(a, c))
          return fail("not-a-partial-order: transitivity fails at " + pair_str(a, b) + "," +
                      std::to_string(c));
    }

  SupLattice s;
  s.size = size;
  s.leq_mat = leq;
  s.join_tab.assign(static_cast<size_t>(size) * size, -1);
  s.meet_tab.assign(static_cast<size_t>(size) * size, -1);
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) {
      std::vector<int> ub, lb;
      for (int c = 0; c < size; ++c) {
        if (le(a, c) && le(b, c)) ub.push_back(c);
        if (le(c, a) && le(c, b)) lb.push_back(c);
      }
      int j = least_of(size, leq, ub);
      if (j < 0) return fail("not-complete: pair " + pair_str(a, b) + " has no join");
      // greatest lower bound = least upper bound in the opposite order
      int m = -1;
      for (int u : lb) {
        bool greatest = true;
        for (int v : lb)
          if (!le(v, u)) {
            greatest = false;
            break;
          }
        if (greatest) {
          m = u;
          break;
        }
      }
      if (m < 0) return fail("not-complete: pair " + pair_str(a, b) + " has no meet");
      s.join_tab[static_cast<size_t>(a) * size + b] = s.join_tab[static_cast<size_t>(b) * size + a] = j;
      s.meet_tab[static_cast<size_t>(a) * size + b] = s.meet_tab[static_cast<size_t>(b) * size + a] = m;
    }
  s.bottom = 0;
  s.top = 0;
  for (int a = 0; a < size; ++a) {
    s.bottom = s.meet(s.bottom, a);
    s.top = s.join(s.top, a);
  }
  return s;
}

}  // namespace

SupLattice from_leq_matrix(int size, const std::vector<uint8_t>& leq,
                           std::vector<std::string> names) {
  std::string err;
  auto s = build(size, leq, &err);
  if (!s) throw std::invalid_argument("from_leq: " + err);
  s->names = std::move(names);
  return *s;
}

SupLattice from_leq(int size, const std::vector<std::pair<int, int>>& pairs,
                    std::vector<std::string> names) {
  std::vector<uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw std::invalid_argument("from_leq: pair index out of range " + pair_str(a, b));
    leq[static_cast<size_t>(a) * size + b] = 1;
  }
  return from_leq_matrix(size, leq, std::move(names));
}

std::optional<SupLattice> try_from_leq_matrix(int size, const std::vector<uint8_t>& leq) {
  return build(size, leq, nullptr);
}

std::vector<int> join_irreducibles(const SupLattice& s) {
  std::vector<int> out;
  for (int x = 0; x < s.size; ++x) {
    if (x == s.bottom) continue;
    int below = s.bottom;
    for (int y = 0; y < s.size; ++y)
      if (y != x && s.leq(y, x)) below = s.join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

std::vector<int> linear_extension(const SupLattice& s) {
  std::vector<int> order(s.size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;  // number of elements strictly below
    for (int x = 0; x < s.size; ++x) {
      ca += x != a && s.leq(x, a);
      cb += x != b && s.leq(x, b);
    }
    return ca < cb;
  });
  return order;
}

bool preserves_all_joins(const SupLattice& s, const EndoMap& f) {
  if (static_cast<int>(f.values.size()) != s.size) return false;
  if (s.size > 20) throw std::length_error("preserves_all_joins: exhaustive check capped at 20");
  for (uint32_t mask = 0; mask < (1u << s.size); ++mask) {
    int jx = s.bottom, jfx = s.bottom;
    for (int x = 0; x < s.size; ++x)
      if (mask & (1u << x)) {
        jx = s.join(jx, x);
        jfx = s.join(jfx, f.values[x]);
      }
    if (f.values[jx] != jfx) return false;
  }
  return true;
}

std::vector<EndoMap> all_join_endomaps(const SupLattice& s, int cap) {
  if (s.size > cap) throw std::length_error("all_join_endomaps: carrier size " +
                                            std::to_string(s.size) + " exceeds cap " +
                                            std::to_string(cap));
  std::vector<int> irr = join_irreducibles(s);
  std::set<EndoMap> found;
  std::vector<int> assign(irr.size(), 0);
  while (true) {
    EndoMap f;
    f.values.assign(s.size, s.bottom);
    for (int x = 0; x < s.size; ++x) {
      int v = s.bottom;
      for (size_t k = 0; k < irr.size(); ++k)
        if (s.leq(irr[k], x)) v = s.join(v, assign[k]);
      f.values[x] = v;
    }
    if (preserves_all_joins(s, f)) found.insert(std::move(f));

    size_t k = 0;
    while (k < assign.size() && ++assign[k] == s.size) assign[k++] = 0;
    if (k == assign.size()) break;  // also terminates the irr-empty case
  }
  return {found.begin(), found.end()};
}

SupLattice chain(int n) {
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = 1;
  return from_leq_matrix(n, leq);
}

SupLattice boolean_lattice(int atoms) {
  int n = 1 << atoms;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = (a & b) == a;
  return from_leq_matrix(n, leq);
}

SupLattice diamond_m3() {
  return from_leq(5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4},
                      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

SupLattice pentagon_n5() {
  // 0 < a(1) < c(2) < 1(4), 0 < b(3) < 1(4)
  return from_leq(5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4},
                      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}});
}

std::string lattice_certificate(const SupLattice& s) {
  if (s.size > 8) throw std::length_error("lattice_certificate: capped at 8 elements");
  std::vector<int> perm(s.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur(static_cast<size_t>(s.size) * s.size, '0');
    for (int a = 0; a < s.size; ++a)
      for (int b = 0; b < s.size; ++b)
        if (s.leq(a, b)) cur[static_cast<size_t>(perm[a]) * s.size + perm[b]] = '1';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool lattice_isomorphic(const SupLattice& a, const SupLattice& b) {
  if (a.size != b.size) return false;
  return lattice_certificate(a) == lattice_certificate(b);
}

std::vector<SupLattice> all_lattices_up_to(int max_size) {
  std::vector<SupLattice> out;
  for (int n = 1; n <= max_size; ++n) {
    std::map<std::string, SupLattice> classes;
    int bits = n * (n - 1) / 2;
    // bit k encodes the strict relation for the k-th pair (i,j), i < j; a
    // linear extension always exists, so triangular patterns cover all posets.
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
      std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
      int k = 0;
      for (int i = 0; i < n; ++i) {
        leq[static_cast<size_t>(i) * n + i] = 1;
        for (int j = i + 1; j < n; ++j, ++k)
          if (mask & (1u << k)) leq[static_cast<size_t>(i) * n + j] = 1;
      }
      auto s = try_from_leq_matrix(n, leq);
      if (!s) continue;
      classes.emplace(lattice_certificate(*s), std::move(*s));
    }
    for (auto& [cert, lat] : classes) out.push_back(std::move(lat));
  }
  return out;
}

}  // namespace qlab
