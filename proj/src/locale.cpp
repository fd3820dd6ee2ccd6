#include "qlab/locale.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qlab/representation.hpp"

namespace qlab {

Poset make_poset(int size, std::vector<uint8_t> leq_mat, std::vector<std::string> names) {
  if (size < 0 || leq_mat.size() != static_cast<size_t>(size) * size)
    throw std::invalid_argument("not-a-partial-order: bad matrix shape");
  Poset p;
  p.size = size;
  p.leq_mat = std::move(leq_mat);
  auto at = [&](int a, int b) { return p.leq_mat[static_cast<size_t>(a) * size + b] != 0; };
  for (int a = 0; a < size; ++a) {
    if (!at(a, a)) throw std::invalid_argument("not-a-partial-order: not reflexive at " + std::to_string(a));
    for (int b = 0; b < size; ++b) {
      if (a != b && at(a, b) && at(b, a))
        throw std::invalid_argument("not-a-partial-order: antisymmetry fails at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
      for (int c = 0; c < size; ++c)
        if (at(a, b) && at(b, c) && !at(a, c))
          throw std::invalid_argument("not-a-partial-order: transitivity fails at (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
    }
  }
  if (names.empty()) {
    for (int i = 0; i < size; ++i) names.push_back("p" + std::to_string(i));
  } else if (names.size() != static_cast<size_t>(size)) {
    throw std::invalid_argument("not-a-partial-order: name count mismatch");
  }
  p.names = std::move(names);
  return p;
}

Poset chain_poset(int n) {
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = 1;
  return make_poset(n, std::move(leq));
}

Poset antichain_poset(int n) {
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) leq[static_cast<size_t>(a) * n + a] = 1;
  return make_poset(n, std::move(leq));
}

Poset product_poset(const Poset& a, const Poset& b) {
  const int n = a.size * b.size;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<std::string> names;
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
      for (int k = 0; k < a.size; ++k)
        for (int l = 0; l < b.size; ++l)
          leq[static_cast<size_t>(i * b.size + j) * n + (k * b.size + l)] =
              a.leq(i, k) && b.leq(j, l);
    }
  return make_poset(n, std::move(leq), std::move(names));
}

bool poset_isomorphic(const Poset& a, const Poset& b) {
  if (a.size != b.size) return false;
  if (a.size > 8) throw std::length_error("poset_isomorphic: capped at 8 points");
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.size && ok; ++i)
      for (int j = 0; j < a.size; ++j)
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Poset> poset_corpus() {
  std::vector<Poset> v;
  v.push_back(make_poset(0, {}));
  v.push_back(chain_poset(1));
  v.push_back(chain_poset(2));
  v.push_back(antichain_poset(2));
  v.push_back(chain_poset(3));
  v.push_back(antichain_poset(3));
  // x below both y and z
  v.push_back(make_poset(3, {1, 1, 1, 0, 1, 0, 0, 0, 1}, {"x", "y", "z"}));
  // x and y both below z
  v.push_back(make_poset(3, {1, 0, 1, 0, 1, 1, 0, 0, 1}, {"x", "y", "z"}));
  // 2-chain plus an isolated point
  v.push_back(make_poset(3, {1, 1, 0, 0, 1, 0, 0, 0, 1}, {"x", "y", "z"}));
  return v;
}

int FiniteFrame::index_of_mask(uint32_t mask) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), mask);
  if (it == elements.end() || *it != mask) return -1;
  return static_cast<int>(it - elements.begin());
}

FiniteFrame frame_of_downsets(const Poset& p) {
  if (p.size > 16) throw std::length_error("frame_of_downsets: base capped at 16 points");
  FiniteFrame f;
  f.base = p;
  for (uint32_t mask = 0; mask < (1u << p.size); ++mask) {
    bool down = true;
    for (int i = 0; i < p.size && down; ++i)
      if (mask & (1u << i))
        for (int j = 0; j < p.size; ++j)
          if (p.leq(j, i) && !(mask & (1u << j))) {
            down = false;
            break;
          }
    if (down) f.elements.push_back(mask);
  }
  const int n = static_cast<int>(f.elements.size());
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * n + j] = (f.elements[i] & ~f.elements[j]) == 0;
  std::vector<std::string> names;
  for (uint32_t mask : f.elements) {
    std::string s = "{";
    for (int i = 0; i < p.size; ++i)
      if (mask & (1u << i)) {
        if (s.size() > 1) s += ",";
        s += p.names[i];
      }
    names.push_back(s + "}");
  }
  f.lattice = from_leq_matrix(n, leq, std::move(names));
  return f;
}

Poset base_poset_of(const SupLattice& s) {
  std::vector<int> ji = join_irreducibles(s);
  const int n = static_cast<int>(ji.size());
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(s.names.empty() ? std::to_string(ji[i]) : s.names[ji[i]]);
    for (int j = 0; j < n; ++j) leq[static_cast<size_t>(i) * n + j] = s.leq(ji[i], ji[j]);
  }
  return make_poset(n, std::move(leq), std::move(names));
}

FiniteQuantale frame_quantale(const FiniteFrame& f, std::string name) {
  return locale_quantale(f.lattice, name.empty() ? "frame" : std::move(name), true);
}

WellInsideReport well_inside(const FiniteFrame& f, int a1, int a) {
  WellInsideReport rep;
  const SupLattice& L = f.lattice;
  for (int b = 0; b < L.size; ++b)
    if (L.meet(a1, b) == L.bottom && L.join(a, b) == L.top) {
      rep.inside = true;
      rep.witness = b;
      return rep;
    }
  return rep;
}

RegularityReport is_regular(const FiniteFrame& f) {
  RegularityReport rep;
  const SupLattice& L = f.lattice;
  for (int a = 0; a < L.size; ++a) {
    int j = L.bottom;
    for (int a1 = 0; a1 < L.size; ++a1)
      if (well_inside(f, a1, a).inside) j = L.join(j, a1);
    if (j != a) {
      rep.witness = a;
      return rep;
    }
  }
  rep.regular = true;
  return rep;
}

FrameCoproduct frame_coproduct(const FiniteFrame& a, const FiniteFrame& b) {
  FrameCoproduct cp;
  cp.frame = frame_of_downsets(product_poset(a.base, b.base));
  // iota1(D) = D x base(b); pairs are indexed i * b.base.size + j
  auto embed = [&](uint32_t mask, bool first) {
    uint32_t out = 0;
    for (int i = 0; i < a.base.size; ++i)
      for (int j = 0; j < b.base.size; ++j) {
        bool in = first ? (mask >> i) & 1u : (mask >> j) & 1u;
        if (in) out |= 1u << (i * b.base.size + j);
      }
    return out;
  };
  for (uint32_t mask : a.elements) {
    int k = cp.frame.index_of_mask(embed(mask, true));
    if (k < 0) throw std::logic_error("frame_coproduct: embedded image is not a downset");
    cp.iota1.push_back(k);
  }
  for (uint32_t mask : b.elements) {
    int k = cp.frame.index_of_mask(embed(mask, false));
    if (k < 0) throw std::logic_error("frame_coproduct: embedded image is not a downset");
    cp.iota2.push_back(k);
  }
  return cp;
}

bool check_generator_commutation(const FiniteFrame& a, const FiniteFrame& b,
                                 const FrameCoproduct& cp) {
  const SupLattice& L = cp.frame.lattice;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (L.meet(cp.iota1[x], cp.iota2[y]) != L.meet(cp.iota2[y], cp.iota1[x])) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_frame_homs(const FiniteFrame& src,
                                                   const FiniteFrame& tgt) {
  FiniteQuantale qs = frame_quantale(src), qt = frame_quantale(tgt);
  std::vector<std::vector<int>> out;
  for (std::vector<int>& h : enumerate_homs(qs, qt))
    if (h[qs.top()] == qt.top()) out.push_back(std::move(h));
  return out;
}

UniversalPropertyReport verify_coproduct_universal(const FiniteFrame& a, const FiniteFrame& b,
                                                   const FrameCoproduct& cp,
                                                   const std::vector<FiniteFrame>& tests) {
  UniversalPropertyReport rep;
  for (size_t ti = 0; ti < tests.size(); ++ti) {
    const FiniteFrame& m = tests[ti];
    auto ha = enumerate_frame_homs(a, m);
    auto hb = enumerate_frame_homs(b, m);
    auto hc = enumerate_frame_homs(cp.frame, m);
    for (const auto& f1 : ha)
      for (const auto& f2 : hb) {
        int found = 0;
        for (const auto& g : hc) {
          bool match = true;
          for (int x = 0; x < a.size() && match; ++x) match = g[cp.iota1[x]] == f1[x];
          for (int y = 0; y < b.size() && match; ++y) match = g[cp.iota2[y]] == f2[y];
          found += match;
        }
        if (found != 1) {
          rep.detail = "test frame #" + std::to_string(ti) + ": " + std::to_string(found) +
                       " mediating homs for some (f1, f2)";
          return rep;
        }
      }
  }
  rep.holds = true;
  return rep;
}

}  // namespace qlab
