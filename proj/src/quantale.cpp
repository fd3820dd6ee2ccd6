#include "qlab/quantale.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qlab {

namespace {

std::string idx3(int a, int b, int c) {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

}  // namespace

int FiniteQuantale::star_of(int a) const {
  if (!star) throw std::invalid_argument("star_of: quantale has no involution");
  return (*star)[a];
}

ClassificationReport verify_axioms(const FiniteQuantale& q) {
  ClassificationReport rep;
  const int n = q.size();
  const SupLattice& L = q.lattice;
  rep.trivial = L.bottom == L.top;

  if (q.product_tab.size() != static_cast<size_t>(n) * n) {
    rep.violation = Violation{"shape", {}, "product table size mismatch"};
    return rep;
  }
  for (int v : q.product_tab)
    if (v < 0 || v >= n) {
      rep.violation = Violation{"shape", {v}, "product entry out of range"};
      return rep;
    }

  // associativity
  for (int a = 0; a < n && !rep.violation; ++a)
    for (int b = 0; b < n && !rep.violation; ++b)
      for (int c = 0; c < n; ++c)
        if (q.prod(q.prod(a, b), c) != q.prod(a, q.prod(b, c))) {
          rep.violation = Violation{"associativity", {a, b, c},
                                    "(a*b)*c != a*(b*c) at (" + idx3(a, b, c) + ")"};
          break;
        }
  // distributivity over joins, both sides; binary + empty joins suffice on a
  // finite lattice
  for (int a = 0; a < n && !rep.violation; ++a) {
    if (q.prod(a, L.bottom) != L.bottom || q.prod(L.bottom, a) != L.bottom) {
      rep.violation = Violation{"distributivity", {a, L.bottom}, "a*0 != 0 or 0*a != 0"};
      break;
    }
    for (int b = 0; b < n && !rep.violation; ++b)
      for (int c = 0; c < n; ++c) {
        int bc = L.join(b, c);
        if (q.prod(a, bc) != L.join(q.prod(a, b), q.prod(a, c))) {
          rep.violation = Violation{"distributivity", {a, b, c},
                                    "a*(b v c) != a*b v a*c at (" + idx3(a, b, c) + ")"};
          break;
        }
        if (q.prod(bc, a) != L.join(q.prod(b, a), q.prod(c, a))) {
          rep.violation = Violation{"distributivity", {b, c, a},
                                    "(b v c)*a != b*a v c*a at (" + idx3(b, c, a) + ")"};
          break;
        }
      }
  }
  rep.is_quantale = !rep.violation;
  if (!rep.is_quantale) return rep;

  rep.strong = q.prod(L.top, L.top) == L.top;

  if (q.unit) {
    int e = *q.unit;
    rep.unital = true;
    for (int a = 0; a < n; ++a)
      if (q.prod(e, a) != a || q.prod(a, e) != a) {
        rep.unital = false;
        if (!rep.violation)
          rep.violation = Violation{"unit", {e, a}, "e*a != a or a*e != a at a=" + std::to_string(a)};
        break;
      }
    rep.strictly_two_sided = rep.unital && e == L.top;
    rep.locale = rep.unital && e == L.top && q.product_tab == L.meet_tab;
  }

  if (q.star) {
    const std::vector<int>& st = *q.star;
    rep.involutive = Tri::yes;
    auto flag = [&](const Violation& v) {
      rep.involutive = Tri::no;
      if (!rep.violation) rep.violation = v;
    };
    if (st.size() != static_cast<size_t>(n)) {
      flag(Violation{"star", {}, "star table size mismatch"});
      return rep;
    }
    for (int a = 0; a < n && rep.involutive == Tri::yes; ++a) {
      if (st[a] < 0 || st[a] >= n || st[st[a]] != a) {
        flag(Violation{"star", {a}, "a** != a at a=" + std::to_string(a)});
        break;
      }
      for (int b = 0; b < n; ++b) {
        if (st[q.prod(a, b)] != q.prod(st[b], st[a])) {
          flag(Violation{"star", {a, b}, "(a*b)^* != b^* a^*"});
          break;
        }
        if (st[L.join(a, b)] != L.join(st[a], st[b])) {
          flag(Violation{"star", {a, b}, "(a v b)^* != a^* v b^*"});
          break;
        }
      }
    }
  }

  if (rep.unital && rep.involutive == Tri::yes) rep.gelfand = is_gelfand(q) ? Tri::yes : Tri::no;
  return rep;
}

std::vector<int> sided_elements(const FiniteQuantale& q, Side side) {
  std::vector<int> out;
  for (int a = 0; a < q.size(); ++a) {
    bool r = q.lattice.leq(q.prod(a, q.top()), a);
    bool l = q.lattice.leq(q.prod(q.top(), a), a);
    bool keep = side == Side::right ? r : side == Side::left ? l : (r && l);
    if (keep) out.push_back(a);
  }
  return out;
}

bool is_gelfand(const FiniteQuantale& q) {
  if (!q.unit || !q.star) throw std::invalid_argument("is_gelfand: missing-unit-or-star");
  for (int a : sided_elements(q, Side::right))
    if (q.prod(q.prod(a, q.star_of(a)), a) != a) return false;
  return true;
}

std::vector<int> primes(const FiniteQuantale& q) {
  std::vector<int> out;
  const int n = q.size();
  for (int p = 0; p < n; ++p) {
    if (p == q.top()) continue;  // proper primes only
    bool prime = true;
    for (int a = 0; a < n && prime; ++a) {
      int a1 = q.prod(a, q.top());
      for (int b = 0; b < n; ++b)
        if (q.lattice.leq(q.prod(a1, b), p) && !q.lattice.leq(a, p) && !q.lattice.leq(b, p)) {
          prime = false;
          break;
        }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

SpatialityReport is_spatial_by_primes(const FiniteQuantale& q) {
  SpatialityReport rep;
  rep.primes = primes(q);
  rep.spatial = true;
  for (int a = 0; a < q.size(); ++a) {
    int m = q.top();  // empty meet
    for (int p : rep.primes)
      if (q.lattice.leq(a, p)) m = q.lattice.meet(m, p);
    if (m != a) {
      rep.spatial = false;
      rep.witness = a;
      break;
    }
  }
  return rep;
}

HomReport check_hom(const QuantaleHom& h) {
  HomReport rep;
  const FiniteQuantale& S = *h.source;
  const FiniteQuantale& T = *h.target;
  if (h.map.size() != static_cast<size_t>(S.size()))
    throw std::invalid_argument("check_hom: map size mismatch");
  for (int v : h.map)
    if (v < 0 || v >= T.size()) throw std::invalid_argument("check_hom: image out of range");

  rep.join_preserving = h.map[S.bottom()] == T.bottom();
  if (!rep.join_preserving)
    rep.violation = Violation{"join", {S.bottom()}, "h(0) != 0"};
  for (int a = 0; a < S.size() && rep.join_preserving; ++a)
    for (int b = 0; b < S.size(); ++b)
      if (h.map[S.lattice.join(a, b)] != T.lattice.join(h.map[a], h.map[b])) {
        rep.join_preserving = false;
        rep.violation = Violation{"join", {a, b}, "h(a v b) != h(a) v h(b)"};
        break;
      }
  rep.product_preserving = true;
  for (int a = 0; a < S.size() && rep.product_preserving; ++a)
    for (int b = 0; b < S.size(); ++b)
      if (h.map[S.prod(a, b)] != T.prod(h.map[a], h.map[b])) {
        rep.product_preserving = false;
        if (!rep.violation) rep.violation = Violation{"product", {a, b}, "h(a*b) != h(a)*h(b)"};
        break;
      }

  if (S.unit && T.unit) {
    rep.unital = h.map[*S.unit] == *T.unit ? Tri::yes : Tri::no;
    rep.pre_unital = T.lattice.leq(*T.unit, h.map[*S.unit]) ? Tri::yes : Tri::no;
  }
  rep.strong = h.map[S.top()] == T.top() ? Tri::yes : Tri::no;
  if (S.star && T.star) {
    rep.involutive = Tri::yes;
    for (int a = 0; a < S.size(); ++a)
      if (h.map[S.star_of(a)] != T.star_of(h.map[a])) {
        rep.involutive = Tri::no;
        break;
      }
  }
  return rep;
}

Spatialization spatialize(const FiniteQuantale& q, const std::vector<QuantaleHom>& points) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].map.size() != static_cast<size_t>(q.size()))
      throw std::invalid_argument("spatialize: point " + std::to_string(i) +
                                  " domain size mismatch");
    QuantaleHom h = points[i];
    h.source = std::make_shared<FiniteQuantale>(q);
    HomReport r = check_hom(h);
    if (!r.is_hom())
      throw std::invalid_argument("spatialize: point " + std::to_string(i) +
                                  " is not a quantale homomorphism (" +
                                  (r.violation ? r.violation->law : "") + ")");
  }

  // signature = tuple of point values; classes labeled by least representative
  Spatialization out;
  out.class_of.assign(q.size(), -1);
  std::map<std::vector<int>, int> seen;
  for (int a = 0; a < q.size(); ++a) {
    std::vector<int> sig;
    sig.reserve(points.size());
    for (const auto& p : points) sig.push_back(p.map[a]);
    auto [it, fresh] = seen.emplace(std::move(sig), static_cast<int>(out.representative.size()));
    if (fresh) out.representative.push_back(a);
    out.class_of[a] = it->second;
  }

  const int m = static_cast<int>(out.representative.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool le = true;
      for (const auto& p : points) {
        int ti = p.map[out.representative[i]], tj = p.map[out.representative[j]];
        if (!p.target->lattice.leq(ti, tj)) {
          le = false;
          break;
        }
      }
      leq[static_cast<size_t>(i) * m + j] = le;
    }
  FiniteQuantale Qq;
  Qq.lattice = from_leq_matrix(m, leq);
  Qq.name = q.name.empty() ? "spatialization" : q.name + "/points";
  Qq.product_tab.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      Qq.product_tab[static_cast<size_t>(i) * m + j] =
          out.class_of[q.prod(out.representative[i], out.representative[j])];
  if (q.unit) Qq.unit = out.class_of[*q.unit];
  if (q.star) {
    bool ok = true;
    for (const auto& p : points) ok = ok && p.target->star.has_value();
    for (const auto& p : points)
      if (ok)
        for (int a = 0; a < q.size() && ok; ++a)
          ok = p.map[q.star_of(a)] == p.target->star_of(p.map[a]);
    if (ok) {
      std::vector<int> st(m);
      for (int i = 0; i < m; ++i) st[i] = out.class_of[q.star_of(out.representative[i])];
      Qq.star = st;
    }
  }
  out.quotient = std::move(Qq);
  return out;
}

std::vector<int> localic_reflection_map(const FiniteQuantale& q) {
  std::vector<int> out(q.size());
  for (int a = 0; a < q.size(); ++a) out[a] = q.prod(q.prod(q.top(), a), q.top());
  return out;
}

int EndoQuantale::index_of(const EndoMap& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || !(*it == f)) return -1;
  return static_cast<int>(it - maps.begin());
}

EndoQuantale make_endo_quantale(const SupLattice& s, int cap) {
  EndoQuantale eq;
  eq.carrier = s;
  eq.maps = all_join_endomaps(s, cap);  // sorted, so index_of can bisect
  const int n = static_cast<int>(eq.maps.size());

  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int x = 0; x < s.size && le; ++x) le = s.leq(eq.maps[i].values[x], eq.maps[j].values[x]);
      leq[static_cast<size_t>(i) * n + j] = le;
    }
  eq.quantale.lattice = from_leq_matrix(n, leq);
  eq.quantale.name = "Q(S)";
  eq.quantale.product_tab.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EndoMap comp;  // (f * g)(x) = g(f(x))
      comp.values.resize(s.size);
      for (int x = 0; x < s.size; ++x) comp.values[x] = eq.maps[j].values[eq.maps[i].values[x]];
      int k = eq.index_of(comp);
      if (k < 0) throw std::logic_error("endo_quantale: composition escaped the enumeration");
      eq.quantale.product_tab[static_cast<size_t>(i) * n + j] = k;
    }
  EndoMap id;
  id.values.resize(s.size);
  std::iota(id.values.begin(), id.values.end(), 0);
  eq.quantale.unit = eq.index_of(id);
  return eq;
}

FiniteQuantale endo_quantale(const SupLattice& s, int cap) {
  return make_endo_quantale(s, cap).quantale;
}

FiniteQuantale direct_product(const FiniteQuantale& a, const FiniteQuantale& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  auto ix = [&](int i, int j) { return i * nb + j; };
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          leq[static_cast<size_t>(ix(i, j)) * n + ix(k, l)] = a.lattice.leq(i, k) && b.lattice.leq(j, l);
  FiniteQuantale q;
  q.lattice = from_leq_matrix(n, leq);
  q.name = (a.name.empty() ? "A" : a.name) + " x " + (b.name.empty() ? "B" : b.name);
  q.product_tab.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          q.product_tab[static_cast<size_t>(ix(i, j)) * n + ix(k, l)] = ix(a.prod(i, k), b.prod(j, l));
  if (a.unit && b.unit) q.unit = ix(*a.unit, *b.unit);
  if (a.star && b.star) {
    std::vector<int> st(n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) st[ix(i, j)] = ix(a.star_of(i), b.star_of(j));
    q.star = st;
  }
  return q;
}

bool quantale_isomorphic(const FiniteQuantale& a, const FiniteQuantale& b) {
  if (a.size() != b.size()) return false;
  if (a.unit.has_value() != b.unit.has_value()) return false;
  if (a.star.has_value() != b.star.has_value()) return false;
  const int n = a.size();
  if (n > 8) throw std::length_error("quantale_isomorphic: capped at 8 elements");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        if (a.lattice.leq(i, j) != b.lattice.leq(perm[i], perm[j]) ||
            perm[a.prod(i, j)] != b.prod(perm[i], perm[j])) {
          ok = false;
          break;
        }
      }
    if (ok && a.unit && perm[*a.unit] != *b.unit) ok = false;
    if (ok && a.star)
      for (int i = 0; i < n; ++i)
        if (perm[a.star_of(i)] != b.star_of(perm[i])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

FiniteQuantale locale_quantale(const SupLattice& s, std::string name, bool with_identity_star) {
  FiniteQuantale q;
  q.lattice = s;
  q.product_tab.assign(s.meet_tab.begin(), s.meet_tab.end());
  q.unit = s.top;
  q.name = std::move(name);
  if (with_identity_star) {
    std::vector<int> st(s.size);
    std::iota(st.begin(), st.end(), 0);
    q.star = st;
  }
  return q;
}

}  // namespace qlab
