#include "qlab/representation.hpp"

#include <algorithm>

namespace qlab {

namespace {

// Join/product equations among assigned elements that involve `last` and
// whose participants (including the result) are all assigned. Checking these
// at every assignment covers each equation exactly once, when its final
// participant arrives.
bool consistent_at(const FiniteQuantale& src, const FiniteQuantale& tgt,
                   const std::vector<int>& h, const std::vector<uint8_t>& has, int last) {
  const int n = src.size();
  for (int a = 0; a < n; ++a) {
    if (!has[a]) continue;
    for (int b = 0; b < n; ++b) {
      if (!has[b]) continue;
      int j = src.lattice.join(a, b);
      if (has[j] && (a == last || b == last || j == last) &&
          h[j] != tgt.lattice.join(h[a], h[b]))
        return false;
      int p = src.prod(a, b);
      if (has[p] && (a == last || b == last || p == last) && h[p] != tgt.prod(h[a], h[b]))
        return false;
    }
  }
  return true;
}

void hom_search(const FiniteQuantale& src, const FiniteQuantale& tgt,
                const std::vector<int>& order, const std::vector<uint8_t>& irr, size_t pos,
                std::vector<int>& h, std::vector<uint8_t>& has,
                std::vector<std::vector<int>>& out) {
  if (pos == order.size()) {
    out.push_back(h);
    return;
  }
  const int q = order[pos];
  int below = tgt.bottom();  // join of images strictly below q
  for (int x = 0; x < src.size(); ++x)
    if (x != q && src.lattice.leq(x, q)) below = tgt.lattice.join(below, h[x]);

  auto attempt = [&](int t) {
    h[q] = t;
    has[q] = 1;
    if (consistent_at(src, tgt, h, has, q)) hom_search(src, tgt, order, irr, pos + 1, h, has, out);
    has[q] = 0;
  };
  if (!irr[q]) {
    attempt(below);  // forced: q is the join of everything strictly below it
  } else {
    for (int t = 0; t < tgt.size(); ++t)
      if (tgt.lattice.leq(below, t)) attempt(t);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const FiniteQuantale& src, const FiniteQuantale& tgt) {
  std::vector<int> order = linear_extension(src.lattice);
  std::vector<uint8_t> irr(src.size(), 0);
  for (int j : join_irreducibles(src.lattice)) irr[j] = 1;

  std::vector<int> h(src.size(), -1);
  std::vector<uint8_t> has(src.size(), 0);
  std::vector<std::vector<int>> out;
  hom_search(src, tgt, order, irr, 0, h, has, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Representation> enumerate_representations(const FiniteQuantale& q, int carrier_cap) {
  if (carrier_cap > 6)
    throw std::length_error("cap-exceeded: carriers are supported up to 6 elements");
  auto source = std::make_shared<const FiniteQuantale>(q);
  std::vector<Representation> out;
  for (const SupLattice& s : all_lattices_up_to(carrier_cap)) {
    auto endo = std::make_shared<const EndoQuantale>(make_endo_quantale(s));
    for (std::vector<int>& h : enumerate_homs(q, endo->quantale))
      out.push_back(Representation{source, endo, std::move(h)});
  }
  return out;
}

std::vector<Representation> enumerate_points(const FiniteQuantale& q, int carrier_cap) {
  std::vector<Representation> out = enumerate_representations(q, carrier_cap);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Representation& r) { return !is_irreducible(r); }),
            out.end());
  return out;
}

bool is_irreducible(const Representation& r) {
  const SupLattice& s = r.carrier();
  const EndoMap& t = r.target->maps[r.map[r.source->top()]];
  for (int x = 0; x < s.size; ++x)
    if (s.leq(t.values[x], x) && x != s.bottom && x != s.top) return false;
  return true;
}

bool is_strong(const Representation& r) {
  return r.map[r.source->top()] == r.target->quantale.top();
}

bool is_pre_unital(const Representation& r) {
  if (!r.source->unit) throw std::invalid_argument("is_pre_unital: missing-unit");
  return r.target->quantale.lattice.leq(*r.target->quantale.unit, r.map[*r.source->unit]);
}

bool separates(const FiniteQuantale& q, const std::vector<Representation>& reps) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = a + 1; b < q.size(); ++b) {
      bool split = false;
      for (const Representation& r : reps)
        if (r.map[a] != r.map[b]) {
          split = true;
          break;
        }
      if (!split) return false;
    }
  return true;
}

KrumlReport kruml_crosscheck(const FiniteQuantale& q, int carrier_cap) {
  KrumlReport rep;
  rep.carrier_cap = carrier_cap;
  rep.spatial_by_primes = is_spatial_by_primes(q).spatial;
  std::vector<Representation> pts = enumerate_points(q, carrier_cap);
  rep.point_count = static_cast<int>(pts.size());
  rep.separated = separates(q, pts);
  return rep;
}

}  // namespace qlab
