#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qlab/corpus.hpp"
#include "qlab/representation.hpp"

using namespace qlab;

namespace {

const FiniteQuantale& corpus_entry(const std::string& name) {
  for (const auto& q : quantale_corpus())
    if (q.name == name) return q;
  throw std::runtime_error("no corpus entry " + name);
}

// Oracle: filter all |tgt|^|src| maps by the homomorphism equations directly.
std::vector<std::vector<int>> brute_homs(const FiniteQuantale& src, const FiniteQuantale& tgt) {
  std::vector<std::vector<int>> out;
  std::vector<int> h(src.size(), 0);
  while (true) {
    bool ok = h[src.bottom()] == tgt.bottom();
    for (int a = 0; a < src.size() && ok; ++a)
      for (int b = 0; b < src.size() && ok; ++b)
        ok = h[src.lattice.join(a, b)] == tgt.lattice.join(h[a], h[b]) &&
             h[src.prod(a, b)] == tgt.prod(h[a], h[b]);
    if (ok) out.push_back(h);
    size_t k = 0;
    while (k < h.size() && ++h[k] == tgt.size()) h[k++] = 0;
    if (k == h.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Representation make_rep(const FiniteQuantale& src, const SupLattice& carrier,
                        std::vector<int> map) {
  return {std::make_shared<FiniteQuantale>(src),
          std::make_shared<EndoQuantale>(make_endo_quantale(carrier)), std::move(map)};
}

int count_nonzero(const std::vector<Representation>& reps) {
  int n = 0;
  for (const auto& r : reps)
    if (r.map[r.source->top()] != r.target->quantale.bottom()) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate_homs agrees with the brute-force oracle") {
  FiniteQuantale e2 = endo_quantale(chain(2));
  FiniteQuantale e3 = endo_quantale(chain(3));
  const std::pair<const FiniteQuantale*, const FiniteQuantale*> cases[] = {
      {&corpus_entry("chain2"), &e2},
      {&corpus_entry("chain2"), &e3},
      {&corpus_entry("chain3"), &e3},
      {&corpus_entry("chain4"), &corpus_entry("boolean4")},
      {&corpus_entry("boolean4"), &e2},
      {&corpus_entry("boolean4"), &e3},
      {&corpus_entry("interior-chain3"), &e3},
      {&corpus_entry("zero-chain3"), &e3},
      {&corpus_entry("m2-pattern"), &e2},
      {&corpus_entry("endo-chain3"), &e3},
      {&corpus_entry("trivial"), &e3},
  };
  for (const auto& [src, tgt] : cases) {
    CAPTURE(src->name);
    CAPTURE(tgt->name);
    auto fast = enumerate_homs(*src, *tgt);
    CHECK(fast == brute_homs(*src, *tgt));
    for (const auto& h : fast) {
      QuantaleHom qh{std::make_shared<FiniteQuantale>(*src), std::make_shared<FiniteQuantale>(*tgt),
                     h};
      CHECK(check_hom(qh).is_hom());
    }
  }
}

TEST_CASE("irreducibility, strength, pre-unitality") {
  // identity representation of Q(3-chain) on the 3-chain
  const FiniteQuantale& e3 = corpus_entry("endo-chain3");
  std::vector<int> id(e3.size());
  std::iota(id.begin(), id.end(), 0);
  Representation r = make_rep(e3, chain(3), id);
  CHECK(is_strong(r));
  CHECK(is_irreducible(r));
  CHECK(is_pre_unital(r));
  CHECK(r.act(1, 2) == 0);  // x=1 under (0,0,2)
  CHECK(r.act(2, 2) == 2);
  CHECK(r.act(1, 4) == 1);  // identity element acts as identity

  // the zero representation is irreducible only on carriers without middle
  const FiniteQuantale& two = corpus_entry("chain2");
  Representation z2 = make_rep(two, chain(2), {0, 0});
  CHECK(is_irreducible(z2));
  CHECK(!is_strong(z2));
  Representation z3 = make_rep(two, chain(3), {0, 0});
  CHECK(!is_irreducible(z3));  // middle x has x . 1 = 0 <= x

  // pre-unitality needs a source unit
  Representation zm = make_rep(corpus_entry("m2-pattern"), chain(2), {0, 0, 0, 0, 0, 0});
  CHECK_THROWS_WITH_AS(is_pre_unital(zm), doctest::Contains("missing-unit"),
                       std::invalid_argument);
}

TEST_CASE("point enumeration, frozen small cases") {
  const FiniteQuantale& two = corpus_entry("chain2");
  auto pts = enumerate_points(two, 2);
  CHECK(pts.size() == 3);          // zero on 1- and 2-carriers, plus the identity-like one
  CHECK(count_nonzero(pts) == 1);  // exactly one nonzero point up to carrier iso
  CHECK(separates(two, pts));

  const FiniteQuantale& b4 = corpus_entry("boolean4");
  pts = enumerate_points(b4, 2);
  CHECK(pts.size() == 4);
  CHECK(count_nonzero(pts) == 2);  // the two coatom characters
  CHECK(separates(b4, pts));

  const FiniteQuantale& triv = corpus_entry("trivial");
  CHECK(enumerate_representations(triv, 3).size() == 3);  // one per carrier
  CHECK(enumerate_points(triv, 3).size() == 2);           // the 3-chain one is reducible

  CHECK_THROWS_AS(enumerate_representations(two, 7), std::length_error);

  // deterministic ordering
  auto again = enumerate_points(b4, 2);
  REQUIRE(again.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) CHECK(again[i].map == pts[i].map);
}

TEST_CASE("strong implies irreducible; pre-unital: irreducible iff strong") {
  for (const auto& q : quantale_corpus()) {
    if (q.size() > 6) continue;
    CAPTURE(q.name);
    for (const Representation& r : enumerate_representations(q, 5)) {
      if (is_strong(r)) CHECK(is_irreducible(r));
      if (q.unit && is_pre_unital(r)) CHECK(is_irreducible(r) == is_strong(r));
    }
  }
}

TEST_CASE("module action laws") {
  for (const char* name : {"chain3", "interior-chain3", "m2-pattern"}) {
    const FiniteQuantale& q = corpus_entry(name);
    CAPTURE(name);
    for (const Representation& r : enumerate_representations(q, 4)) {
      const SupLattice& s = r.carrier();
      for (int a = 0; a < q.size(); ++a) {
        for (int b = 0; b < q.size(); ++b)
          for (int x = 0; x < s.size; ++x)
            REQUIRE(r.act(x, q.prod(a, b)) == r.act(r.act(x, a), b));
        for (int x = 0; x < s.size; ++x)
          for (int y = 0; y < s.size; ++y)
            REQUIRE(r.act(s.join(x, y), a) == s.join(r.act(x, a), r.act(y, a)));
      }
    }
  }
}

TEST_CASE("spatiality by primes = separation by irreducible representations") {
  for (const auto& q : quantale_corpus()) {
    if (q.size() > 6) continue;
    CAPTURE(q.name);
    KrumlReport rep = kruml_crosscheck(q, 6);
    CHECK(rep.agree());
    CHECK(rep.separated == (q.name != "zero-chain3" && q.name != "interior-chain3" &&
                            q.name != "m2-pattern"));
  }
}
