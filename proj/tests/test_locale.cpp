#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/locale.hpp"

using namespace qlab;

namespace {

std::vector<FiniteFrame> frame_corpus() {
  std::vector<FiniteFrame> v;
  for (const Poset& p : poset_corpus()) v.push_back(frame_of_downsets(p));
  return v;
}

FiniteFrame two_frame() { return frame_of_downsets(chain_poset(1)); }
FiniteFrame b4_frame() { return frame_of_downsets(antichain_poset(2)); }

// Boolean oracle: every element has a complement.
bool all_complemented(const FiniteFrame& f) {
  const SupLattice& L = f.lattice;
  for (int a = 0; a < L.size; ++a) {
    bool has = false;
    for (int b = 0; b < L.size && !has; ++b)
      has = L.meet(a, b) == L.bottom && L.join(a, b) == L.top;
    if (!has) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("poset validation and corpus") {
  CHECK_THROWS_WITH_AS(make_poset(2, {1, 1, 1, 1}), doctest::Contains("antisymmetry"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_poset(2, {1, 0, 0, 0}), doctest::Contains("reflexive"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_poset(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}),
                       doctest::Contains("transitivity"), std::invalid_argument);

  auto corpus = poset_corpus();
  CHECK(corpus.size() == 9);
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j)
      CHECK(!poset_isomorphic(corpus[i], corpus[j]));

  Poset pq = product_poset(chain_poset(2), antichain_poset(2));
  CHECK(pq.size == 4);
  CHECK(pq.names[1] == "(p0,p1)");
  CHECK(pq.leq(0, 2));   // (a,x) <= (b,x)
  CHECK(!pq.leq(0, 3));  // (a,x) vs (b,y) incomparable
}

TEST_CASE("downset frames: sizes, distributivity, classification") {
  const int expected_sizes[] = {1, 2, 3, 4, 4, 8, 5, 5, 6};
  auto corpus = frame_corpus();
  REQUIRE(corpus.size() == 9);
  for (size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    const FiniteFrame& f = corpus[i];
    CHECK(f.size() == expected_sizes[i]);
    const SupLattice& L = f.lattice;
    for (int a = 0; a < L.size; ++a)  // distributivity of the downset lattice
      for (int b = 0; b < L.size; ++b)
        for (int c = 0; c < L.size; ++c)
          REQUIRE(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)));
    ClassificationReport rep = verify_axioms(frame_quantale(f));
    CHECK(rep.is_quantale);
    CHECK(rep.locale);
    CHECK(rep.strictly_two_sided);
    CHECK(rep.strong);
    CHECK(rep.gelfand == Tri::yes);
  }
  // joins are unions, meets are intersections
  FiniteFrame b8 = frame_of_downsets(antichain_poset(3));
  int i13 = b8.index_of_mask(0b011), i5 = b8.index_of_mask(0b101);
  CHECK(b8.elements[b8.lattice.join(i13, i5)] == 0b111);
  CHECK(b8.elements[b8.lattice.meet(i13, i5)] == 0b001);
  CHECK(b8.index_of_mask(0b1000) == -1);
  CHECK(b8.lattice.names[i13] == "{p0,p1}");
}

TEST_CASE("Birkhoff round-trip recovers the base poset") {
  for (const Poset& p : poset_corpus()) {
    FiniteFrame f = frame_of_downsets(p);
    CHECK(poset_isomorphic(base_poset_of(f.lattice), p));
  }
  CHECK(poset_isomorphic(base_poset_of(boolean_lattice(2)), antichain_poset(2)));
  CHECK(poset_isomorphic(base_poset_of(chain(4)), chain_poset(3)));
}

TEST_CASE("well inside") {
  FiniteFrame c3 = frame_of_downsets(chain_poset(2));  // the 3-chain frame
  CHECK(well_inside(c3, 0, 1).inside);
  CHECK(well_inside(c3, 0, 1).witness == 2);  // only the top joins mid up to 1
  CHECK(!well_inside(c3, 1, 1).inside);      // the middle is not well inside itself
  CHECK(well_inside(c3, 1, 2).inside);       // but it is well inside the top
  CHECK(well_inside(c3, 1, 2).witness == 0);

  FiniteFrame b4 = b4_frame();
  int x = b4.index_of_mask(0b01), y = b4.index_of_mask(0b10);
  WellInsideReport w = well_inside(b4, x, x);
  CHECK(w.inside);
  CHECK(w.witness == y);  // the complement of an atom witnesses it
}

TEST_CASE("regularity = Boolean, with witnesses") {
  auto corpus = frame_corpus();
  const bool expected_regular[] = {true, true, false, true, false, true, false, false, false};
  for (size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    RegularityReport rep = is_regular(corpus[i]);
    CHECK(rep.regular == expected_regular[i]);
    CHECK(rep.regular == all_complemented(corpus[i]));
    if (!rep.regular) CHECK(rep.witness == 1);  // first non-complemented downset
  }
}

TEST_CASE("frame coproducts") {
  FiniteFrame two = two_frame(), b4 = b4_frame(), c3 = frame_of_downsets(chain_poset(2));
  FiniteFrame triv = frame_of_downsets(make_poset(0, {}));

  SUBCASE("two (+) two = two") {
    FrameCoproduct cp = frame_coproduct(two, two);
    CHECK(cp.frame.size() == 2);
    CHECK(cp.iota1 == std::vector<int>{0, 1});
    CHECK(cp.iota2 == std::vector<int>{0, 1});
    CHECK(verify_coproduct_universal(two, two, cp, frame_corpus()).holds);
  }

  SUBCASE("Boolean 4 (+) Boolean 4 = Boolean 16") {
    FrameCoproduct cp = frame_coproduct(b4, b4);
    CHECK(cp.frame.size() == 16);
    CHECK(poset_isomorphic(cp.frame.base, antichain_poset(4)));
    CHECK(check_generator_commutation(b4, b4, cp));
    CHECK(verify_coproduct_universal(b4, b4, cp, frame_corpus()).holds);
  }

  SUBCASE("3-chain (+) Boolean 4") {
    FrameCoproduct cp = frame_coproduct(c3, b4);
    CHECK(cp.frame.size() == 9);
    CHECK(check_generator_commutation(c3, b4, cp));
    CHECK(verify_coproduct_universal(c3, b4, cp, frame_corpus()).holds);
  }

  SUBCASE("the trivial frame absorbs") {
    CHECK(frame_coproduct(b4, triv).frame.size() == 1);
    CHECK(frame_coproduct(triv, c3).frame.size() == 1);
  }

  SUBCASE("two is a unit") {
    CHECK(poset_isomorphic(frame_coproduct(two, b4).frame.base, b4.base));
    CHECK(poset_isomorphic(frame_coproduct(c3, two).frame.base, c3.base));
  }

  SUBCASE("commutative and associative on base posets") {
    const FiniteFrame* fs[] = {&two, &c3, &b4};
    for (const FiniteFrame* x : fs)
      for (const FiniteFrame* y : fs) {
        CHECK(poset_isomorphic(frame_coproduct(*x, *y).frame.base,
                               frame_coproduct(*y, *x).frame.base));
        for (const FiniteFrame* z : fs) {
          FiniteFrame xy = frame_coproduct(*x, *y).frame;
          FiniteFrame yz = frame_coproduct(*y, *z).frame;
          CHECK(poset_isomorphic(frame_coproduct(xy, *z).frame.base,
                                 frame_coproduct(*x, yz).frame.base));
        }
      }
  }

  SUBCASE("coprojections are frame homs") {
    FrameCoproduct cp = frame_coproduct(c3, b4);
    FiniteQuantale qc = frame_quantale(c3), qb = frame_quantale(b4),
                   qcp = frame_quantale(cp.frame);
    auto as_hom = [&](const FiniteQuantale& s, const std::vector<int>& m) {
      return QuantaleHom{std::make_shared<FiniteQuantale>(s),
                         std::make_shared<FiniteQuantale>(qcp), m};
    };
    HomReport r1 = check_hom(as_hom(qc, cp.iota1));
    CHECK(r1.is_hom());
    CHECK(r1.strong == Tri::yes);
    HomReport r2 = check_hom(as_hom(qb, cp.iota2));
    CHECK(r2.is_hom());
    CHECK(r2.strong == Tri::yes);
  }

  SUBCASE("regularity of coproducts matches the Boolean oracle") {
    FrameCoproduct cp = frame_coproduct(c3, b4);
    CHECK(is_regular(cp.frame).regular == all_complemented(cp.frame));
    FrameCoproduct cb = frame_coproduct(b4, b4);
    CHECK(is_regular(cb.frame).regular == all_complemented(cb.frame));
    CHECK(is_regular(cb.frame).regular);
  }
}

TEST_CASE("frame hom enumeration") {
  FiniteFrame two = two_frame(), b4 = b4_frame(), c3 = frame_of_downsets(chain_poset(2));
  FiniteFrame b8 = frame_of_downsets(antichain_poset(3));
  for (const FiniteFrame& m : frame_corpus()) CHECK(enumerate_frame_homs(two, m).size() == 1);
  CHECK(enumerate_frame_homs(b4, two).size() == 2);
  CHECK(enumerate_frame_homs(c3, two).size() == 2);
  CHECK(enumerate_frame_homs(b8, two).size() == 3);

  // identity is enumerated, and every hom is top- and bottom-preserving
  auto homs = enumerate_frame_homs(b4, b4);
  std::vector<int> id{0, 1, 2, 3};
  CHECK(std::find(homs.begin(), homs.end(), id) != homs.end());
  for (const auto& h : homs) {
    CHECK(h[0] == 0);
    CHECK(h[3] == 3);
  }
}
