#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qlab/corpus.hpp"
#include "qlab/quantale.hpp"

using namespace qlab;

namespace {

const FiniteQuantale& corpus_entry(const std::string& name) {
  for (const auto& q : quantale_corpus())
    if (q.name == name) return q;
  throw std::runtime_error("no corpus entry " + name);
}

QuantaleHom make_hom(const FiniteQuantale& src, const FiniteQuantale& tgt, std::vector<int> map) {
  return {std::make_shared<FiniteQuantale>(src), std::make_shared<FiniteQuantale>(tgt),
          std::move(map)};
}

// Frame maps to the 2-chain locale: a |-> [a not below p], one per prime.
std::vector<QuantaleHom> points_to_two(const FiniteQuantale& loc) {
  std::vector<QuantaleHom> pts;
  FiniteQuantale two = locale_quantale(chain(2), "2", true);
  for (int p : primes(loc)) {
    std::vector<int> map(loc.size());
    for (int a = 0; a < loc.size(); ++a) map[a] = loc.lattice.leq(a, p) ? 0 : 1;
    pts.push_back(make_hom(loc, two, std::move(map)));
  }
  return pts;
}

// Distributivity over every subset, both sides; cross-checks the binary
// reduction used by verify_axioms.
void check_subset_distributivity(const FiniteQuantale& q) {
  REQUIRE(q.size() <= 16);
  for (int a = 0; a < q.size(); ++a)
    for (uint32_t mask = 0; mask < (1u << q.size()); ++mask) {
      int j = q.bottom(), jl = q.bottom(), jr = q.bottom();
      for (int x = 0; x < q.size(); ++x)
        if (mask & (1u << x)) {
          j = q.lattice.join(j, x);
          jl = q.lattice.join(jl, q.prod(a, x));
          jr = q.lattice.join(jr, q.prod(x, a));
        }
      REQUIRE(q.prod(a, j) == jl);
      REQUIRE(q.prod(j, a) == jr);
    }
}

}  // namespace

TEST_CASE("corpus passes verify_axioms with the expected classification") {
  for (const auto& q : quantale_corpus()) {
    CAPTURE(q.name);
    ClassificationReport rep = verify_axioms(q);
    CHECK(rep.is_quantale);
    CHECK(!rep.violation.has_value());
    CHECK(rep.strong == (q.name != "zero-chain3"));  // 1*1 = 0 there
  }

  CHECK(verify_axioms(corpus_entry("trivial")).trivial);
  CHECK(verify_axioms(corpus_entry("trivial")).locale);
  for (const char* name : {"chain2", "chain3", "chain4", "boolean4", "boolean8"}) {
    ClassificationReport rep = verify_axioms(corpus_entry(name));
    CHECK(rep.locale);
    CHECK(rep.strictly_two_sided);
    CHECK(rep.involutive == Tri::yes);
    CHECK(rep.gelfand == Tri::yes);
    CHECK(!rep.trivial);
  }
  {
    ClassificationReport rep = verify_axioms(corpus_entry("zero-chain3"));
    CHECK(!rep.unital);
    CHECK(rep.involutive == Tri::na);
    CHECK(rep.gelfand == Tri::na);
    CHECK(!rep.locale);
  }
  {
    ClassificationReport rep = verify_axioms(corpus_entry("interior-chain3"));
    CHECK(rep.unital);
    CHECK(rep.strictly_two_sided);
    CHECK(!rep.locale);  // product differs from meet at (a,a)
    CHECK(rep.involutive == Tri::yes);
    CHECK(rep.gelfand == Tri::no);
  }
  {
    ClassificationReport rep = verify_axioms(corpus_entry("m2-pattern"));
    CHECK(!rep.unital);
    CHECK(rep.involutive == Tri::yes);
    CHECK(rep.gelfand == Tri::na);
  }
  {
    ClassificationReport rep = verify_axioms(corpus_entry("endo-chain3"));
    CHECK(rep.unital);
    CHECK(!rep.strictly_two_sided);  // identity is not the top endomap
    CHECK(!rep.locale);
  }
  CHECK(verify_axioms(endo_quantale(chain(2))).locale);  // Q(2) is the 2-chain frame
}

TEST_CASE("distributivity over arbitrary subsets (exhaustive cross-check)") {
  for (const auto& q : quantale_corpus())
    if (q.size() <= 6) check_subset_distributivity(q);
}

TEST_CASE("axiom violations come with witnesses") {
  // non-distributive lattice: meet does not distribute over joins
  FiniteQuantale n5 = locale_quantale(pentagon_n5(), "n5");
  ClassificationReport rep = verify_axioms(n5);
  CHECK(!rep.is_quantale);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->law == "distributivity");

  // zero product with a declared unit: e*e = 0 != e
  FiniteQuantale zu = corpus_entry("zero-chain3");
  zu.unit = 2;
  rep = verify_axioms(zu);
  CHECK(rep.is_quantale);  // the product itself is fine
  CHECK(!rep.unital);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->law == "unit");

  // star that is not join-preserving
  FiniteQuantale bs = locale_quantale(chain(3), "broken-star");
  bs.star = std::vector<int>{1, 0, 2};
  rep = verify_axioms(bs);
  CHECK(rep.involutive == Tri::no);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->law == "star");

  // bimorphism on Boolean 4 that is not associative: x*x=y, y*x=x makes
  // (x*x)*x = x but x*(x*x) = x*y = 0
  FiniteQuantale na;
  na.lattice = boolean_lattice(2);
  na.product_tab = {0, 0, 0, 0,   // 0 row
                    0, 2, 0, 2,   // x row: x*x=y, x*y=0, x*1=y
                    0, 1, 0, 1,   // y row: y*x=x, y*y=0, y*1=x
                    0, 3, 0, 3};  // 1 row
  rep = verify_axioms(na);
  CHECK(!rep.is_quantale);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->law == "associativity");
  CHECK(rep.violation->witness == std::vector<int>{1, 1, 1});
}

TEST_CASE("sided elements") {
  // Q(3-chain) elements in lexicographic order of their value vectors:
  // (0,0,0),(0,0,1),(0,0,2),(0,1,1),(0,1,2),(0,2,2)
  const FiniteQuantale& e3 = corpus_entry("endo-chain3");
  CHECK(sided_elements(e3, Side::right) == std::vector<int>{0, 2, 5});
  CHECK(sided_elements(e3, Side::left) == std::vector<int>{0, 3, 5});
  CHECK(sided_elements(e3, Side::two) == std::vector<int>{0, 5});

  // in a locale everything is two-sided
  const FiniteQuantale& b4 = corpus_entry("boolean4");
  CHECK(sided_elements(b4, Side::two).size() == 4);

  // for unital quantales the right-sided elements are exactly Q*1
  for (const auto& q : quantale_corpus()) {
    if (!q.unit) continue;
    CAPTURE(q.name);
    std::set<int> image;
    for (int a = 0; a < q.size(); ++a) image.insert(q.prod(a, q.top()));
    auto rs = sided_elements(q, Side::right);
    CHECK(std::set<int>(rs.begin(), rs.end()) == image);
  }
}

TEST_CASE("gelfand check") {
  CHECK(is_gelfand(corpus_entry("boolean4")));
  CHECK(is_gelfand(corpus_entry("chain3")));
  CHECK(!is_gelfand(corpus_entry("interior-chain3")));
  CHECK_THROWS_WITH_AS(is_gelfand(corpus_entry("m2-pattern")),
                       doctest::Contains("missing-unit-or-star"), std::invalid_argument);
  CHECK_THROWS_AS(is_gelfand(corpus_entry("zero-chain3")), std::invalid_argument);
}

TEST_CASE("primes, frozen by exhaustive scan") {
  CHECK(primes(corpus_entry("trivial")).empty());
  CHECK(primes(corpus_entry("chain2")) == std::vector<int>{0});
  CHECK(primes(corpus_entry("chain3")) == std::vector<int>{0, 1});
  CHECK(primes(corpus_entry("chain4")) == std::vector<int>{0, 1, 2});
  CHECK(primes(corpus_entry("boolean4")) == std::vector<int>{1, 2});  // the two coatoms
  CHECK(primes(corpus_entry("boolean8")) == std::vector<int>{3, 5, 6});
  CHECK(primes(corpus_entry("zero-chain3")).empty());
  CHECK(primes(corpus_entry("interior-chain3")) == std::vector<int>{1});
  CHECK(primes(corpus_entry("m2-pattern")) == std::vector<int>{0, 2, 3});
  CHECK(primes(corpus_entry("endo-chain3")) == std::vector<int>{0, 2, 3, 4});
}

TEST_CASE("spatiality by primes") {
  for (const char* name : {"trivial", "chain2", "chain3", "chain4", "boolean4", "boolean8",
                           "endo-chain3", "endo-boolean4"}) {
    CAPTURE(name);
    CHECK(is_spatial_by_primes(corpus_entry(name)).spatial);
  }
  SpatialityReport r = is_spatial_by_primes(corpus_entry("m2-pattern"));
  CHECK(!r.spatial);
  CHECK(r.witness == 4);  // P, the maximal non-prime
  r = is_spatial_by_primes(corpus_entry("zero-chain3"));
  CHECK(!r.spatial);
  CHECK(r.witness == 0);
  r = is_spatial_by_primes(corpus_entry("interior-chain3"));
  CHECK(!r.spatial);
  CHECK(r.witness == 0);
}

TEST_CASE("hom checking") {
  FiniteQuantale two = locale_quantale(chain(2), "2");
  FiniteQuantale three = locale_quantale(chain(3), "3");

  // inclusion hitting the middle: joins and meets survive, unit laws fail
  HomReport r = check_hom(make_hom(two, three, {0, 1}));
  CHECK(r.is_hom());
  CHECK(r.unital == Tri::no);
  CHECK(r.pre_unital == Tri::no);
  CHECK(r.strong == Tri::no);
  CHECK(r.involutive == Tri::na);

  r = check_hom(make_hom(two, three, {0, 2}));
  CHECK(r.is_hom());
  CHECK(r.unital == Tri::yes);
  CHECK(r.pre_unital == Tri::yes);
  CHECK(r.strong == Tri::yes);

  // h(0) != 0 breaks join preservation
  r = check_hom(make_hom(two, two, {1, 1}));
  CHECK(!r.join_preserving);
  REQUIRE(r.violation.has_value());
  CHECK(r.violation->law == "join");

  // join-preserving but not multiplicative: interior-chain3 vs chain3 differ at a*a
  r = check_hom(make_hom(corpus_entry("interior-chain3"), three, {0, 1, 2}));
  CHECK(r.join_preserving);
  CHECK(!r.product_preserving);
  REQUIRE(r.violation.has_value());
  CHECK(r.violation->law == "product");
  CHECK(r.violation->witness == std::vector<int>{1, 1});
}

TEST_CASE("spatialization") {
  const FiniteQuantale& b4 = corpus_entry("boolean4");

  SUBCASE("two points separate Boolean 4 completely") {
    Spatialization sp = spatialize(b4, points_to_two(b4));
    CHECK(sp.quotient.size() == 4);
    CHECK(quantale_isomorphic(sp.quotient, locale_quantale(boolean_lattice(2), "", true)));
    for (int a = 0; a < 4; ++a) CHECK(sp.representative[sp.class_of[a]] == a);
  }

  SUBCASE("a single point collapses to the 2-chain") {
    auto pts = points_to_two(b4);
    pts.resize(1);
    Spatialization sp = spatialize(b4, pts);
    CHECK(sp.quotient.size() == 2);
    CHECK(quantale_isomorphic(sp.quotient, locale_quantale(chain(2), "", true)));
  }

  SUBCASE("no points collapse everything") {
    Spatialization sp = spatialize(b4, {});
    CHECK(sp.quotient.size() == 1);
    CHECK(verify_axioms(sp.quotient).trivial);
  }

  SUBCASE("non-homomorphisms are rejected") {
    FiniteQuantale two = locale_quantale(chain(2), "2");
    auto bad = make_hom(b4, two, {1, 0, 0, 1});
    CHECK_THROWS_AS(spatialize(b4, {bad}), std::invalid_argument);
  }

  SUBCASE("congruence soundness, exhaustively") {
    for (const auto& q : quantale_corpus()) {
      if (q.size() > 8) continue;
      CAPTURE(q.name);
      std::vector<QuantaleHom> pts;
      if (verify_axioms(q).locale) pts = points_to_two(q);
      // otherwise the empty family: total collapse is still a congruence
      Spatialization sp = spatialize(q, pts);
      for (int a = 0; a < q.size(); ++a)
        for (int a2 = 0; a2 < q.size(); ++a2) {
          if (sp.class_of[a] != sp.class_of[a2]) continue;
          for (int b = 0; b < q.size(); ++b)
            for (int b2 = 0; b2 < q.size(); ++b2) {
              if (sp.class_of[b] != sp.class_of[b2]) continue;
              REQUIRE(sp.class_of[q.prod(a, b)] == sp.class_of[q.prod(a2, b2)]);
              REQUIRE(sp.class_of[q.lattice.join(a, b)] == sp.class_of[q.lattice.join(a2, b2)]);
            }
        }
      ClassificationReport rep = verify_axioms(sp.quotient);
      REQUIRE(rep.is_quantale);
    }
  }
}

TEST_CASE("unit downset and idempotent identities") {
  for (const auto& q : quantale_corpus()) {
    CAPTURE(q.name);
    // {a : a <= e} is closed under product, joins, and star
    if (q.unit && q.star) {
      int e = *q.unit;
      for (int a = 0; a < q.size(); ++a) {
        if (!q.lattice.leq(a, e)) continue;
        CHECK(q.lattice.leq(q.star_of(a), e));
        for (int b = 0; b < q.size(); ++b) {
          if (!q.lattice.leq(b, e)) continue;
          CHECK(q.lattice.leq(q.prod(a, b), e));
          CHECK(q.lattice.leq(q.lattice.join(a, b), e));
        }
      }
    }
    // commuting idempotents: a*b*a*b = a*b
    for (int a = 0; a < q.size(); ++a) {
      if (q.prod(a, a) != a) continue;
      for (int b = 0; b < q.size(); ++b) {
        if (q.prod(b, b) != b || q.prod(a, b) != q.prod(b, a)) continue;
        int ab = q.prod(a, b);
        CHECK(q.prod(ab, ab) == ab);
      }
    }
  }
}

TEST_CASE("locale flag = strictly two-sided + idempotent product") {
  auto idempotent = [](const FiniteQuantale& q) {
    for (int a = 0; a < q.size(); ++a)
      if (q.prod(a, a) != a) return false;
    return true;
  };
  for (const auto& q : quantale_corpus()) {
    CAPTURE(q.name);
    ClassificationReport rep = verify_axioms(q);
    CHECK(rep.locale == (rep.strictly_two_sided && idempotent(q)));
  }
}

TEST_CASE("spatialize by the identity point changes nothing") {
  const FiniteQuantale& q = corpus_entry("m2-pattern");
  std::vector<int> id(q.size());
  std::iota(id.begin(), id.end(), 0);
  Spatialization sp = spatialize(q, {make_hom(q, q, id)});
  CHECK(sp.quotient.size() == q.size());
  CHECK(quantale_isomorphic(sp.quotient, q));
}

TEST_CASE("localic reflection map") {
  // Q(2): both elements are already two-sided, the map is the identity
  FiniteQuantale q2 = endo_quantale(chain(2));
  CHECK(localic_reflection_map(q2) == std::vector<int>{0, 1});

  // image of a |-> 1*a*1 = the two-sided elements, for unital quantales
  for (const auto& q : quantale_corpus()) {
    if (!q.unit) continue;
    CAPTURE(q.name);
    auto r = localic_reflection_map(q);
    std::set<int> image(r.begin(), r.end());
    auto ts = sided_elements(q, Side::two);
    CHECK(image == std::set<int>(ts.begin(), ts.end()));
    for (int a = 0; a < q.size(); ++a) {
      CHECK(q.lattice.leq(a, r[a]));  // a = e*a*e <= 1*a*1
      CHECK(r[r[a]] == r[a]);
    }
  }
  CHECK(localic_reflection_map(corpus_entry("endo-chain3")) ==
        std::vector<int>{0, 5, 5, 5, 5, 5});
}

TEST_CASE("endo quantale structure") {
  EndoQuantale e3 = make_endo_quantale(chain(3));
  CHECK(e3.quantale.size() == 6);
  REQUIRE(e3.quantale.unit.has_value());
  CHECK(e3.maps[*e3.quantale.unit].values == std::vector<int>{0, 1, 2});
  CHECK(e3.maps[e3.quantale.top()].values == std::vector<int>{0, 2, 2});
  CHECK(e3.maps[e3.quantale.bottom()].values == std::vector<int>{0, 0, 0});

  // composition order: (f * g)(x) = g(f(x))
  int f = 1;  // (0,0,1)
  int g = 3;  // (0,1,1)
  CHECK(e3.maps[f].values == std::vector<int>{0, 0, 1});
  CHECK(e3.maps[g].values == std::vector<int>{0, 1, 1});
  int fg = e3.quantale.prod(f, g);
  CHECK(e3.maps[fg].values == std::vector<int>{0, 0, 1});  // g(f(x))
  int gf = e3.quantale.prod(g, f);
  CHECK(e3.maps[gf].values == std::vector<int>{0, 0, 0});  // f(g(x))

  CHECK(endo_quantale(boolean_lattice(2)).size() == 16);

  for (const SupLattice& s : all_lattices_up_to(4)) {
    ClassificationReport rep = verify_axioms(endo_quantale(s));
    CHECK(rep.is_quantale);
    CHECK(rep.unital);
    CHECK(!rep.violation.has_value());
  }
  ClassificationReport rep = verify_axioms(endo_quantale(chain(5)));
  CHECK(rep.is_quantale);
  CHECK(rep.unital);
}

TEST_CASE("direct products and isomorphism testing") {
  FiniteQuantale two = locale_quantale(chain(2), "2", true);
  FiniteQuantale p = direct_product(two, two);
  CHECK(p.size() == 4);
  CHECK(quantale_isomorphic(p, locale_quantale(boolean_lattice(2), "", true)));
  CHECK(verify_axioms(p).locale);

  CHECK(!quantale_isomorphic(locale_quantale(chain(3), "", true),
                             corpus_entry("interior-chain3")));
  CHECK(quantale_isomorphic(corpus_entry("m2-pattern"), corpus_entry("m2-pattern")));
}
