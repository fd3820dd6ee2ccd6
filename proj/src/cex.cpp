#include "qlab/cex.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qlab/corpus.hpp"
#include "qlab/maxspec.hpp"
#include "qlab/quantale.hpp"
#include "qlab/representation.hpp"
#include "qlab/suplattice.hpp"

namespace qlab {

std::string Report::text() const {
  std::string s = "scenario: " + name + "\ncitation: " + citation + "\n";
  for (const auto& line : transcript) s += "  " + line.label + ": " + line.output + "\n";
  s += std::string("verdict: ") + (pass ? "pass" : "fail") + "\n";
  return s;
}

std::string Report::json() const {
  nlohmann::json j;
  j["name"] = name;
  j["citation"] = citation;
  j["pass"] = pass;
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& t : transcript) lines.push_back({{"label", t.label}, {"output", t.output}});
  j["transcript"] = lines;
  return j.dump(2) + "\n";
}

namespace {

const Algebra kC2{{1, 1}};
const Algebra kM2{{2}};

struct Runner {
  Report rep;
  bool ok = true;

  void note(const std::string& label, const std::string& output) {
    rep.transcript.push_back({label, output});
  }
  void check(const std::string& label, bool cond) {
    if (!cond) ok = false;
    rep.transcript.push_back({"check " + label, cond ? "ok" : "FAIL"});
  }
};

AlgElement elem(const Algebra& a, const std::vector<std::string>& entries) {
  std::vector<GaussRational> flat;
  flat.reserve(entries.size());
  for (const auto& e : entries) flat.push_back(GaussRational::parse(e));
  return unflatten(a, flat);
}

AlgElement m2unit(int i, int j) { return AlgElement::basis(kM2, 2 * i + j); }

std::string seed_str() {
  std::ostringstream os;
  os << "0x" << std::hex << kDefaultSampleSeed;
  return os.str();
}

// The two legs of the diagonal-embedding computation, shared with the
// composed-diagram replay: pushing <(1,1)> and <(1,-1)> into M2 and
// squeezing the images between the equal-columns and equal-rows spaces.
struct CollapseFacts {
  Subspace img_plus, img_minus, top_side, zero_side;
};

CollapseFacts collapse_facts() {
  ExactMatrix p(2, 2);
  p.at(0, 0) = GaussRational(1);
  StarHom f = projection_pair_hom(p);
  Subspace plus = span(kC2, {elem(kC2, {"1", "1"})});
  Subspace minus = span(kC2, {elem(kC2, {"1", "-1"})});
  Subspace cols = span(kM2, {m2unit(0, 0) + m2unit(0, 1), m2unit(1, 0) + m2unit(1, 1)});
  Subspace rows = span(kM2, {m2unit(0, 0) + m2unit(1, 0), m2unit(0, 1) + m2unit(1, 1)});
  CollapseFacts out{max_functor(f, plus), max_functor(f, minus), msbottom(kM2), msbottom(kM2)};
  out.top_side = msproduct(msproduct(cols, out.img_plus), rows);
  out.zero_side = msproduct(msproduct(cols, out.img_minus), rows);
  return out;
}

// The row-module point of M2 tells <I2> and 0 apart on the line <e1>.
bool m2_point_separates_unit() {
  ExactMatrix w(1, 2);
  w.at(0, 0) = GaussRational(1);
  return hilbert_point_action(msunit(kM2), 0, w) != hilbert_point_action(msbottom(kM2), 0, w);
}

void s_m2_not_spatial(Runner& r, int) {
  Subspace R = span(kM2, {m2unit(0, 0), m2unit(0, 1)});
  Subspace L = span(kM2, {m2unit(0, 0), m2unit(1, 0)});
  Subspace P = span(kM2, {m2unit(0, 0), m2unit(0, 1) + m2unit(1, 0), m2unit(1, 1)});
  r.note("R (top row)", R.str());
  r.note("L' (left column)", L.str());
  r.note("P (symmetric)", P.str());
  Subspace prod = msproduct(msproduct(R, mstop(kM2)), L);
  r.note("R*top*L'", prod.str());
  r.check("R*top*L' = <E11>", prod == span(kM2, {m2unit(0, 0)}));
  r.check("R*top*L' <= P", msleq(prod, P));
  r.check("R not <= P", !msleq(R, P));
  r.check("L' not <= P", !msleq(L, P));
  r.check("P is refuted as a prime by (R, L')", refute_prime(P, R, L).refuted());
  // P is a co-atom: anything strictly above a 3-dimensional subspace is M2
  r.check("P is proper of rank 3", P != mstop(kM2) && P.rank() == 3);
}

void s_c2_diagonal_not_prime(Runner& r, int) {
  Subspace d = span(kC2, {elem(kC2, {"1", "1"})});
  Subspace a = span(kC2, {elem(kC2, {"1", "0"})});
  Subspace b = span(kC2, {elem(kC2, {"0", "1"})});
  r.note("D (diagonal line)", d.str());
  r.note("A", a.str());
  r.note("B", b.str());
  Subspace prod = msproduct(msproduct(a, mstop(kC2)), b);
  r.note("A*top*B", prod.str());
  r.check("A*top*B = 0 <= D", prod == msbottom(kC2) && msleq(prod, d));
  r.check("A not <= D", !msleq(a, d));
  r.check("B not <= D", !msleq(b, d));
  r.check("D is refuted as a prime by (A, B)", refute_prime(d, a, b).refuted());
  // any subspace strictly above a line of C^2 has rank 2, so D is maximal
  r.check("D is a proper line", d != mstop(kC2) && d.rank() == 1);
  r.check("D join A = top and D join B = top",
          msjoin(d, a) == mstop(kC2) && msjoin(d, b) == mstop(kC2));
}

void s_spatialization_cn(Runner& r, int n) {
  Algebra a{std::vector<int>(n, 1)};
  DiagonalSpatialization spat = spatialization_diagonal(n);
  r.note("algebra", a.str());
  r.note("point-identification classes", std::to_string(spat.frame.size()));
  r.check("class count = 2^" + std::to_string(n), spat.frame.size() == (1 << n));

  // one coordinate span per support mask; these realize the boolean frame
  std::vector<Subspace> rep;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<AlgElement> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(AlgElement::basis(a, i));
    rep.push_back(span(a, gens));
  }
  bool classes = true, ops = true, order = true;
  for (uint32_t sm = 0; sm < (1u << n); ++sm) {
    classes = classes && spat.index_of(rep[sm]) == spat.frame.index_of_mask(sm) &&
              two_sided_closure(rep[sm]) == rep[sm] && msstar(rep[sm]) == rep[sm];
    for (uint32_t tm = 0; tm < (1u << n); ++tm) {
      ops = ops && msproduct(rep[sm], rep[tm]) == rep[sm & tm] &&
            msjoin(rep[sm], rep[tm]) == rep[sm | tm];
      order = order && msleq(rep[sm], rep[tm]) == ((sm & ~tm) == 0);
    }
  }
  r.check("coordinate spans hit every class exactly once", classes);
  r.check("products and joins realize mask intersection and union", ops);
  r.check("the subspace order realizes mask inclusion", order);

  SubspaceSampler s;
  r.note("sample seed", seed_str());
  bool closure_agrees = true;
  for (int t = 0; t < 50; ++t) {
    Subspace m = s.subspace(a);
    closure_agrees = closure_agrees && two_sided_closure(m) == rep[diagonal_support(m)] &&
                     spat.index_of(m) == spat.index_of(two_sided_closure(m));
  }
  r.check("50 sampled subspaces: class of M = class of top*M*top", closure_agrees);
}

void s_kruml_crosscheck(Runner& r, int) {
  for (const FiniteQuantale& q : quantale_corpus()) {
    if (q.size() > 6) {
      r.note("skip " + q.name, "size " + std::to_string(q.size()) + " > 6");
      continue;
    }
    KrumlReport k = kruml_crosscheck(q, 6);
    r.note(q.name, "meet-of-primes=" + std::string(k.spatial_by_primes ? "true" : "false") +
                       " separated-by-points=" + std::string(k.separated ? "true" : "false") +
                       " points=" + std::to_string(k.point_count));
    r.check(q.name + ": the two spatiality notions agree", k.agree());
  }
}

void s_pushout_collapse(Runner& r, int) {
  ExactMatrix p(2, 2);
  p.at(0, 0) = GaussRational(1);
  r.check("(a,b) |-> a*p + b*(1-p) is a unital *-hom for p = E11",
          !star_hom_violation(projection_pair_hom(p)));
  CollapseFacts c = collapse_facts();
  r.note("Max f <(1,1)>", c.img_plus.str());
  r.note("Max f <(1,-1)>", c.img_minus.str());
  r.check("Max f <(1,1)> = <I2>", c.img_plus == msunit(kM2));
  r.check("Max f <(1,-1)> = <diag(1,-1)>",
          c.img_minus == span(kM2, {elem(kM2, {"1", "0", "0", "-1"})}));
  r.note("L*<I2>*R", c.top_side.str());
  r.note("L*<diag(1,-1)>*R", c.zero_side.str());
  r.check("L*<I2>*R = M2 (rank 4)", c.top_side == mstop(kM2) && c.top_side.rank() == 4);
  r.check("L*<diag(1,-1)>*R = 0 (rank 0)",
          c.zero_side == msbottom(kM2) && c.zero_side.rank() == 0);
}

void s_spmax_m2_nontrivial(Runner& r, int) {
  Subspace unit = msunit(kM2), zero = msbottom(kM2);
  r.note("carrier", "subspaces of the row module of M2");
  std::vector<ExactMatrix> pool = {ExactMatrix(1, 2), ExactMatrix(1, 2), ExactMatrix::identity(2)};
  pool[0].at(0, 0) = GaussRational(1);
  pool[1].at(0, 0) = GaussRational(1);
  pool[1].at(0, 1) = GaussRational(1);
  for (const auto& w : pool) {
    r.check("<I2> acts as the identity on " + w.str(),
            hilbert_point_action(unit, 0, w) == w);
    r.check("0 kills " + w.str(), hilbert_point_action(zero, 0, w).rows == 0);
  }
  r.check("the point tells <I2> and 0 apart", m2_point_separates_unit());
}

void s_no_natural_spatialization(Runner& r, int) {
  Subspace plus = span(kC2, {elem(kC2, {"1", "1"})});
  Subspace minus = span(kC2, {elem(kC2, {"1", "-1"})});
  DiagonalSpatialization spat = spatialization_diagonal(2);
  r.note("step 1", "the point quotient of Max C^2 identifies <(1,1)>, <(1,-1)> and top");
  r.check("<(1,1)>, <(1,-1)> and top share a class",
          spat.index_of(plus) == spat.index_of(mstop(kC2)) &&
              spat.index_of(minus) == spat.index_of(mstop(kC2)));
  CollapseFacts c = collapse_facts();
  r.note("step 2", "a factoring through the quotient forces Max f <(1,1)> and Max f <(1,-1)> together");
  r.note("L*<I2>*R", c.top_side.str());
  r.note("L*<diag(1,-1)>*R", c.zero_side.str());
  r.check("merging the images collapses top to 0",
          c.top_side == mstop(kM2) && c.zero_side == msbottom(kM2));
  r.note("step 3", "yet the row-module point of M2 separates <I2> from 0");
  r.check("the point quotient of Max M2 is not trivial", m2_point_separates_unit());
}

void s_coproduct_not_preserved(Runner& r, int) {
  ObstructionReport o = coproduct_obstruction_check();
  r.note("generators", "(z,z,w,w) and (z',w',z',w') spanning lines of C^4");
  for (int mask = 0; mask < 16; ++mask) {
    std::string pattern = "(";
    for (int i = 0; i < 4; ++i) {
      if (i) pattern += ",";
      pattern += std::to_string((mask >> i) & 1);
    }
    pattern += ")";
    std::string via = "unreachable";
    if (o.reachable[mask]) {
      const auto& w = o.witness[mask];
      via = "z=" + std::to_string(w[0]) + " w=" + std::to_string(w[1]) +
            " z'=" + std::to_string(w[2]) + " w'=" + std::to_string(w[3]);
    }
    r.note("pattern " + pattern, via);
  }
  r.check("subspace products match the coordinatewise pattern", o.exact_matches_symbolic);
  r.check("both generator families are closed under products", o.families_closed);
  r.check("one zero coordinate forces at least two", o.one_zero_forces_two);
  r.check("distinct atoms never join to an atom", o.atoms_not_joins);
  r.check("<(1,0,1,1)> is unreachable", o.separating_target_unreachable);
  r.check("<(1,1,1,1)> is reachable", o.reachable[15]);
}

void s_product_not_preserved(Runner& r, int) {
  std::vector<Subspace> five = {msbottom(kC2), span(kC2, {elem(kC2, {"1", "0"})}),
                                span(kC2, {elem(kC2, {"0", "1"})}),
                                span(kC2, {elem(kC2, {"1", "1"})}), mstop(kC2)};
  for (size_t i = 0; i < five.size(); ++i)
    r.note("element " + std::to_string(i + 1), five[i].str());
  bool distinct = true;
  for (size_t i = 0; i < five.size(); ++i)
    for (size_t j = i + 1; j < five.size(); ++j) distinct = distinct && five[i] != five[j];
  r.check("the five subspaces of C^2 are pairwise distinct", distinct);
  FiniteQuantale mc = locale_quantale(chain(2), "max-C", true);
  FiniteQuantale prod = direct_product(mc, mc);
  r.note("Max C x Max C", std::to_string(prod.size()) + " elements");
  r.check("the coordinatewise product has exactly 4 elements", prod.size() == 4);
  r.check("5 > 4, so Max C^2 is not the product", static_cast<int>(five.size()) > prod.size());
}

void s_faithful_sample(Runner& r, int) {
  std::vector<Subspace> atoms = {span(kC2, {elem(kC2, {"1", "0"})}),
                                 span(kC2, {elem(kC2, {"0", "1"})}),
                                 span(kC2, {elem(kC2, {"1", "1"})})};
  for (const Subspace& x : atoms) r.note("atom", x.str());
  auto separated = [&](const StarHom& f, const StarHom& g) {
    for (const Subspace& x : atoms)
      if (max_functor(f, x) != max_functor(g, x)) return true;
    return false;
  };

  std::vector<StarHom> diag = enumerate_diagonal_homs(2, 2);
  r.note("coordinate substitutions C^2 -> C^2", std::to_string(diag.size()));
  bool diag_ok = diag.size() == 4;
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) diag_ok = diag_ok && separated(diag[i], diag[j]);
  r.check("all 4 are told apart by their Max images", diag_ok);

  std::vector<std::vector<std::string>> ps = {
      {"1", "0", "0", "0"},          {"0", "0", "0", "1"},
      {"1/2", "1/2", "1/2", "1/2"},  {"1/2", "0-1/2i", "0+1/2i", "1/2"},
      {"1", "0", "0", "1"},          {"0", "0", "0", "0"}};
  std::vector<StarHom> bundle;
  for (const auto& entries : ps) {
    AlgElement p = elem(kM2, entries);
    StarHom f = projection_pair_hom(p.mats[0]);
    bundle.push_back(f);
  }
  r.note("projection-pair maps C^2 -> M2", std::to_string(bundle.size()));
  bool bundle_ok = true;
  for (const StarHom& f : bundle) bundle_ok = bundle_ok && !star_hom_violation(f);
  r.check("all 6 are unital *-homs", bundle_ok);
  bool bundle_sep = true;
  for (size_t i = 0; i < bundle.size(); ++i)
    for (size_t j = i + 1; j < bundle.size(); ++j)
      bundle_sep = bundle_sep && separated(bundle[i], bundle[j]);
  r.check("all 6 are told apart by their Max images", bundle_sep);
}

void s_commutative_reflection(Runner& r, int) {
  CommutativeReflection rc = commutative_reflection(Algebra{{2, 1}});
  r.note("reflection of blocks=[2,1]", rc.reflection.str());
  r.check("M2 (+) C reflects to C", rc.reflection == Algebra{{1}});
  r.check("its closed-ideal frame has 2 elements", rc.ideals.size() == 2);

  CommutativeReflection rm = commutative_reflection(kM2);
  r.note("reflection of blocks=[2]", rm.reflection.str());
  r.check("the simple algebra M2 reflects to 0", rm.reflection.blocks.empty());
  r.check("its closed-ideal frame is trivial", rm.ideals.size() == 1);

  CommutativeReflection rd = commutative_reflection(kC2);
  r.note("reflection of blocks=[1,1]", rd.reflection.str());
  r.check("C^2 is its own reflection with frame 2^2", rd.reflection == kC2 && rd.ideals.size() == 4);
}

struct Entry {
  ScenarioInfo info;
  void (*run)(Runner&, int);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"c2-diagonal-not-prime", "Section 3", "the diagonal line of C^2 is maximal but not prime"},
       s_c2_diagonal_not_prime},
      {{"commutative-reflection", "Theorem 4.6",
        "M2 (+) C reflects to C with ideal frame 2; simple M2 reflects to 0"},
       s_commutative_reflection},
      {{"coproduct-not-preserved", "Theorem 5.1",
        "generator-atom products in Max C^4 never reach <(1,0,1,1)>"},
       s_coproduct_not_preserved},
      {{"faithful-sample", "Theorem 5.3",
        "distinct unital *-homs have distinct Max images on three atoms"},
       s_faithful_sample},
      {{"kruml-crosscheck", "Theorem 3.4",
        "meet-of-primes spatiality agrees with separation by irreducible representations"},
       s_kruml_crosscheck},
      {{"m2-not-spatial", "Example 3.5", "the symmetric subspace of M2 is maximal but not prime"},
       s_m2_not_spatial},
      {{"no-natural-spatialization", "Theorem 3.11",
        "factoring the diagonal embedding through the point quotient forces top = 0, "
        "yet the M2 point quotient is not trivial"},
       s_no_natural_spatialization},
      {{"product-not-preserved", "Theorem 5.2",
        "Max C^2 has five distinct elements, Max C x Max C only four"},
       s_product_not_preserved},
      {{"pushout-collapse", "Lemma 3.9",
        "the diagonal lines map to <I2> and <diag(1,-1)>, whose squeezed products are M2 and 0"},
       s_pushout_collapse},
      {{"spatialization-cn", "Theorem 3.7",
        "the point-identification classes of Max C^n form the boolean frame 2^n"},
       s_spatialization_cn},
      {{"spmax-m2-nontrivial", "Lemma 3.10", "the row-module point of M2 separates <I2> from 0"},
       s_spmax_m2_nontrivial},
  };
  return table;
}

}  // namespace

const std::vector<ScenarioInfo>& list_scenarios() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

Report run_scenario(const std::string& name, int n) {
  for (const Entry& e : entries()) {
    if (e.info.name != name) continue;
    if (name == "spatialization-cn" && (n < 1 || n > 8))
      throw std::invalid_argument("spatialization-cn: n out of range 1..8");
    Runner r;
    r.rep.name = e.info.name;
    r.rep.citation = e.info.citation;
    e.run(r, n);
    r.rep.pass = r.ok;
    return r.rep;
  }
  throw std::invalid_argument("unknown-scenario: " + name);
}

}  // namespace qlab
