#include "qlab/corpus.hpp"

namespace qlab {

namespace {

FiniteQuantale with_product(SupLattice lat, std::vector<int> tab, std::optional<int> unit,
                            std::optional<std::vector<int>> star, std::string name) {
  FiniteQuantale q;
  q.lattice = std::move(lat);
  q.product_tab = std::move(tab);
  q.unit = unit;
  q.star = std::move(star);
  q.name = std::move(name);
  return q;
}

}  // namespace

FiniteQuantale m2_pattern_quantale() {
  // indices: 0, E=<E11>(1), R=top row(2), C=left column(3), P=symmetric(4), 1=M2(5)
  SupLattice lat = from_leq(6, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5},
                                {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                {2, 5}, {3, 5}, {4, 5}},
                          {"0", "E", "R", "C", "P", "1"});
  // product restricted from Max M2; every pairwise product of the six
  // subspaces lands back in the six (checked exactly in the maxspec tests)
  std::vector<int> tab = {
      0, 0, 0, 0, 0, 0,   // 0 * -
      0, 1, 2, 1, 2, 2,   // E * -
      0, 1, 2, 1, 2, 2,   // R * -
      0, 3, 5, 3, 5, 5,   // C * -
      0, 3, 5, 3, 5, 5,   // P * -
      0, 3, 5, 3, 5, 5};  // 1 * -
  return with_product(std::move(lat), std::move(tab), std::nullopt,
                      std::vector<int>{0, 1, 3, 2, 4, 5}, "m2-pattern");
}

FiniteQuantale interior_chain3_quantale() {
  SupLattice lat = chain(3);
  std::vector<int> tab = lat.meet_tab;
  tab[1 * 3 + 1] = 0;  // a*a = 0
  return with_product(std::move(lat), std::move(tab), 2, std::vector<int>{0, 1, 2},
                      "interior-chain3");
}

FiniteQuantale zero_chain3_quantale() {
  return with_product(chain(3), std::vector<int>(9, 0), std::nullopt, std::nullopt, "zero-chain3");
}

const std::vector<FiniteQuantale>& quantale_corpus() {
  static const std::vector<FiniteQuantale> corpus = [] {
    std::vector<FiniteQuantale> v;
    v.push_back(locale_quantale(chain(1), "trivial", true));
    v.push_back(locale_quantale(chain(2), "chain2", true));
    v.push_back(locale_quantale(chain(3), "chain3", true));
    v.push_back(locale_quantale(chain(4), "chain4", true));
    v.push_back(locale_quantale(boolean_lattice(2), "boolean4", true));
    v.push_back(locale_quantale(boolean_lattice(3), "boolean8", true));
    v.push_back(zero_chain3_quantale());
    v.push_back(interior_chain3_quantale());
    v.push_back(m2_pattern_quantale());
    FiniteQuantale e3 = endo_quantale(chain(3));
    e3.name = "endo-chain3";
    v.push_back(std::move(e3));
    FiniteQuantale e4 = endo_quantale(boolean_lattice(2));
    e4.name = "endo-boolean4";
    v.push_back(std::move(e4));
    return v;
  }();
  return corpus;
}

}  // namespace qlab
