#include "qlab/io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::vector<std::string> name_list(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_array()) fail(std::string(where) + ": missing array '" + key + "'");
  std::vector<std::string> names;
  for (const auto& e : j[key]) {
    if (!e.is_string()) fail(std::string(where) + ": '" + key + "' entries must be strings");
    names.push_back(e.get<std::string>());
  }
  return names;
}

int resolve(const json& e, const std::vector<std::string>& names, const char* where) {
  if (e.is_number_integer()) {
    int i = e.get<int>();
    if (i < 0 || i >= static_cast<int>(names.size()))
      fail(std::string(where) + ": index " + std::to_string(i) + " out of range");
    return i;
  }
  if (e.is_string()) {
    const std::string s = e.get<std::string>();
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    fail(std::string(where) + ": unknown element '" + s + "'");
  }
  fail(std::string(where) + ": element references must be indices or names");
}

/// Relation matrix from "leq" pairs, closed reflexively and transitively.
std::vector<uint8_t> closed_relation(const json& j, const std::vector<std::string>& names,
                                     const char* where) {
  const int n = static_cast<int>(names.size());
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  if (!j.contains("leq") || !j["leq"].is_array()) fail(std::string(where) + ": missing array 'leq'");
  for (const auto& pair : j["leq"]) {
    if (!pair.is_array() || pair.size() != 2) fail(std::string(where) + ": 'leq' entries must be pairs");
    leq[static_cast<size_t>(resolve(pair[0], names, where)) * n + resolve(pair[1], names, where)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (leq[static_cast<size_t>(a) * n + k])
        for (int b = 0; b < n; ++b)
          if (leq[static_cast<size_t>(k) * n + b]) leq[static_cast<size_t>(a) * n + b] = 1;
  return leq;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail("'" + path + "' is not valid JSON");
  return j;
}

SupLattice lattice_from_json(const json& j) {
  std::vector<std::string> names = name_list(j, "elements", "lattice");
  std::vector<uint8_t> leq = closed_relation(j, names, "lattice");
  const int n = static_cast<int>(names.size());
  return from_leq_matrix(n, leq, std::move(names));
}

Poset poset_from_json(const json& j) {
  std::vector<std::string> names = name_list(j, "points", "poset");
  std::vector<uint8_t> leq = closed_relation(j, names, "poset");
  const int n = static_cast<int>(names.size());
  return make_poset(n, std::move(leq), std::move(names));
}

FiniteQuantale quantale_from_json(const json& j) {
  if (!j.contains("lattice")) fail("quantale: missing 'lattice'");
  FiniteQuantale q;
  q.lattice = lattice_from_json(j["lattice"]);
  const int n = q.lattice.size;

  if (!j.contains("product") || !j["product"].is_array() ||
      static_cast<int>(j["product"].size()) != n)
    fail("quantale: 'product' must be a " + std::to_string(n) + "-row table");
  for (const auto& row : j["product"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("quantale: 'product' rows must have " + std::to_string(n) + " entries");
    for (const auto& e : row) q.product_tab.push_back(resolve(e, q.lattice.names, "quantale product"));
  }

  if (j.contains("unit") && !j["unit"].is_null())
    q.unit = resolve(j["unit"], q.lattice.names, "quantale unit");
  if (j.contains("star") && !j["star"].is_null()) {
    if (!j["star"].is_array() || static_cast<int>(j["star"].size()) != n)
      fail("quantale: 'star' must list one image per element");
    std::vector<int> star;
    for (const auto& e : j["star"]) star.push_back(resolve(e, q.lattice.names, "quantale star"));
    q.star = std::move(star);
  }
  if (j.contains("name") && j["name"].is_string()) q.name = j["name"].get<std::string>();
  return q;
}

QuantaleHom hom_from_json(std::shared_ptr<const FiniteQuantale> source, const json& j) {
  if (!source) fail("hom: null source");
  if (!j.contains("target")) fail("hom: missing 'target'");
  auto target = std::make_shared<FiniteQuantale>(quantale_from_json(j["target"]));
  if (!j.contains("map") || !j["map"].is_array() ||
      static_cast<int>(j["map"].size()) != source->size())
    fail("hom: 'map' must list one image per source element");
  QuantaleHom h{std::move(source), target, {}};
  for (const auto& e : j["map"]) h.map.push_back(resolve(e, target->lattice.names, "hom map"));
  return h;
}

Subspace subspace_from_json(const Algebra& a, const json& j) {
  if (!j.is_array()) fail("subspace: expected a list of spanning elements");
  std::vector<AlgElement> spanners;
  for (const auto& el : j) {
    if (!el.is_array() || el.size() != a.blocks.size())
      fail("subspace: each element must list one matrix per block of " + a.str());
    AlgElement x = AlgElement::zero(a);
    for (size_t k = 0; k < a.blocks.size(); ++k) {
      const int nk = a.blocks[k];
      const auto& m = el[k];
      if (!m.is_array() || static_cast<int>(m.size()) != nk)
        fail("subspace: block " + std::to_string(k) + " must be a " + std::to_string(nk) + "x" +
             std::to_string(nk) + " matrix");
      for (int r = 0; r < nk; ++r) {
        const auto& row = m[r];
        if (!row.is_array() || static_cast<int>(row.size()) != nk)
          fail("subspace: block " + std::to_string(k) + " must be a " + std::to_string(nk) + "x" +
               std::to_string(nk) + " matrix");
        for (int c = 0; c < nk; ++c) {
          if (!row[c].is_string()) fail("subspace: matrix entries are GaussRational strings");
          x.mats[k].at(r, c) = GaussRational::parse(row[c].get<std::string>());
        }
      }
    }
    spanners.push_back(std::move(x));
  }
  return span(a, spanners);
}

}  // namespace qlab
